#include "hilbloc/linsolve.hpp"

#include <stdexcept>

namespace hilbloc {

SolveResult solve_exact(Matrix a, std::vector<BigRational> b) {
  std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
  std::size_t cols = rows ? a[0].size() : 0;
  SolveResult r;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t piv = row;
    while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
    if (piv == rows) {
      r.free_columns.push_back(static_cast<int>(col));
      continue;
    }
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    BigRational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      BigRational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    r.pivot_columns.push_back(static_cast<int>(col));
    if (++row == rows) {
      for (std::size_t c = col + 1; c < cols; ++c) r.free_columns.push_back(static_cast<int>(c));
      break;
    }
  }
  r.rank = static_cast<int>(row);
  for (std::size_t i = row; i < rows; ++i)
    if (sgn(b[i]) != 0) r.consistent = false;
  r.x.assign(cols, BigRational(0));
  for (std::size_t k = 0; k < r.pivot_columns.size(); ++k) r.x[r.pivot_columns[k]] = b[k];
  return r;
}

}  // namespace hilbloc
