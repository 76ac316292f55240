#pragma once

#include <vector>

#include "hilbloc/rational.hpp"

namespace hilbloc {

using Matrix = std::vector<std::vector<BigRational>>;

struct SolveResult {
  int rank = 0;
  std::vector<int> pivot_columns;
  std::vector<int> free_columns;
  bool consistent = true;
  // Particular solution with the free variables set to zero.
  std::vector<BigRational> x;
};

// Exact Gauss-Jordan elimination on [A | b].
SolveResult solve_exact(Matrix a, std::vector<BigRational> b);

}  // namespace hilbloc
