#pragma once

#include <map>
#include <string>
#include <vector>

#include "hilbloc/linform.hpp"
#include "hilbloc/ratfunc.hpp"
#include "hilbloc/rational.hpp"

namespace hilbloc {

// coef * prod(num) / prod(den), optionally times the complete homogeneous
// symmetric polynomial h_{sym_degree}(sym_forms). Kept as lists of linear
// factors until the very end.
struct FactoredTerm {
  BigRational coef{1};
  std::vector<LinForm> num;
  std::vector<LinForm> den;
  int sym_degree = -1;
  std::vector<LinForm> sym_forms;
};

// h_k(x_1, ..., x_m) as a polynomial in (t1, t2, t).
MPoly complete_homogeneous(const std::vector<LinForm>& xs, int k);

// Exact symbolic value of the term.
RatFunc to_ratfunc(const FactoredTerm& t);

// A truncated Laurent series sum_{k >= valuation} c_k z^k, known exactly for
// k <= top.
struct LaurentSeries {
  int valuation = 0;
  int top = 0;
  std::vector<BigRational> coeffs;  // coeffs[i] is the coefficient of z^(valuation + i)
  bool zero = false;

  BigRational at(int k) const;
};

// Expands the term along dir up to z^top. Throws DegenerateDirection when a
// denominator factor vanishes identically.
LaurentSeries expand(const FactoredTerm& t, const Direction& dir, int top);

// Exact running sum of Laurent series truncated at a common top degree.
class LaurentAccumulator {
 public:
  explicit LaurentAccumulator(int top = 0) : top_(top) {}

  void add(const LaurentSeries& s);
  void merge(const LaurentAccumulator& o);

  int top() const { return top_; }
  BigRational at(int k) const;
  // Lowest degree with a nonzero coefficient, or top()+1 if none.
  int lowest_nonzero() const;
  bool has_pole() const { return lowest_nonzero() < 0; }
  const std::map<int, BigRational>& coeffs() const { return c_; }

 private:
  int top_;
  std::map<int, BigRational> c_;
};

}  // namespace hilbloc
