#pragma once

#include <string>
#include <vector>

#include "hilbloc/mpoly.hpp"
#include "hilbloc/rational.hpp"

namespace hilbloc {

// Quotient of polynomials in (t1, t2, t). Always normalized: num and den
// share no common factor and den is monic under GrlexLess.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  explicit RatFunc(const BigRational& c) : num_(c), den_(1) {}
  explicit RatFunc(MPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  // Throws DivisionByZero when y == 0.
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

enum class RfOp { add, mul, div };
RatFunc rf_arith(const RatFunc& x, const RatFunc& y, RfOp op);

// Dense univariate polynomial in z; trailing zeros trimmed (zero = empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<BigRational> coeffs);

  const std::vector<BigRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigRational at(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(0); }
  BigRational lead() const { return c_.back(); }
  // Largest k with z^k dividing the polynomial (0 for the zero polynomial).
  int valuation() const;

  friend UPoly operator+(const UPoly& x, const UPoly& y);
  friend UPoly operator-(const UPoly& x, const UPoly& y);
  friend UPoly operator*(const UPoly& x, const UPoly& y);
  friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

// Quotient and remainder over Q; throws DivisionByZero for b == 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);

class URatFunc {
 public:
  URatFunc() : den_(std::vector<BigRational>{BigRational(1)}) {}
  URatFunc(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  friend URatFunc operator+(const URatFunc& x, const URatFunc& y);
  friend URatFunc operator*(const URatFunc& x, const URatFunc& y);
  friend bool operator==(const URatFunc& x, const URatFunc& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  std::string to_string() const;

 private:
  UPoly num_;
  UPoly den_;
};

// Specialization ray: t1 <- z, t2 <- rho*z, t <- fiber (held constant while
// the base parameters go to zero).
struct Direction {
  BigRational rho;
  BigRational fiber{1};
};

UPoly specialize(const MPoly& p, const Direction& dir);

// Throws DegenerateDirection when the denominator vanishes identically.
URatFunc rf_specialize(const RatFunc& x, const Direction& dir);
URatFunc rf_specialize(const RatFunc& x, const BigRational& rho);

// Throws PoleAtZero when the reduced denominator vanishes at z = 0.
BigRational rf_value_at_zero(const URatFunc& x);

}  // namespace hilbloc
