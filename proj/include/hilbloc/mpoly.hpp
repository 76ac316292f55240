#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbloc/linform.hpp"
#include "hilbloc/rational.hpp"

namespace hilbloc {

// Variables of the torus parameter ring, in monomial-order priority.
enum Var : int { kVarT1 = 0, kVarT2 = 1, kVarFiber = 2 };
inline constexpr int kNumVars = 3;

using Exponent = std::array<std::uint32_t, kNumVars>;

// Graded lexicographic order with t1 > t2 > t; the greatest key in a map
// ordered by this comparator is the leading monomial.
struct GrlexLess {
  bool operator()(const Exponent& x, const Exponent& y) const;
};

// Sparse multivariate polynomial in (t1, t2, t) with exact rational
// coefficients. No zero coefficient is ever stored.
class MPoly {
 public:
  using Terms = std::map<Exponent, BigRational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(const BigRational& c);
  explicit MPoly(long c) : MPoly(BigRational(c)) {}

  static MPoly monomial(const Exponent& e, const BigRational& c);
  static MPoly variable(int var);
  static MPoly from_linform(const LinForm& f);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_term() const;

  // Leading term under GrlexLess. Precondition: nonzero.
  const std::pair<const Exponent, BigRational>& leading() const;

  unsigned degree_in(int var) const;
  unsigned total_degree() const;
  bool contains(int var) const { return degree_in(var) > 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& scale(const BigRational& k);

  friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
  friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
  friend MPoly operator*(MPoly x, const MPoly& y) { return x *= y; }
  friend bool operator==(const MPoly& x, const MPoly& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const BigRational& c);
  Terms terms_;
};

MPoly pow(const MPoly& p, unsigned k);

// Scaled so the leading coefficient is 1; zero stays zero.
MPoly monic(const MPoly& p);

// Quotient a / b when b divides a exactly; throws std::domain_error otherwise.
MPoly divide_exact(const MPoly& a, const MPoly& b);

// Coefficients of var^0, var^1, ... (each free of var).
std::vector<MPoly> coefficients_in(const MPoly& p, int var);
MPoly from_coefficients(const std::vector<MPoly>& coeffs, int var);

// Monic greatest common divisor (content + primitive PRS, recursive in the
// variables). gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace hilbloc
