#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hilbloc/localize.hpp"
#include "hilbloc/qseries.hpp"
#include "hilbloc/rational.hpp"
#include "hilbloc/toric.hpp"

namespace hilbloc {

enum class UVar : int { M2, MK, K2, E, C2, MC, EC };
inline constexpr int kNumUVars = 7;

std::string to_string(UVar v);

using UExponent = std::array<std::uint32_t, kNumUVars>;

// Polynomial in the intrinsic invariants. Exponents are indexed by UVar;
// variables() lists the ones the polynomial is declared over.
class UniversalPoly {
 public:
  UniversalPoly() = default;
  explicit UniversalPoly(std::vector<UVar> vars) : vars_(std::move(vars)) {}
  UniversalPoly(std::vector<UVar> vars, const BigRational& c);

  static UniversalPoly variable(std::vector<UVar> vars, UVar v);

  const std::vector<UVar>& variables() const { return vars_; }
  const std::map<UExponent, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const UExponent& e, const BigRational& c);
  BigRational coefficient(const UExponent& e) const;

  UniversalPoly& operator+=(const UniversalPoly& o);
  UniversalPoly& operator-=(const UniversalPoly& o);
  friend UniversalPoly operator+(UniversalPoly x, const UniversalPoly& y) { return x += y; }
  friend UniversalPoly operator-(UniversalPoly x, const UniversalPoly& y) { return x -= y; }
  friend UniversalPoly operator*(const UniversalPoly& x, const UniversalPoly& y);
  UniversalPoly scaled(const BigRational& k) const;
  friend bool operator==(const UniversalPoly& x, const UniversalPoly& y) { return x.terms_ == y.terms_; }

  // "3/2*C2^2 - 5*MC + 24"
  std::string to_string() const;

 private:
  std::vector<UVar> vars_;
  std::map<UExponent, BigRational> terms_;
};

UExponent monomial_exponent(std::initializer_list<std::pair<UVar, unsigned>> powers);

// Throws std::invalid_argument when a variable of p is not available in inv.
BigRational eval_universal(const UniversalPoly& p, const SurfaceInvariants& inv);

// Monomials of total degree <= d in vars, graded then lexicographic.
std::vector<UExponent> monomial_basis(const std::vector<UVar>& vars, int d);

struct Sample {
  std::string label;
  SurfaceInvariants inv;
  QSeries z;
};

// P^2 with O(m), m in [-3,3]; F_a with x C0 + y f, a in [0,3], x,y in [-2,2].
// Samples sharing an invariant vector are merged after checking their series agree.
std::vector<Sample> absolute_family(AssignmentKind kind, int order, const IntegrateOptions& opts = {});
// Tot(O_P1(a)) with pi^*O(d) and the trivial fiber lift, a in [-3,3], d in [0,3].
std::vector<Sample> relative_family(AssignmentKind kind, int order, const IntegrateOptions& opts = {});

struct FitResult {
  UniversalPoly poly;
  int rank = 0;
  int unknowns = 0;
  int samples = 0;
  // Refitting with the basis of degree n-1 gave zero residual and the same polynomial.
  bool lower_degree_fits = false;
};

// Log-linear fit: log Z is fitted coefficientwise as a linear form in
// (M2, MK, K2, E) without constant term, then exponentiated. Throws
// RankDeficient or NonzeroResidual.
FitResult fit_absolute(int n, const std::vector<Sample>& family);

// Direct fit on all monomials of degree <= n in (M2, MK, K2, E).
FitResult fit_absolute_monomial(int n, const std::vector<Sample>& family);

// Fit in (C2, MC) with e(C) frozen at 2.
FitResult fit_relative_normal(int n, const std::vector<Sample>& family);

// Coefficient of q^n in Xi(q)^(-x) for a polynomial exponent x.
UniversalPoly xi_coefficient_polynomial(const UniversalPoly& x, int n);

}  // namespace hilbloc
