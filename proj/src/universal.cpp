#include "hilbloc/universal.hpp"

#include <numeric>
#include <stdexcept>

#include "hilbloc/errors.hpp"
#include "hilbloc/linsolve.hpp"

namespace hilbloc {

std::string to_string(UVar v) {
  static const char* names[] = {"M2", "MK", "K2", "E", "C2", "MC", "EC"};
  return names[static_cast<int>(v)];
}

UniversalPoly::UniversalPoly(std::vector<UVar> vars, const BigRational& c) : vars_(std::move(vars)) {
  add_term(UExponent{}, c);
}

UniversalPoly UniversalPoly::variable(std::vector<UVar> vars, UVar v) {
  UniversalPoly p(std::move(vars));
  UExponent e{};
  e[static_cast<int>(v)] = 1;
  p.add_term(e, BigRational(1));
  return p;
}

unsigned UniversalPoly::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

void UniversalPoly::add_term(const UExponent& e, const BigRational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BigRational UniversalPoly::coefficient(const UExponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

UniversalPoly& UniversalPoly::operator+=(const UniversalPoly& o) {
  if (vars_.empty()) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UniversalPoly& UniversalPoly::operator-=(const UniversalPoly& o) {
  if (vars_.empty()) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UniversalPoly operator*(const UniversalPoly& x, const UniversalPoly& y) {
  UniversalPoly r(x.vars_.empty() ? y.vars_ : x.vars_);
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) {
      UExponent e;
      for (int i = 0; i < kNumUVars; ++i) e[i] = ex[i] + ey[i];
      r.add_term(e, cx * cy);
    }
  return r;
}

UniversalPoly UniversalPoly::scaled(const BigRational& k) const {
  UniversalPoly r(vars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * k);
  return r;
}

std::string UniversalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int i = 0; i < kNumUVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += hilbloc::to_string(static_cast<UVar>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    BigRational mag = abs(c);
    if (mono.empty()) {
      out += hilbloc::to_string(mag);
    } else {
      if (mag != 1) out += hilbloc::to_string(mag) + "*";
      out += mono;
    }
  }
  return out;
}

UExponent monomial_exponent(std::initializer_list<std::pair<UVar, unsigned>> powers) {
  UExponent e{};
  for (auto [v, k] : powers) e[static_cast<int>(v)] += k;
  return e;
}

namespace {

std::array<BigRational, kNumUVars> values(const SurfaceInvariants& inv, std::array<bool, kNumUVars>& have) {
  std::array<BigRational, kNumUVars> v;
  v[0] = inv.M2;
  v[1] = inv.MK;
  v[2] = inv.K2;
  v[3] = inv.e;
  v[4] = inv.C2;
  v[5] = inv.MC;
  v[6] = inv.eC;
  have = {true, true, true, true, inv.relative, inv.relative, inv.relative};
  return v;
}

BigRational eval_monomial(const UExponent& e, const std::array<BigRational, kNumUVars>& v) {
  BigRational r(1);
  for (int i = 0; i < kNumUVars; ++i)
    for (std::uint32_t k = 0; k < e[i]; ++k) r *= v[i];
  return r;
}

const std::vector<UVar> kAbsoluteVars = {UVar::M2, UVar::MK, UVar::K2, UVar::E};
const std::vector<UVar> kRelativeVars = {UVar::C2, UVar::MC};

std::string monomial_name(const UExponent& e) {
  UniversalPoly p;
  p.add_term(e, BigRational(1));
  return p.to_string();
}

void append_samples(std::vector<Sample>& out, std::vector<Sample> more) {
  for (auto& s : more) {
    bool merged = false;
    for (const auto& t : out) {
      if (t.inv.M2 == s.inv.M2 && t.inv.MK == s.inv.MK && t.inv.K2 == s.inv.K2 && t.inv.e == s.inv.e &&
          t.inv.C2 == s.inv.C2 && t.inv.MC == s.inv.MC && t.inv.relative == s.inv.relative) {
        int k = first_difference(t.z, s.z);
        if (k >= 0)
          throw NonzeroResidual(t.label + " and " + s.label + " share invariants but differ at q^" +
                                std::to_string(k));
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(s));
  }
}

// Solves rows * x = rhs over the given monomials, with a zero-residual check.
FitResult fit_monomials(const std::vector<UVar>& vars, const std::vector<UExponent>& basis, int n,
                        const std::vector<Sample>& family, const std::string& what) {
  Matrix a;
  std::vector<BigRational> b;
  for (const auto& s : family) {
    std::array<bool, kNumUVars> have;
    auto v = values(s.inv, have);
    std::vector<BigRational> row;
    for (const auto& e : basis) row.push_back(eval_monomial(e, v));
    a.push_back(std::move(row));
    if (n > s.z.order()) throw std::invalid_argument("sample " + s.label + " has too short a series");
    b.push_back(s.z[n]);
  }
  SolveResult sol = solve_exact(a, b);
  FitResult r;
  r.rank = sol.rank;
  r.unknowns = static_cast<int>(basis.size());
  r.samples = static_cast<int>(family.size());
  if (!sol.free_columns.empty()) {
    std::string names;
    for (int c : sol.free_columns) names += (names.empty() ? "" : ", ") + monomial_name(basis[c]);
    throw RankDeficient(what + " at n=" + std::to_string(n) + ": rank " + std::to_string(sol.rank) + " of " +
                        std::to_string(basis.size()) + "; undetermined monomials: " + names);
  }
  if (!sol.consistent) throw NonzeroResidual(what + " at n=" + std::to_string(n) + ": samples are not fitted exactly");
  r.poly = UniversalPoly(vars);
  for (std::size_t i = 0; i < basis.size(); ++i) r.poly.add_term(basis[i], sol.x[i]);
  return r;
}

FitResult fit_with_refit(const std::vector<UVar>& vars, int n, const std::vector<Sample>& family,
                         const std::string& what) {
  FitResult r = fit_monomials(vars, monomial_basis(vars, n), n, family, what);
  if (n < 1) return r;
  FitResult lower;
  try {
    lower = fit_monomials(vars, monomial_basis(vars, n - 1), n, family, what);
  } catch (const RankDeficient&) {
    return r;
  } catch (const NonzeroResidual&) {
    return r;
  }
  if (!(lower.poly == r.poly))
    throw NonzeroResidual(what + " at n=" + std::to_string(n) + ": lower-degree refit disagrees");
  r.lower_degree_fits = true;
  return r;
}

}  // namespace

BigRational eval_universal(const UniversalPoly& p, const SurfaceInvariants& inv) {
  std::array<bool, kNumUVars> have;
  auto v = values(inv, have);
  BigRational r;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < kNumUVars; ++i)
      if (e[i] && !have[i])
        throw std::invalid_argument("variable " + to_string(static_cast<UVar>(i)) + " is not available");
    r += c * eval_monomial(e, v);
  }
  return r;
}

std::vector<UExponent> monomial_basis(const std::vector<UVar>& vars, int d) {
  std::vector<UExponent> out;
  for (int deg = 0; deg <= d; ++deg) {
    std::vector<std::uint32_t> pw(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == vars.size()) {
        pw[i] = left;
        UExponent e{};
        for (std::size_t k = 0; k < vars.size(); ++k) e[static_cast<int>(vars[k])] = pw[k];
        out.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        pw[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (!vars.empty()) rec(rec, 0, deg);
  }
  return out;
}

std::vector<Sample> absolute_family(AssignmentKind kind, int order, const IntegrateOptions& opts) {
  std::vector<Sample> out;
  std::vector<Sample> batch;
  ToricSurface p2 = projective_plane();
  for (std::int64_t m = -3; m <= 3; ++m)
    batch.push_back({"p2 O(" + std::to_string(m) + ")", intersection_numbers(p2, plane_bundle(m)),
                     series(kind, p2, plane_bundle(m), order, opts)});
  for (std::int64_t a = 0; a <= 3; ++a) {
    ToricSurface h = hirzebruch(a);
    for (std::int64_t x = -2; x <= 2; ++x)
      for (std::int64_t y = -2; y <= 2; ++y) {
        EqLineBundle m = hirzebruch_bundle(x, y);
        batch.push_back({"F" + std::to_string(a) + " " + std::to_string(x) + "C0+" + std::to_string(y) + "f",
                         intersection_numbers(h, m), series(kind, h, m, order, opts)});
      }
  }
  append_samples(out, std::move(batch));
  return out;
}

std::vector<Sample> relative_family(AssignmentKind kind, int order, const IntegrateOptions& opts) {
  std::vector<Sample> out;
  std::vector<Sample> batch;
  for (std::int64_t a = -3; a <= 3; ++a) {
    ToricSurface t = ToricSurface::total_space(a);
    for (std::int64_t d = 0; d <= 3; ++d) {
      EqLineBundle m = total_space_bundle(d);
      batch.push_back({"tot(" + std::to_string(a) + ") d=" + std::to_string(d),
                       intersection_numbers(t, m, ToricSurface::kZeroSectionRay), series(kind, t, m, order, opts)});
    }
  }
  append_samples(out, std::move(batch));
  return out;
}

FitResult fit_absolute(int n, const std::vector<Sample>& family) {
  if (n < 0) throw std::invalid_argument("negative n");
  FitResult r;
  r.samples = static_cast<int>(family.size());
  r.unknowns = 4 * n;
  std::vector<UniversalPoly> logs(n + 1, UniversalPoly(kAbsoluteVars));
  std::vector<QSeries> sample_logs;
  for (const auto& s : family) sample_logs.push_back(qs_log(s.z.truncated(n)));
  std::vector<UExponent> linear = monomial_basis(kAbsoluteVars, 1);
  linear.erase(linear.begin());
  for (int k = 1; k <= n; ++k) {
    Matrix a;
    std::vector<BigRational> b;
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::array<bool, kNumUVars> have;
      auto v = values(family[i].inv, have);
      std::vector<BigRational> row;
      for (const auto& e : linear) row.push_back(eval_monomial(e, v));
      a.push_back(std::move(row));
      b.push_back(sample_logs[i][k]);
    }
    SolveResult sol = solve_exact(a, b);
    r.rank += sol.rank;
    if (!sol.free_columns.empty())
      throw RankDeficient("log-linear fit at q^" + std::to_string(k) + ": rank " + std::to_string(sol.rank) + " of 4");
    if (!sol.consistent)
      throw NonzeroResidual("log-linear fit at q^" + std::to_string(k) + ": log Z is not linear in the invariants");
    for (std::size_t j = 0; j < linear.size(); ++j) logs[k].add_term(linear[j], sol.x[j]);
  }
  // exp: n E_n = sum_k k L_k E_{n-k}
  std::vector<UniversalPoly> ex(n + 1, UniversalPoly(kAbsoluteVars));
  ex[0] = UniversalPoly(kAbsoluteVars, BigRational(1));
  for (int m = 1; m <= n; ++m) {
    UniversalPoly acc(kAbsoluteVars);
    for (int k = 1; k <= m; ++k) acc += (logs[k] * ex[m - k]).scaled(BigRational(k));
    ex[m] = acc.scaled(BigRational(1, m));
  }
  r.poly = ex[n];
  for (const auto& s : family)
    if (eval_universal(r.poly, s.inv) != s.z[n])
      throw NonzeroResidual("log-linear fit at n=" + std::to_string(n) + " misses sample " + s.label);
  return r;
}

FitResult fit_absolute_monomial(int n, const std::vector<Sample>& family) {
  return fit_with_refit(kAbsoluteVars, n, family, "absolute monomial fit");
}

FitResult fit_relative_normal(int n, const std::vector<Sample>& family) {
  for (const auto& s : family)
    if (!s.inv.relative || s.inv.eC != 2) throw std::invalid_argument("relative fit needs genus 0 relative samples");
  return fit_with_refit(kRelativeVars, n, family, "relative fit");
}

UniversalPoly xi_coefficient_polynomial(const UniversalPoly& x, int n) {
  const std::vector<UVar>& vars = x.variables();
  std::vector<UniversalPoly> r(n + 1, UniversalPoly(vars));
  r[0] = UniversalPoly(vars, BigRational(1));
  // binom[k] = x (x+1) ... (x+k-1) / k!
  std::vector<UniversalPoly> binom(n + 1, UniversalPoly(vars));
  binom[0] = UniversalPoly(vars, BigRational(1));
  for (int k = 1; k <= n; ++k)
    binom[k] = (binom[k - 1] * (x + UniversalPoly(vars, BigRational(k - 1)))).scaled(BigRational(1, k));
  for (int m = 1; m <= n; ++m) {
    std::vector<UniversalPoly> next(n + 1, UniversalPoly(vars));
    for (int i = 0; i <= n; ++i) {
      if (r[i].is_zero()) continue;
      for (int k = 0; i + k * m <= n; ++k) next[i + k * m] += r[i] * binom[k];
    }
    r = std::move(next);
  }
  return r[n];
}

}  // namespace hilbloc
