#include "hilbloc/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hilbloc {

namespace {

std::uint32_t degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponent& d, const Exponent& e) {
  for (int i = 0; i < kNumVars; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponent minus(const Exponent& e, const Exponent& d) {
  Exponent r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = e[i] - d[i];
  return r;
}

Exponent plus(const Exponent& e, const Exponent& d) {
  Exponent r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = e[i] + d[i];
  return r;
}

}  // namespace

bool GrlexLess::operator()(const Exponent& x, const Exponent& y) const {
  auto dx = degree(x), dy = degree(y);
  if (dx != dy) return dx < dy;
  return x < y;
}

MPoly::MPoly(const BigRational& c) {
  if (!hilbloc::is_zero(c)) terms_.emplace(Exponent{}, c);
}

MPoly MPoly::monomial(const Exponent& e, const BigRational& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

MPoly MPoly::variable(int var) {
  Exponent e{};
  e[var] = 1;
  return monomial(e, BigRational(1));
}

MPoly MPoly::from_linform(const LinForm& f) {
  MPoly p;
  p.add_term({1, 0, 0}, BigRational(static_cast<long>(f.a)));
  p.add_term({0, 1, 0}, BigRational(static_cast<long>(f.b)));
  p.add_term({0, 0, 1}, BigRational(static_cast<long>(f.c)));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

BigRational MPoly::constant_term() const {
  auto it = terms_.find(Exponent{});
  return it == terms_.end() ? BigRational(0) : it->second;
}

const std::pair<const Exponent, BigRational>& MPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

unsigned MPoly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[var]);
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, degree(e));
  return d;
}

void MPoly::add_term(const Exponent& e, const BigRational& c) {
  if (hilbloc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (hilbloc::is_zero(it->second)) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  MPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(plus(e1, e2), BigRational(c1 * c2));
  terms_ = std::move(r.terms_);
  return *this;
}

MPoly& MPoly::scale(const BigRational& k) {
  if (hilbloc::is_zero(k)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[kNumVars] = {"t1", "t2", "t"};
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && degree(e) > 0;
    if (!unit) out += hilbloc::to_string(mag);
    bool first = unit;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += names[v];
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
  }
  return out;
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly r(1);
  MPoly base = p;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

MPoly monic(const MPoly& p) {
  if (p.is_zero()) return p;
  MPoly r = p;
  return r.scale(BigRational(1 / p.leading().second));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto& [eb, cb] = b.leading();
  MPoly q, r = a;
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading();
    if (!divides(eb, er)) throw std::domain_error("inexact polynomial division");
    MPoly t = MPoly::monomial(minus(er, eb), BigRational(cr / cb));
    q += t;
    r -= t * b;
  }
  return q;
}

std::vector<MPoly> coefficients_in(const MPoly& p, int var) {
  std::vector<MPoly> out(p.degree_in(var) + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    out[e[var]] += MPoly::monomial(rest, c);
  }
  return out;
}

MPoly from_coefficients(const std::vector<MPoly>& coeffs, int var) {
  MPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponent e{};
    e[var] = static_cast<std::uint32_t>(k);
    out += coeffs[k] * MPoly::monomial(e, BigRational(1));
  }
  return out;
}

namespace {

MPoly content_in(const MPoly& p, int var) {
  MPoly g;
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? monic(c) : gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly primitive_in(const MPoly& p, int var) { return divide_exact(p, content_in(p, var)); }

// lc(b)^k * a reduced modulo b in var.
MPoly pseudo_remainder(MPoly a, const MPoly& b, int var) {
  auto cb = coefficients_in(b, var);
  unsigned db = static_cast<unsigned>(cb.size() - 1);
  const MPoly& lb = cb.back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    auto ca = coefficients_in(a, var);
    unsigned da = static_cast<unsigned>(ca.size() - 1);
    Exponent shift{};
    shift[var] = da - db;
    a = lb * a - ca.back() * MPoly::monomial(shift, BigRational(1)) * b;
  }
  return a;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  int var = -1;
  for (int v = 0; v < kNumVars && var < 0; ++v)
    if (a.contains(v) || b.contains(v)) var = v;
  if (var < 0) return MPoly(1);

  MPoly ca = content_in(a, var), cb = content_in(b, var);
  MPoly c = gcd(ca, cb);
  MPoly pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MPoly r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_in(r, var);
  }
  MPoly g = pa.degree_in(var) == 0 ? MPoly(1) : primitive_in(pa, var);
  return monic(c * g);
}

}  // namespace hilbloc
