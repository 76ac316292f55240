#include "hilbloc/ratfunc.hpp"

#include <algorithm>

#include "hilbloc/errors.hpp"

namespace hilbloc {

RatFunc::RatFunc(MPoly num, MPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly g = gcd(num, den);
  num = divide_exact(num, g);
  den = divide_exact(den, g);
  BigRational lc = den.leading().second;
  num_ = std::move(num.scale(BigRational(1 / lc)));
  den_ = std::move(den.scale(BigRational(1 / lc)));
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return RatFunc(x.num_ - y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
  if (y.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc rf_arith(const RatFunc& x, const RatFunc& y, RfOp op) {
  switch (op) {
    case RfOp::add: return x + y;
    case RfOp::mul: return x * y;
    case RfOp::div: return x / y;
  }
  return x;
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

int UPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  return 0;
}

UPoly operator+(const UPoly& x, const UPoly& y) {
  std::vector<BigRational> r(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = x.at(k) + y.at(k);
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& x, const UPoly& y) {
  std::vector<BigRational> r(std::max(x.c_.size(), y.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = x.at(k) - y.at(k);
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& x, const UPoly& y) {
  if (x.is_zero() || y.is_zero()) return UPoly();
  std::vector<BigRational> r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i)
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  return UPoly(std::move(r));
}

std::string UPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = c_[k];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    BigRational mag = abs(c);
    if (k == 0 || mag != 1) out += hilbloc::to_string(mag);
    if (k > 0) out += (k == 1) ? (mag != 1 ? "*z" : "z") : ((mag != 1 ? "*z^" : "z^") + std::to_string(k));
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("univariate division by zero");
  std::vector<BigRational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<BigRational> q(a.degree() - db + 1);
  BigRational lb = b.lead();
  for (int k = a.degree(); k >= db; --k) {
    BigRational f = r[k] / lb;
    q[k - db] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  std::vector<BigRational> c = x.coeffs();
  BigRational l = c.back();
  for (auto& v : c) v /= l;
  return UPoly(std::move(c));
}

// ------------------------------------------------------------- URatFunc

URatFunc::URatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw DivisionByZero("univariate rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(std::vector<BigRational>{BigRational(1)});
    return;
  }
  UPoly g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  BigRational l = den.lead();
  UPoly inv(std::vector<BigRational>{BigRational(1 / l)});
  num_ = num * inv;
  den_ = den * inv;
}

URatFunc operator+(const URatFunc& x, const URatFunc& y) {
  return URatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

URatFunc operator*(const URatFunc& x, const URatFunc& y) {
  return URatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

std::string URatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

UPoly specialize(const MPoly& p, const Direction& dir) {
  std::vector<BigRational> out(p.total_degree() + 1);
  for (const auto& [e, c] : p.terms()) {
    BigRational v = c;
    for (std::uint32_t k = 0; k < e[kVarT2]; ++k) v *= dir.rho;
    for (std::uint32_t k = 0; k < e[kVarFiber]; ++k) v *= dir.fiber;
    out[e[kVarT1] + e[kVarT2]] += v;
  }
  return UPoly(std::move(out));
}

URatFunc rf_specialize(const RatFunc& x, const Direction& dir) {
  UPoly den = specialize(x.den(), dir);
  if (den.is_zero())
    throw DegenerateDirection("denominator vanishes along rho = " + to_string(dir.rho));
  return URatFunc(specialize(x.num(), dir), std::move(den));
}

URatFunc rf_specialize(const RatFunc& x, const BigRational& rho) {
  return rf_specialize(x, Direction{rho, BigRational(1)});
}

BigRational rf_value_at_zero(const URatFunc& x) {
  if (sgn(x.den().at(0)) == 0) throw PoleAtZero("pole at z = 0: no non-equivariant limit");
  return x.num().at(0) / x.den().at(0);
}

}  // namespace hilbloc
