#include "hilbloc/laurent.hpp"

#include "hilbloc/errors.hpp"

namespace hilbloc {

namespace {

// alpha*z + beta
struct Specialized {
  BigRational alpha;
  BigRational beta;
};

Specialized specialize(const LinForm& f, const Direction& dir) {
  return {BigRational(static_cast<long>(f.a)) + BigRational(static_cast<long>(f.b)) * dir.rho,
          BigRational(static_cast<long>(f.c)) * dir.fiber};
}

// s *= (beta + alpha z), truncated to s.size() terms.
void mul_linear(std::vector<BigRational>& s, const BigRational& alpha, const BigRational& beta) {
  for (std::size_t k = s.size(); k-- > 0;) {
    s[k] *= beta;
    if (k > 0) s[k] += alpha * s[k - 1];
  }
}

// s /= (beta + alpha z), beta != 0.
void div_linear(std::vector<BigRational>& s, const BigRational& alpha, const BigRational& beta) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) s[k] -= alpha * s[k - 1];
    s[k] /= beta;
  }
}

}  // namespace

MPoly complete_homogeneous(const std::vector<LinForm>& xs, int k) {
  if (k < 0) return MPoly();
  std::vector<MPoly> h(k + 1);
  h[0] = MPoly(1);
  for (const auto& x : xs) {
    MPoly f = MPoly::from_linform(x);
    for (int d = 1; d <= k; ++d) h[d] += f * h[d - 1];
  }
  return h[k];
}

RatFunc to_ratfunc(const FactoredTerm& t) {
  MPoly num(t.coef), den(1);
  for (const auto& f : t.num) num *= MPoly::from_linform(f);
  for (const auto& f : t.den) den *= MPoly::from_linform(f);
  if (t.sym_degree >= 0) num *= complete_homogeneous(t.sym_forms, t.sym_degree);
  return RatFunc(std::move(num), std::move(den));
}

BigRational LaurentSeries::at(int k) const {
  if (zero || k < valuation || k - valuation >= static_cast<int>(coeffs.size())) return 0;
  return coeffs[k - valuation];
}

LaurentSeries expand(const FactoredTerm& t, const Direction& dir, int top) {
  LaurentSeries out;
  out.top = top;
  if (sgn(t.coef) == 0) {
    out.zero = true;
    return out;
  }

  std::vector<Specialized> num, den;
  int val = 0;
  for (const auto& f : t.den) {
    Specialized s = specialize(f, dir);
    if (sgn(s.beta) == 0) {
      if (sgn(s.alpha) == 0)
        throw DegenerateDirection("weight " + to_string(f) + " vanishes along rho = " + to_string(dir.rho));
      --val;
    }
    den.push_back(std::move(s));
  }
  for (const auto& f : t.num) {
    Specialized s = specialize(f, dir);
    if (sgn(s.beta) == 0) {
      if (sgn(s.alpha) == 0) {
        out.zero = true;
        return out;
      }
      ++val;
    }
    num.push_back(std::move(s));
  }

  // The symmetric factor is a polynomial in z of degree <= sym_degree.
  std::vector<BigRational> sym;
  if (t.sym_degree >= 0) {
    std::vector<std::vector<BigRational>> h(t.sym_degree + 1,
                                            std::vector<BigRational>(t.sym_degree + 1));
    h[0][0] = 1;
    for (const auto& f : t.sym_forms) {
      Specialized s = specialize(f, dir);
      for (int d = 1; d <= t.sym_degree; ++d) {
        std::vector<BigRational> prod = h[d - 1];
        mul_linear(prod, s.alpha, s.beta);
        for (int k = 0; k <= t.sym_degree; ++k) h[d][k] += prod[k];
      }
    }
    sym = std::move(h[t.sym_degree]);
    std::size_t lead = 0;
    while (lead < sym.size() && sgn(sym[lead]) == 0) ++lead;
    if (lead == sym.size()) {
      out.zero = true;
      return out;
    }
    sym.erase(sym.begin(), sym.begin() + lead);
    val += static_cast<int>(lead);
  }

  out.valuation = val;
  if (val > top) {
    out.zero = true;
    return out;
  }
  std::vector<BigRational> s(top - val + 1);
  s[0] = t.coef;
  for (const auto& x : num) {
    if (sgn(x.beta) == 0) {
      for (auto& c : s) c *= x.alpha;
    } else {
      mul_linear(s, x.alpha, x.beta);
    }
  }
  for (const auto& x : den) {
    if (sgn(x.beta) == 0) {
      for (auto& c : s) c /= x.alpha;
    } else {
      div_linear(s, x.alpha, x.beta);
    }
  }
  if (!sym.empty()) {
    std::vector<BigRational> r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < sym.size() && i + j < s.size(); ++j) r[i + j] += s[i] * sym[j];
    s = std::move(r);
  }
  out.coeffs = std::move(s);
  return out;
}

void LaurentAccumulator::add(const LaurentSeries& s) {
  if (s.zero) return;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    int k = s.valuation + static_cast<int>(i);
    if (k > top_) break;
    if (sgn(s.coeffs[i]) == 0) continue;
    auto& c = c_[k];
    c += s.coeffs[i];
    if (sgn(c) == 0) c_.erase(k);
  }
}

void LaurentAccumulator::merge(const LaurentAccumulator& o) {
  for (const auto& [k, v] : o.c_) {
    if (k > top_) break;
    auto& c = c_[k];
    c += v;
    if (sgn(c) == 0) c_.erase(k);
  }
}

BigRational LaurentAccumulator::at(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? BigRational(0) : it->second;
}

int LaurentAccumulator::lowest_nonzero() const {
  return c_.empty() ? top_ + 1 : c_.begin()->first;
}

}  // namespace hilbloc
