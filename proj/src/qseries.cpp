#include "hilbloc/qseries.hpp"

#include <stdexcept>

#include "hilbloc/errors.hpp"

namespace hilbloc {

QSeries::QSeries(int order) : order_(order), c_(order + 1) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_[0] = 1;
}

QSeries::QSeries(int order, std::vector<BigRational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("negative series order");
  c_.resize(order + 1);
}

QSeries QSeries::zero(int order) { return QSeries(order, {}); }

QSeries QSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return QSeries(order, std::vector<BigRational>(c_.begin(), c_.begin() + order + 1));
}

std::string QSeries::to_string() const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    if (k) out += ", ";
    out += hilbloc::to_string(c_[k]);
  }
  return "[" + out + "]";
}

QSeries qs_arith(const QSeries& x, const QSeries& y, QsOp op) {
  if (x.order() != y.order()) throw std::invalid_argument("series orders differ");
  int n = x.order();
  std::vector<BigRational> r(n + 1);
  if (op == QsOp::mul) {
    for (int i = 0; i <= n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (int j = 0; i + j <= n; ++j) r[i + j] += x[i] * y[j];
    }
  } else {
    if (sgn(y[0]) == 0) throw DivisionByZero("series division by a series with zero constant term");
    for (int k = 0; k <= n; ++k) {
      BigRational acc = x[k];
      for (int j = 1; j <= k; ++j) acc -= y[j] * r[k - j];
      r[k] = acc / y[0];
    }
  }
  return QSeries(n, std::move(r));
}

QSeries operator*(const QSeries& x, const QSeries& y) { return qs_arith(x, y, QsOp::mul); }
QSeries operator/(const QSeries& x, const QSeries& y) { return qs_arith(x, y, QsOp::div); }

QSeries qs_log(const QSeries& x) {
  if (x[0] != 1) throw std::invalid_argument("log needs constant term 1");
  int n = x.order();
  // q L' = q x' / x
  std::vector<BigRational> d(n + 1), l(n + 1);
  for (int k = 1; k <= n; ++k) d[k] = k * x[k];
  QSeries ql = QSeries(n, d) / x;
  for (int k = 1; k <= n; ++k) l[k] = ql[k] / k;
  return QSeries(n, std::move(l));
}

QSeries qs_exp(const QSeries& x) {
  if (sgn(x[0]) != 0) throw std::invalid_argument("exp needs constant term 0");
  int n = x.order();
  std::vector<BigRational> e(n + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigRational acc;
    for (int j = 1; j <= k; ++j) acc += j * x[j] * e[k - j];
    e[k] = acc / k;
  }
  return QSeries(n, std::move(e));
}

QSeries xi_pow(const BigRational& x, int order) {
  QSeries r(order);
  if (sgn(x) == 0) return r;
  // (1 - u)^(-x) = sum_k x(x+1)...(x+k-1)/k! u^k
  std::vector<BigRational> binom(order + 1);
  binom[0] = 1;
  for (int k = 1; k <= order; ++k) binom[k] = binom[k - 1] * (x + (k - 1)) / k;
  for (int m = 1; m <= order; ++m) {
    std::vector<BigRational> f(order + 1);
    for (int k = 0; k * m <= order; ++k) f[k * m] = binom[k];
    r = r * QSeries(order, std::move(f));
  }
  return r;
}

int first_difference(const QSeries& x, const QSeries& y) {
  int n = std::min(x.order(), y.order());
  for (int k = 0; k <= n; ++k)
    if (x[k] != y[k]) return k;
  if (x.order() != y.order()) return n + 1;
  return -1;
}

}  // namespace hilbloc
