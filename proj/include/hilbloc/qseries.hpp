#pragma once

#include <string>
#include <vector>

#include "hilbloc/rational.hpp"

namespace hilbloc {

// Power series in q truncated after q^order.
class QSeries {
 public:
  QSeries() : QSeries(0) {}
  explicit QSeries(int order);  // the series 1
  QSeries(int order, std::vector<BigRational> coeffs);

  static QSeries zero(int order);

  int order() const { return order_; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  const BigRational& operator[](int k) const { return c_.at(k); }
  BigRational& operator[](int k) { return c_.at(k); }

  QSeries truncated(int order) const;

  friend bool operator==(const QSeries& x, const QSeries& y) = default;

  std::string to_string() const;

 private:
  int order_;
  std::vector<BigRational> c_;
};

enum class QsOp { mul, div };

// Orders must agree; div throws DivisionByZero when y[0] == 0.
QSeries qs_arith(const QSeries& x, const QSeries& y, QsOp op);
QSeries operator*(const QSeries& x, const QSeries& y);
QSeries operator/(const QSeries& x, const QSeries& y);

// Requires x[0] == 1; the result has constant term 0.
QSeries qs_log(const QSeries& x);
// Requires x[0] == 0.
QSeries qs_exp(const QSeries& x);

// prod_{n >= 1} (1 - q^n)^(-x), truncated at q^order.
QSeries xi_pow(const BigRational& x, int order);

// First index where the two series differ, or -1.
int first_difference(const QSeries& x, const QSeries& y);

}  // namespace hilbloc
