#include "hilbloc/rational.hpp"

#include <stdexcept>

namespace hilbloc {

BigRational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  BigInt num, den(1);
  try {
    if (slash == std::string::npos) {
      num = BigInt(s);
    } else {
      num = BigInt(s.substr(0, slash));
      den = BigInt(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace hilbloc
