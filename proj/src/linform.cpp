#include "hilbloc/linform.hpp"

namespace hilbloc {

std::string to_string(const LinForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto term = [&](std::int64_t k, const char* name) {
    if (k == 0) return;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    std::int64_t mag = k < 0 ? -k : k;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
  };
  term(f.a, "t1");
  term(f.b, "t2");
  term(f.c, "t");
  return out;
}

}  // namespace hilbloc
