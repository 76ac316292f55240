#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace hilbloc {

// Integer linear form a*t1 + b*t2 + c*t in the torus parameters. The
// c-slot is the fiber parameter of quasi-projective models and stays zero
// on complete surfaces.
struct LinForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  constexpr bool is_zero() const { return a == 0 && b == 0 && c == 0; }

  constexpr LinForm operator+(const LinForm& o) const { return {a + o.a, b + o.b, c + o.c}; }
  constexpr LinForm operator-(const LinForm& o) const { return {a - o.a, b - o.b, c - o.c}; }
  constexpr LinForm operator-() const { return {-a, -b, -c}; }
  constexpr LinForm& operator+=(const LinForm& o) { return *this = *this + o; }
  constexpr LinForm& operator-=(const LinForm& o) { return *this = *this - o; }
  friend constexpr LinForm operator*(std::int64_t k, const LinForm& f) {
    return {k * f.a, k * f.b, k * f.c};
  }

  constexpr auto operator<=>(const LinForm&) const = default;
};

inline constexpr LinForm kT1{1, 0, 0};
inline constexpr LinForm kT2{0, 1, 0};
inline constexpr LinForm kFiber{0, 0, 1};

// "2*t1 - t2 + t", "0" for the zero form.
std::string to_string(const LinForm& f);

}  // namespace hilbloc
