#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hilbloc {

// Exact rationals; GMP keeps mpq_class canonical (lowest terms, positive
// denominator) as long as every constructed value goes through canonicalize().
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q".
BigRational parse_rational(std::string_view text);

// "p" when the denominator is 1, else "p/q".
std::string to_string(const BigRational& x);

inline bool is_zero(const BigRational& x) { return sgn(x) == 0; }

}  // namespace hilbloc
