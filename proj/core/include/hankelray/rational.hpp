#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hankelray {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

// Renders "p/q", omitting "/q" when the denominator is 1.
std::string to_string(const Rational& r);

Rational rational_pow(const Rational& base, unsigned exp);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// C(n+2, 2), the dimension of the space of ternary forms of degree n.
std::int64_t ternary_dim(std::int64_t n);

// C(n, 2).
std::int64_t choose2(std::int64_t n);

}  // namespace hankelray
