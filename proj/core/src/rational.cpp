#include "hankelray/rational.hpp"

#include <stdexcept>

namespace hankelray {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(const Rational& base, unsigned exp) {
  if (exp == 0) return Rational(1);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t ternary_dim(std::int64_t n) {
  if (n < 0) return 0;
  return (n + 2) * (n + 1) / 2;
}

std::int64_t choose2(std::int64_t n) {
  if (n < 2) return 0;
  return n * (n - 1) / 2;
}

}  // namespace hankelray
