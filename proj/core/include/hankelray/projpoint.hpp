#pragma once

#include <array>
#include <string>

#include "hankelray/rational.hpp"

namespace hankelray {

// A projective rational point (x : y : z), stored canonically with its last
// nonzero coordinate scaled to 1.
class ProjPoint {
 public:
  // Canonicalizes; throws std::invalid_argument if all coordinates are zero.
  ProjPoint(Rational x, Rational y, Rational z);

  // The affine point (a, b) as (a : b : 1).
  static ProjPoint affine(Rational a, Rational b);

  const Rational& x() const { return c_[0]; }
  const Rational& y() const { return c_[1]; }
  const Rational& z() const { return c_[2]; }
  const std::array<Rational, 3>& coords() const { return c_; }

  bool operator==(const ProjPoint& o) const { return c_ == o.c_; }

  // Lexicographic by (x, y, z); the canonical order used everywhere.
  bool operator<(const ProjPoint& o) const;

  std::string str() const;  // "(x : y : z)"

 private:
  std::array<Rational, 3> c_;
};

}  // namespace hankelray
