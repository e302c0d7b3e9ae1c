#include "hankelray/projpoint.hpp"

#include <stdexcept>

namespace hankelray {

ProjPoint::ProjPoint(Rational x, Rational y, Rational z)
    : c_{std::move(x), std::move(y), std::move(z)} {
  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (!is_zero(c_[i])) {
      last = i;
      break;
    }
  }
  if (last < 0)
    throw std::invalid_argument("projective point with all coordinates zero");
  if (c_[last] != 1) {
    const Rational inv = Rational(1) / c_[last];
    for (auto& coord : c_) coord *= inv;
  }
}

ProjPoint ProjPoint::affine(Rational a, Rational b) {
  return ProjPoint(std::move(a), std::move(b), Rational(1));
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  for (int i = 0; i < 3; ++i) {
    const int c = cmp(c_[i], o.c_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string ProjPoint::str() const {
  return "(" + to_string(c_[0]) + " : " + to_string(c_[1]) + " : " +
         to_string(c_[2]) + ")";
}

}  // namespace hankelray
