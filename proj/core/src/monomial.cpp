#include "hankelray/monomial.hpp"

#include <stdexcept>

#include "hankelray/rational.hpp"

namespace hankelray {

std::vector<Monomial> monomial_basis(int m) {
  if (m < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<Monomial> basis;
  basis.reserve(static_cast<std::size_t>(ternary_dim(m)));
  for (int a = m; a >= 0; --a)
    for (int b = m - a; b >= 0; --b) basis.push_back({a, b, m - a - b});
  return basis;
}

std::size_t monomial_index(const Monomial& mono) {
  const int m = mono.degree();
  const int t = m - mono.a;
  return static_cast<std::size_t>(t * (t + 1) / 2 + (t - mono.b));
}

}  // namespace hankelray
