#pragma once

#include <initializer_list>
#include <vector>

#include "hankelray/cayley_bacharach.hpp"
#include "hankelray/functional.hpp"
#include "hankelray/qmatrix.hpp"

namespace hankelray::testutil {

inline QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  QMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

inline ProjPoint pt(long x, long y) {
  return ProjPoint::affine(Rational(x), Rational(y));
}

// The Cauchy-Schwarz functional on Gamma_1 of a configuration, removing the
// point at `index` (default: last in canonical order).
inline Functional collapse_functional(const PointConfig& config, int d,
                                      std::size_t index
                                      = static_cast<std::size_t>(-1)) {
  const auto g1 = config.gamma1_points();
  const Relation rel = unique_relation(g1, d);
  if (index == static_cast<std::size_t>(-1)) index = g1.size() - 1;
  const ProjPoint p = g1[index];
  const Rational up = *rel.coefficient_at(p);
  Rational ss = 0;
  for (std::size_t i = 0; i < rel.points().size(); ++i)
    if (!(rel.points()[i] == p))
      ss += rel.coefficients()[i] * rel.coefficients()[i];
  std::vector<WeightedPoint> support;
  for (const auto& v : g1)
    if (!(v == p)) support.push_back({Rational(1), v});
  support.push_back({-(up * up) / ss, p});
  return functional_from_points(support, 2 * d);
}

}  // namespace hankelray::testutil
