#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hankelray/poly.hpp"
#include "hankelray/qmatrix.hpp"

namespace hankelray {

struct WeightedPoint {
  Rational weight;
  ProjPoint point;
};

// A linear functional on ternary forms of even degree 2d, stored densely as
// its value on each degree-2d monomial. When built from weighted points the
// support is kept alongside.
class Functional {
 public:
  Functional(int socle_degree, std::vector<Rational> values,
             std::optional<std::vector<WeightedPoint>> support = std::nullopt);

  static Functional zero(int socle_degree);

  int socle_degree() const { return socle_degree_; }
  int half_degree() const { return socle_degree_ / 2; }
  const std::vector<Rational>& values() const { return values_; }
  const std::optional<std::vector<WeightedPoint>>& support() const {
    return support_;
  }

  bool is_zero() const;
  Rational operator()(const Monomial& mono) const;
  Rational operator()(const Poly& p) const;  // p must have degree 2d
  Functional scaled(const Rational& c) const;

 private:
  int socle_degree_;
  std::vector<Rational> values_;
  std::optional<std::vector<WeightedPoint>> support_;
};

// ell(m) = sum of w_v m(v). Socle degree must be even and >= 2.
Functional functional_from_points(const std::vector<WeightedPoint>& support,
                                  int socle_degree);

// The matrix of (p, q) -> ell(p q) pairing degrees u and v = 2d - u over the
// graded-lex bases: entry (alpha, beta) = ell(x^{alpha+beta}).
struct CatalecticantMatrix {
  int u = 0;
  int v = 0;
  QMatrix matrix;
};
CatalecticantMatrix catalecticant(const Functional& ell, int u);

// The middle Catalecticant, u = v = d; symmetric.
QMatrix hankel(const Functional& ell);

// Degree-k part of the apolar (Gorenstein) ideal of ell. For k > 2d every
// form of degree k belongs to the ideal; that case is returned as a
// full_space marker instead of materializing a basis.
struct IdealPart {
  int degree = 0;
  bool full_space = false;
  std::vector<Poly> basis;
};
IdealPart ideal_degree_part(const Functional& ell, int k);

struct HilbertFunction {
  std::vector<std::int64_t> values;  // index 0..2d
  bool operator==(const HilbertFunction&) const = default;
};

// T(k) = rank of the (k, 2d-k) Catalecticant. Throws ZeroFunctionalError.
HilbertFunction hilbert_function(const Functional& ell);

// Degree-2d part of the square of the apolar ideal: the span of all products
// f g with f in I_a, g in I_b, a + b = 2d. Deduplicated by RREF; the basis is
// the nonzero RREF rows. Throws ZeroFunctionalError.
struct IdealSquarePart {
  std::size_t dimension = 0;
  std::vector<Poly> basis;
};
IdealSquarePart ideal_square_degree_part(const Functional& ell);

}  // namespace hankelray
