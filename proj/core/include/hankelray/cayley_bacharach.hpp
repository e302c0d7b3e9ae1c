#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankelray/poly.hpp"
#include "hankelray/qmatrix.hpp"

namespace hankelray {

// A complete-intersection point configuration V(L1, L2) with a designated
// split into Gamma_1 and Gamma_2. Points are kept sorted in canonical
// (lexicographic) order; gamma1/gamma2 are sorted index sets partitioning
// them.
struct PointConfig {
  std::vector<ProjPoint> points;
  std::vector<std::size_t> gamma1;
  std::vector<std::size_t> gamma2;
  Poly l1;
  Poly l2;
  std::string provenance;
  std::optional<Rational> t0;  // set when the grid was perturbed

  std::vector<ProjPoint> gamma1_points() const;
  std::vector<ProjPoint> gamma2_points() const;
};

// The |xroots| x |yroots| product grid {(r : s : 1)}, all points in Gamma_1.
PointConfig product_grid(const std::vector<Rational>& xroots,
                         const std::vector<Rational>& yroots);

// The d x d integer grid {(j : k : 1) : j, k = 0..d-1}, unsplit.
PointConfig integer_grid(int d);

// Moves the listed points of `config` into Gamma_2. Each point must occur.
PointConfig with_gamma2(PointConfig config,
                        const std::vector<ProjPoint>& gamma2_points);

// The d x d grid split along the diagonals x+y = 2 and x+y = d+j for
// j = 1..d-4: those points form Gamma_2, the rest Gamma_1. Requires d >= 4.
PointConfig gamma_split(int d);

// Rows = points, columns = monomial_basis(m), entry = monomial value.
QMatrix evaluation_matrix(std::span<const ProjPoint> points, int m);

// A linear relation sum of u_v ev_v = 0 on forms of a fixed degree. Points
// are sorted canonically; the coefficient of the lexicographically first
// support point is scaled to 1.
class Relation {
 public:
  Relation(std::vector<ProjPoint> points, std::vector<Rational> coefficients);

  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  // nullopt when the point is not part of the relation at all.
  std::optional<Rational> coefficient_at(const ProjPoint& p) const;

 private:
  std::vector<ProjPoint> points_;
  std::vector<Rational> coefficients_;
};

// The one-dimensional left kernel of evaluation_matrix(points, m),
// normalized. Throws NoRelationError / RelationNotUniqueError when the
// kernel dimension is 0 / >= 2.
Relation unique_relation(std::span<const ProjPoint> points, int m);

// Both sides of the Cayley-Bacharach equality for the split in degree k,
// with s = deg L1 + deg L2 - 3:
//   lhs = dim I(Gamma_1)_k - dim I(Gamma)_k,
//   rhs = |Gamma_2| - rank of the Gamma_2 evaluations in degree s - k.
// Throws DegreeOutOfRangeError unless 0 <= k <= s.
struct CbDefect {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};
CbDefect cb_defect_check(const PointConfig& config, int k);

// Whether grid_conic(d) vanishes at an integer grid point beyond the six it
// is built through. Requires d >= 4.
bool is_exceptional(int d);

// Coefficients alpha with ev_{(t : 2-t : 1)} = sum alpha_x ev_x over
// Gamma_2' = Gamma_2 \ {(1:1:1)} on forms of degree d-3, in the canonical
// order of Gamma_2'. nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> perturbation_coefficients(
    int d, const Rational& t);

// Finds t0 = 1 - 1/k, k = 2, 3, ..., with all perturbation coefficients
// nonzero, and returns the grid of V(L1') and V(L2') with L1' roots
// {0, t0, 2, ..., d-1}, L2' roots {0, 2-t0, 2, ..., d-1}, split along the
// same diagonals. Throws SearchExhaustedError if no candidate works.
struct PerturbedGrid {
  Rational t0;
  PointConfig config;
};
PerturbedGrid perturbed_grid(int d);

}  // namespace hankelray
