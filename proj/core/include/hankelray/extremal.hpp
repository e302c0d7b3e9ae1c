#pragma once

#include <optional>

#include "hankelray/cayley_bacharach.hpp"
#include "hankelray/functional.hpp"

namespace hankelray {

struct KernelFlags {
  bool l1 = false;
  bool l2 = false;
  bool third_form = false;
  bool relation_interpolant = false;

  bool all() const { return l1 && l2 && third_form && relation_interpolant; }
};

// The full certificate for one candidate extreme ray of the cone of
// functionals nonnegative on squares of degree-d forms.
struct ExtremeRayCertificate {
  int d = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  PsdCertificate psd;
  HilbertFunction hilbert;
  // Dimension of the degree-2d part of the ideal generated by I(ell)_d, and
  // the hyperplane dimension C(2d+2,2) - 1 it must reach for extremality.
  std::size_t hyperplane_dim = 0;
  std::size_t hyperplane_target = 0;
  bool is_extreme = false;
  // Rank-1 classification: the functional is a positive multiple of a point
  // evaluation (checked against the Veronese structure, not the hyperplane
  // criterion).
  bool rank_one_point_evaluation = false;
  std::optional<KernelFlags> kernel_contains;
  // Whether (I^2)_{2d} equals the span of I_d * I_d.
  bool dual_variety_criterion = false;
  // The criterion is only established for 2d = 10; elsewhere it is reported
  // as an extrapolation.
  bool dual_criterion_extrapolated = false;
};

struct ConstructionResult {
  int d = 0;
  Functional ell;
  PointConfig config;
  Relation relation;        // on Gamma_1 in degree d
  ProjPoint removed_point;  // P; Lambda = Gamma_1 \ {P}
  std::optional<Rational> t0;
};

// Builds the corank-4 functional
//   ell = sum over Lambda of ev_v  -  (u_P^2 / sum over Lambda of u_v^2) ev_P
// from the split grid (perturbed first when d is exceptional). The removed
// point defaults to the last Gamma_1 point in canonical order. Requires
// d >= 4; throws CoefficientZeroError if the chosen point has u_P = 0.
ConstructionResult construct_max_rank(
    int d, std::optional<std::size_t> removed_point_index = std::nullopt);

// PSD verdict, rank/corank, Hilbert function, hyperplane dimension,
// extremality, rank-1 classification and the dual-variety criterion.
ExtremeRayCertificate certify(const Functional& ell);

// certify() plus the structured kernel flags for a constructed ray.
ExtremeRayCertificate certify_construction(const ConstructionResult& c);

// Verifies that L1, L2 and the third form span three kernel directions of
// the Hankel matrix and that a fourth kernel element interpolates the
// relation coefficients on Lambda with a single nonzero scalar. Throws
// KernelMismatchError naming the offending element.
KernelFlags structured_kernel_check(const Functional& ell,
                                    const PointConfig& config);

// dim (I^2)_{2d} == dim span(I_d * I_d). Throws ZeroFunctionalError.
bool dual_variety_criterion(const Functional& ell);

struct CatalogEntry {
  ConstructionResult construction;
  ExtremeRayCertificate certificate;
};

// The five d = 5 constructions of Hankel rank 13..17:
//   13: 5 x 3 grid, Gamma_2 empty
//   14: 4 x 4 grid, Gamma_2 empty
//   15: 5 x 4 grid, Gamma_2 = {(0:2:1), (1:1:1), (2:0:1)}
//   16: 5 x 4 grid, Gamma_2 = {(0:1:1), (1:0:1)}
//   17: the split 5 x 5 grid construction
// Throws RankOutOfRangeError unless 13 <= rank <= 17.
CatalogEntry d5_catalog(int rank);

}  // namespace hankelray
