#include "hankelray/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hankelray/errors.hpp"

namespace hankelray {

namespace {

QMatrix poly_stack(const std::vector<Poly>& polys, int degree) {
  QMatrix m(polys.size(), static_cast<std::size_t>(ternary_dim(degree)));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [mono, c] : polys[i].terms())
      m.at(i, monomial_index(mono)) = c;
  return m;
}

bool veronese_point_evaluation(const Functional& ell) {
  const IdealPart lines = ideal_degree_part(ell, 1);
  if (lines.basis.size() != 2) return false;
  const auto a = lines.basis[0].coeff_vector();
  const auto b = lines.basis[1].coeff_vector();
  const Rational px = a[1] * b[2] - a[2] * b[1];
  const Rational py = a[2] * b[0] - a[0] * b[2];
  const Rational pz = a[0] * b[1] - a[1] * b[0];
  if (is_zero(px) && is_zero(py) && is_zero(pz)) return false;
  const ProjPoint p(px, py, pz);

  const auto basis = monomial_basis(ell.socle_degree());
  const auto& values = ell.values();
  Rational scale;
  bool have_scale = false;
  for (std::size_t i = 0; i < basis.size() && !have_scale; ++i) {
    const Rational mv = evaluate_monomial(basis[i], p);
    if (!is_zero(mv)) {
      scale = values[i] / mv;
      have_scale = true;
    }
  }
  if (!have_scale || sgn(scale) <= 0) return false;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (values[i] != scale * evaluate_monomial(basis[i], p)) return false;
  return true;
}

ConstructionResult build_cauchy_schwarz_ray(
    int d, PointConfig config, std::optional<std::size_t> removed_point_index,
    std::optional<Rational> t0) {
  const auto gamma1 = config.gamma1_points();
  Relation relation = unique_relation(gamma1, d);

  const std::size_t idx = removed_point_index.value_or(gamma1.size() - 1);
  if (idx >= gamma1.size())
    throw std::invalid_argument("removed point index out of range");
  const ProjPoint removed = gamma1[idx];

  const Rational u_p = *relation.coefficient_at(removed);
  if (is_zero(u_p))
    throw CoefficientZeroError("relation coefficient vanishes at " +
                               removed.str());
  Rational sum_sq = 0;
  for (std::size_t i = 0; i < relation.points().size(); ++i) {
    if (relation.points()[i] == removed) continue;
    sum_sq += relation.coefficients()[i] * relation.coefficients()[i];
  }

  std::vector<WeightedPoint> support;
  support.reserve(gamma1.size());
  for (const auto& v : gamma1)
    if (!(v == removed)) support.push_back({Rational(1), v});
  support.push_back({-(u_p * u_p) / sum_sq, removed});

  Functional ell = functional_from_points(support, 2 * d);
  return ConstructionResult{d,
                            std::move(ell),
                            std::move(config),
                            std::move(relation),
                            removed,
                            std::move(t0)};
}

}  // namespace

ConstructionResult construct_max_rank(
    int d, std::optional<std::size_t> removed_point_index) {
  if (d < 4)
    throw std::invalid_argument("construct_max_rank: requires d >= 4");
  if (is_exceptional(d)) {
    PerturbedGrid pg = perturbed_grid(d);
    return build_cauchy_schwarz_ray(d, std::move(pg.config),
                                    removed_point_index, pg.t0);
  }
  return build_cauchy_schwarz_ray(d, gamma_split(d), removed_point_index,
                                  std::nullopt);
}

ExtremeRayCertificate certify(const Functional& ell) {
  if (ell.is_zero()) throw ZeroFunctionalError();
  ExtremeRayCertificate cert;
  const int d = ell.half_degree();
  cert.d = d;

  const QMatrix h = hankel(ell);
  cert.psd = psd_certify(h);
  cert.rank = cert.psd.rank;
  cert.corank = h.rows() - cert.rank;

  cert.hilbert = hilbert_function(ell);
  if (cert.hilbert.values[d] != static_cast<std::int64_t>(cert.rank))
    throw Error("internal: middle Catalecticant rank disagrees");

  const IdealPart part_d = ideal_degree_part(ell, d);
  if (part_d.basis.size() != cert.corank)
    throw Error("internal: Hankel kernel dimension disagrees");

  // Degree-2d part of the ideal generated by I_d: the span of f * m over
  // basis forms f and degree-d monomials m.
  const auto dbasis = monomial_basis(d);
  const std::size_t dim_2d =
      static_cast<std::size_t>(ternary_dim(2 * d));
  QMatrix products(part_d.basis.size() * dbasis.size(), dim_2d);
  std::size_t row = 0;
  for (const auto& f : part_d.basis) {
    for (const auto& m : dbasis) {
      for (const auto& [mono, c] : f.terms())
        products.at(row, monomial_index(mono + m)) = c;
      ++row;
    }
  }
  cert.hyperplane_dim = rank(products);
  cert.hyperplane_target = dim_2d - 1;

  cert.is_extreme = cert.psd.verdict == PsdVerdict::Psd &&
                    cert.hyperplane_dim == cert.hyperplane_target;
  cert.rank_one_point_evaluation =
      cert.rank == 1 && cert.psd.verdict == PsdVerdict::Psd &&
      veronese_point_evaluation(ell);

  cert.dual_variety_criterion = dual_variety_criterion(ell);
  cert.dual_criterion_extrapolated = d != 5;
  return cert;
}

KernelFlags structured_kernel_check(const Functional& ell,
                                    const PointConfig& config) {
  const int d = ell.half_degree();
  if (!ell.support())
    throw std::invalid_argument(
        "structured_kernel_check: functional has no point support");

  const auto kernel_vectors = kernel(hankel(ell));
  if (kernel_vectors.size() != 4)
    throw KernelMismatchError("Hankel corank is " +
                              std::to_string(kernel_vectors.size()) +
                              ", expected 4");
  QMatrix kernel_rows(4, kernel_vectors[0].size());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < kernel_vectors[i].size(); ++j)
      kernel_rows.at(i, j) = kernel_vectors[i][j];

  KernelFlags flags;
  if (!in_row_span(kernel_rows, config.l1.coeff_vector()))
    throw KernelMismatchError("L1 is not in the Hankel kernel: " +
                              config.l1.str());
  flags.l1 = true;
  if (!in_row_span(kernel_rows, config.l2.coeff_vector()))
    throw KernelMismatchError("L2 is not in the Hankel kernel: " +
                              config.l2.str());
  flags.l2 = true;

  // The third form through Gamma_1: explicit for the integer grid, recovered
  // from the evaluation kernel for perturbed grids.
  Poly third(d);
  if (!config.t0) {
    third = gamma1_form(d);
  } else {
    const auto g1 = config.gamma1_points();
    const auto vanishing = kernel(evaluation_matrix(g1, d));
    const QMatrix gens = poly_stack({config.l1, config.l2}, d);
    bool found = false;
    for (const auto& vec : vanishing) {
      if (!in_row_span(gens, vec)) {
        third = Poly::from_coeffs(d, vec);
        found = true;
        break;
      }
    }
    if (!found)
      throw KernelMismatchError(
          "no third form through Gamma_1 beyond L1 and L2");
  }
  if (!in_row_span(kernel_rows, third.coeff_vector()))
    throw KernelMismatchError("third form is not in the Hankel kernel: " +
                              third.str());
  flags.third_form = true;

  // Every kernel element must restrict on Lambda to a multiple of the
  // relation coefficients, and at least one multiple must be nonzero.
  const Relation relation = unique_relation(config.gamma1_points(), d);
  std::vector<ProjPoint> lambda;
  for (const auto& wp : *ell.support())
    if (sgn(wp.weight) > 0) lambda.push_back(wp.point);

  bool some_nonzero = false;
  for (const auto& vec : kernel_vectors) {
    const Poly g = Poly::from_coeffs(d, vec);
    Rational alpha = 0;
    bool have_alpha = false;
    for (const auto& v : lambda) {
      const auto uv = relation.coefficient_at(v);
      if (!uv || is_zero(*uv)) continue;
      alpha = g.evaluate(v) / *uv;
      have_alpha = true;
      break;
    }
    for (const auto& v : lambda) {
      const auto uv = relation.coefficient_at(v);
      const Rational expected = uv && have_alpha ? alpha * *uv : Rational(0);
      if (g.evaluate(v) != expected)
        throw KernelMismatchError(
            "kernel element does not interpolate the relation on Lambda: " +
            g.str());
    }
    if (have_alpha && !is_zero(alpha)) some_nonzero = true;
  }
  if (!some_nonzero)
    throw KernelMismatchError(
        "no kernel element interpolates the relation with a nonzero scalar");
  flags.relation_interpolant = true;
  return flags;
}

ExtremeRayCertificate certify_construction(const ConstructionResult& c) {
  ExtremeRayCertificate cert = certify(c.ell);
  cert.kernel_contains = structured_kernel_check(c.ell, c.config);
  return cert;
}

bool dual_variety_criterion(const Functional& ell) {
  if (ell.is_zero()) throw ZeroFunctionalError();
  const int d = ell.half_degree();
  const IdealSquarePart square = ideal_square_degree_part(ell);

  const IdealPart part_d = ideal_degree_part(ell, d);
  std::vector<Poly> products;
  for (std::size_t i = 0; i < part_d.basis.size(); ++i)
    for (std::size_t j = i; j < part_d.basis.size(); ++j)
      products.push_back(part_d.basis[i] * part_d.basis[j]);
  const std::size_t middle_dim = rank(poly_stack(products, 2 * d));
  return square.dimension == middle_dim;
}

CatalogEntry d5_catalog(int rank) {
  if (rank < 13 || rank > 17)
    throw RankOutOfRangeError("d5_catalog: rank " + std::to_string(rank) +
                              " outside 13..17");
  auto int_roots = [](int n) {
    std::vector<Rational> roots;
    for (int j = 0; j < n; ++j) roots.emplace_back(j);
    return roots;
  };

  auto build = [&]() -> ConstructionResult {
    switch (rank) {
      case 13:
        return build_cauchy_schwarz_ray(5, product_grid(int_roots(5), int_roots(3)),
                                        std::nullopt, std::nullopt);
      case 14:
        return build_cauchy_schwarz_ray(5, product_grid(int_roots(4), int_roots(4)),
                                        std::nullopt, std::nullopt);
      case 15:
        return build_cauchy_schwarz_ray(
            5,
            with_gamma2(product_grid(int_roots(5), int_roots(4)),
                        {ProjPoint::affine(0, 2), ProjPoint::affine(1, 1),
                         ProjPoint::affine(2, 0)}),
            std::nullopt, std::nullopt);
      case 16:
        return build_cauchy_schwarz_ray(
            5,
            with_gamma2(product_grid(int_roots(5), int_roots(4)),
                        {ProjPoint::affine(0, 1), ProjPoint::affine(1, 0)}),
            std::nullopt, std::nullopt);
      default:
        return construct_max_rank(5);
    }
  };
  ConstructionResult construction = build();
  ExtremeRayCertificate certificate = rank == 17
                                          ? certify_construction(construction)
                                          : certify(construction.ell);
  return CatalogEntry{std::move(construction), std::move(certificate)};
}

}  // namespace hankelray
