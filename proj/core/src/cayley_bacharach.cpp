#include "hankelray/cayley_bacharach.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hankelray/errors.hpp"

namespace hankelray {

std::vector<ProjPoint> PointConfig::gamma1_points() const {
  std::vector<ProjPoint> out;
  out.reserve(gamma1.size());
  for (std::size_t i : gamma1) out.push_back(points[i]);
  return out;
}

std::vector<ProjPoint> PointConfig::gamma2_points() const {
  std::vector<ProjPoint> out;
  out.reserve(gamma2.size());
  for (std::size_t i : gamma2) out.push_back(points[i]);
  return out;
}

PointConfig product_grid(const std::vector<Rational>& xroots,
                         const std::vector<Rational>& yroots) {
  PointConfig config;
  config.l1 = linear_root_product(Var::X, xroots);
  config.l2 = linear_root_product(Var::Y, yroots);
  for (const auto& r : xroots)
    for (const auto& s : yroots)
      config.points.push_back(ProjPoint::affine(r, s));
  std::sort(config.points.begin(), config.points.end());
  const auto dup = std::adjacent_find(config.points.begin(), config.points.end());
  if (dup != config.points.end())
    throw std::invalid_argument("product_grid: repeated root");
  config.gamma1.resize(config.points.size());
  for (std::size_t i = 0; i < config.points.size(); ++i) config.gamma1[i] = i;
  config.provenance = "product-grid " + std::to_string(xroots.size()) + "x" +
                      std::to_string(yroots.size());
  return config;
}

PointConfig integer_grid(int d) {
  if (d < 1) throw std::invalid_argument("integer_grid: requires d >= 1");
  std::vector<Rational> roots;
  for (int j = 0; j < d; ++j) roots.emplace_back(j);
  PointConfig config = product_grid(roots, roots);
  config.provenance = "integer-grid d=" + std::to_string(d);
  return config;
}

PointConfig with_gamma2(PointConfig config,
                        const std::vector<ProjPoint>& gamma2_points) {
  std::set<std::size_t> g2;
  for (const auto& p : gamma2_points) {
    const auto it =
        std::lower_bound(config.points.begin(), config.points.end(), p);
    if (it == config.points.end() || !(*it == p))
      throw std::invalid_argument("with_gamma2: point not in configuration: " +
                                  p.str());
    g2.insert(static_cast<std::size_t>(it - config.points.begin()));
  }
  config.gamma1.clear();
  config.gamma2.assign(g2.begin(), g2.end());
  for (std::size_t i = 0; i < config.points.size(); ++i)
    if (!g2.count(i)) config.gamma1.push_back(i);
  return config;
}

namespace {

// Gamma_2 of the split grid: the diagonal x+y = 2 plus x+y = d+j, j = 1..d-4.
PointConfig split_by_diagonals(PointConfig config, int d) {
  std::vector<Rational> sums;
  sums.emplace_back(2);
  for (int j = 1; j <= d - 4; ++j) sums.emplace_back(d + j);
  config.gamma1.clear();
  config.gamma2.clear();
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    const Rational s = config.points[i].x() + config.points[i].y();
    const bool on_diagonal =
        std::find(sums.begin(), sums.end(), s) != sums.end();
    (on_diagonal ? config.gamma2 : config.gamma1).push_back(i);
  }
  return config;
}

}  // namespace

PointConfig gamma_split(int d) {
  if (d < 4) throw std::invalid_argument("gamma_split: requires d >= 4");
  PointConfig config = split_by_diagonals(integer_grid(d), d);
  config.provenance = "gamma-split d=" + std::to_string(d);
  return config;
}

QMatrix evaluation_matrix(std::span<const ProjPoint> points, int m) {
  const auto basis = monomial_basis(m);
  QMatrix e(points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Rational> px(m + 1), py(m + 1), pz(m + 1);
    px[0] = py[0] = pz[0] = 1;
    for (int k = 1; k <= m; ++k) {
      px[k] = px[k - 1] * points[i].x();
      py[k] = py[k - 1] * points[i].y();
      pz[k] = pz[k - 1] * points[i].z();
    }
    for (std::size_t j = 0; j < basis.size(); ++j)
      e.at(i, j) = px[basis[j].a] * py[basis[j].b] * pz[basis[j].c];
  }
  return e;
}

Relation::Relation(std::vector<ProjPoint> points,
                   std::vector<Rational> coefficients)
    : points_(std::move(points)), coefficients_(std::move(coefficients)) {
  if (points_.size() != coefficients_.size())
    throw std::invalid_argument("relation: size mismatch");
}

std::optional<Rational> Relation::coefficient_at(const ProjPoint& p) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || !(*it == p)) return std::nullopt;
  return coefficients_[static_cast<std::size_t>(it - points_.begin())];
}

Relation unique_relation(std::span<const ProjPoint> points, int m) {
  const QMatrix e = evaluation_matrix(points, m);
  const auto left_kernel = kernel(e.transpose());
  if (left_kernel.empty())
    throw NoRelationError("no linear relation among the point evaluations");
  if (left_kernel.size() > 1)
    throw RelationNotUniqueError("relation space has dimension " +
                                 std::to_string(left_kernel.size()));

  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&points](std::size_t a, std::size_t b) {
    return points[a] < points[b];
  });

  std::vector<ProjPoint> sorted_points;
  std::vector<Rational> coeffs;
  sorted_points.reserve(points.size());
  coeffs.reserve(points.size());
  for (std::size_t i : order) {
    sorted_points.push_back(points[i]);
    coeffs.push_back(left_kernel[0][i]);
  }
  // Scale so the lexicographically first support point has coefficient 1.
  for (const auto& c : coeffs) {
    if (is_zero(c)) continue;
    if (c != 1) {
      const Rational inv = Rational(1) / c;
      for (auto& x : coeffs) x *= inv;
    }
    break;
  }
  return Relation(std::move(sorted_points), std::move(coeffs));
}

CbDefect cb_defect_check(const PointConfig& config, int k) {
  const int s = config.l1.degree() + config.l2.degree() - 3;
  if (k < 0 || k > s)
    throw DegreeOutOfRangeError("cb_defect_check: degree " + std::to_string(k) +
                                " outside 0.." + std::to_string(s));
  const auto g1 = config.gamma1_points();
  const auto g2 = config.gamma2_points();

  // dim I(Gamma_1)_k - dim I(Gamma)_k collapses to a difference of ranks.
  const std::size_t rank_g1 = rank(evaluation_matrix(g1, k));
  const std::size_t rank_all = rank(evaluation_matrix(config.points, k));
  CbDefect out;
  out.lhs = static_cast<std::int64_t>(rank_all) -
            static_cast<std::int64_t>(rank_g1);
  out.rhs = static_cast<std::int64_t>(g2.size()) -
            static_cast<std::int64_t>(rank(evaluation_matrix(g2, s - k)));
  out.equal = out.lhs == out.rhs;
  return out;
}

bool is_exceptional(int d) {
  if (d < 4) throw std::invalid_argument("is_exceptional: requires d >= 4");
  const Poly conic = grid_conic(d);
  const std::vector<ProjPoint> listed = {
      ProjPoint::affine(0, 0),         ProjPoint::affine(1, 0),
      ProjPoint::affine(0, 1),         ProjPoint::affine(d - 1, d - 1),
      ProjPoint::affine(d - 2, d - 1), ProjPoint::affine(d - 1, d - 2)};
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const ProjPoint p = ProjPoint::affine(j, k);
      if (!is_zero(conic.evaluate(p))) continue;
      if (std::find(listed.begin(), listed.end(), p) == listed.end())
        return true;
    }
  }
  return false;
}

std::optional<std::vector<Rational>> perturbation_coefficients(
    int d, const Rational& t) {
  if (d < 4)
    throw std::invalid_argument("perturbation_coefficients: requires d >= 4");
  const PointConfig split = gamma_split(d);
  const ProjPoint one_one = ProjPoint::affine(1, 1);
  std::vector<ProjPoint> gamma2_prime;
  for (const auto& p : split.gamma2_points())
    if (!(p == one_one)) gamma2_prime.push_back(p);

  const int m = d - 3;
  const QMatrix e = evaluation_matrix(gamma2_prime, m);
  const auto basis = monomial_basis(m);
  const ProjPoint vt = ProjPoint::affine(t, Rational(2) - t);
  std::vector<Rational> target(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    target[j] = evaluate_monomial(basis[j], vt);
  return solve(e.transpose(), target);
}

PerturbedGrid perturbed_grid(int d) {
  if (d < 4) throw std::invalid_argument("perturbed_grid: requires d >= 4");
  constexpr int kMaxCandidates = 200;
  for (int k = 2; k <= kMaxCandidates; ++k) {
    const Rational t0 = Rational(1) - Rational(1, k);
    const auto alpha = perturbation_coefficients(d, t0);
    if (!alpha) continue;
    const bool all_nonzero =
        std::none_of(alpha->begin(), alpha->end(),
                     [](const Rational& a) { return is_zero(a); });
    if (!all_nonzero) continue;

    std::vector<Rational> xroots, yroots;
    xroots.emplace_back(0);
    xroots.push_back(t0);
    yroots.emplace_back(0);
    yroots.push_back(Rational(2) - t0);
    for (int j = 2; j < d; ++j) {
      xroots.emplace_back(j);
      yroots.emplace_back(j);
    }
    PointConfig config = split_by_diagonals(product_grid(xroots, yroots), d);
    config.provenance =
        "perturbed-grid d=" + std::to_string(d) + " t0=" + to_string(t0);
    config.t0 = t0;
    return {t0, std::move(config)};
  }
  throw SearchExhaustedError(
      "no perturbation parameter with all coefficients nonzero; this "
      "indicates a bug, a valid parameter exists near 1");
}

}  // namespace hankelray
