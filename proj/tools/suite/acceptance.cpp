#include "acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "golden.hpp"
#include "hankelray/extremal.hpp"
#include "hankelray/serialize.hpp"
#include "oracles.hpp"

namespace hankelray::accept {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

struct SuiteState {
  // (d, certificate) for every ray certified in criteria 2 and 5.
  std::vector<ExtremeRayCertificate> certified;
};

Functional random_point_functional(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d_dist(2, 4);
  std::uniform_int_distribution<int> count_dist(1, 8);
  std::uniform_int_distribution<int> num_dist(-4, 4);
  std::uniform_int_distribution<int> den_dist(1, 3);
  std::uniform_int_distribution<int> weight_dist(-3, 3);
  for (;;) {
    const int d = d_dist(rng);
    const int n = count_dist(rng);
    std::vector<WeightedPoint> support;
    for (int i = 0; i < n; ++i) {
      const Rational x(num_dist(rng), den_dist(rng));
      const Rational y(num_dist(rng), den_dist(rng));
      int w = weight_dist(rng);
      if (w == 0) w = 1;
      support.push_back({Rational(w), ProjPoint::affine(x, y)});
    }
    Functional ell = functional_from_points(support, 2 * d);
    if (!ell.is_zero()) return ell;
  }
}

QMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, bool gram) {
  std::uniform_int_distribution<int> num_dist(-5, 5);
  std::uniform_int_distribution<int> den_dist(1, 3);
  if (gram) {
    std::uniform_int_distribution<std::size_t> inner_dist(1, n);
    const std::size_t m = inner_dist(rng);
    QMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a.at(i, j) = Rational(num_dist(rng), den_dist(rng));
    QMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t k = 0; k < m; ++k) acc += a.at(k, i) * a.at(k, j);
        s.at(i, j) = acc;
        s.at(j, i) = acc;
      }
    return s;
  }
  QMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Rational v(num_dist(rng), den_dist(rng));
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  return s;
}

ExtremeRayCertificate certify_cauchy_schwarz(const PointConfig& config,
                                             int d) {
  const auto g1 = config.gamma1_points();
  const Relation rel = unique_relation(g1, d);
  const ProjPoint p = g1.back();
  const Rational up = *rel.coefficient_at(p);
  Rational ss = 0;
  for (std::size_t i = 0; i < rel.points().size(); ++i)
    if (!(rel.points()[i] == p))
      ss += rel.coefficients()[i] * rel.coefficients()[i];
  std::vector<WeightedPoint> support;
  for (const auto& v : g1)
    if (!(v == p)) support.push_back({Rational(1), v});
  support.push_back({-(up * up) / ss, p});
  return certify(functional_from_points(support, 2 * d));
}

void criterion_relation(Checker& c) {
  const PointConfig config = gamma_split(5);
  const Relation rel = unique_relation(config.gamma1_points(), 5);
  const QMatrix grid = relation_grid_matrix(rel, 5);
  // The published table is coprime-integer scaled; our normalization fixes
  // the lexicographically first support point (0:0:1), whose table entry is
  // 3. The comparison is exact after applying the same normalization.
  const Rational anchor = golden::kRelationGridD5[4][0];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      c.expect(grid.at(i, j) * anchor == golden::kRelationGridD5[i][j],
               "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") differs");
}

void criterion_max_rank(Checker& c, SuiteState& state) {
  for (int d = 4; d <= 8; ++d) {
    const ConstructionResult construction = construct_max_rank(d);
    const ExtremeRayCertificate cert = certify_construction(construction);
    const std::string tag = "d=" + std::to_string(d) + ": ";
    c.expect(cert.is_extreme, tag + "not extreme");
    c.expect(cert.corank == 4, tag + "corank != 4");
    c.expect(static_cast<std::int64_t>(cert.rank) == golden::max_rank(d),
             tag + "rank != max");
    c.expect(cert.psd.verdict == PsdVerdict::Psd, tag + "not PSD");
    for (int j = 0; j <= 2 * d; ++j) {
      const std::int64_t expected =
          (j == d) ? golden::max_rank(d)
                   : golden::ternary_dim(std::min(j, 2 * d - j));
      c.expect(cert.hilbert.values[j] == expected,
               tag + "Hilbert value at " + std::to_string(j));
    }
    state.certified.push_back(cert);
  }
}

void criterion_exceptional(Checker& c) {
  std::vector<int> computed;
  for (int d = 4; d <= 100; ++d)
    if (is_exceptional(d)) computed.push_back(d);
  c.expect(computed.size() == golden::kExceptionalDegrees.size(),
           "list size " + std::to_string(computed.size()));
  if (computed.size() == golden::kExceptionalDegrees.size())
    for (std::size_t i = 0; i < computed.size(); ++i)
      c.expect(computed[i] == golden::kExceptionalDegrees[i],
               "entry " + std::to_string(i));
}

void criterion_perturbation(Checker& c) {
  // Unperturbed d = 9: the third form degenerates on Gamma_2 and the
  // hyperplane condition fails.
  const PointConfig split = gamma_split(9);
  const Poly third = gamma1_form(9);
  bool vanishes = false;
  for (const auto& pt : split.gamma2_points())
    if (is_zero(third.evaluate(pt))) vanishes = true;
  const ExtremeRayCertificate raw = certify_cauchy_schwarz(split, 9);
  c.expect(vanishes || !raw.is_extreme, "no degeneration detected");
  c.expect(vanishes, "third form does not vanish on Gamma_2");
  c.expect(!raw.is_extreme, "unperturbed certificate is extreme");
  c.expect(raw.psd.verdict == PsdVerdict::Psd, "unperturbed not PSD");

  const ConstructionResult perturbed = construct_max_rank(9);
  c.expect(perturbed.t0.has_value(), "no perturbation parameter recorded");
  const ExtremeRayCertificate cert = certify_construction(perturbed);
  c.expect(cert.corank == 4, "perturbed corank != 4");
  c.expect(cert.is_extreme, "perturbed certificate not extreme");
}

void criterion_catalog(Checker& c, SuiteState& state) {
  for (int rank = 13; rank <= 17; ++rank) {
    const CatalogEntry entry = d5_catalog(rank);
    const auto& cert = entry.certificate;
    const std::string tag = "rank " + std::to_string(rank) + ": ";
    c.expect(static_cast<int>(cert.rank) == rank, tag + "rank mismatch");
    c.expect(cert.is_extreme, tag + "not extreme");
    for (int j = 0; j <= 10; ++j)
      c.expect(cert.hilbert.values[j] == golden::kCatalogHilbert[rank - 13][j],
               tag + "Hilbert value at " + std::to_string(j));
    c.expect(cert.dual_variety_criterion, tag + "dual-variety criterion");
    state.certified.push_back(cert);
  }
}

void criterion_rank_bounds(Checker& c, const SuiteState& state) {
  c.expect(!state.certified.empty(), "no certificates collected");
  for (const auto& cert : state.certified) {
    if (!cert.is_extreme) continue;
    const bool in_bounds =
        cert.rank == 1 ||
        (static_cast<std::int64_t>(cert.rank) >= golden::min_rank(cert.d) &&
         static_cast<std::int64_t>(cert.rank) <= golden::max_rank(cert.d));
    c.expect(in_bounds, "rank " + std::to_string(cert.rank) + " at d=" +
                            std::to_string(cert.d) + " out of bounds");
  }
}

void criterion_diesel(Checker& c) {
  for (int d = 4; d <= 12; ++d) {
    const Corank4Report report = corank4_dimension_bounds(d);
    const std::string tag = "d=" + std::to_string(d) + ": ";
    c.expect(report.t1.h_em == golden::h_em_t1(d), tag + "T1 h_EM");
    c.expect(report.t2.h_em == golden::h_em_t2(d), tag + "T2 h_EM");
    c.expect(report.t1.codim_bound >= 10, tag + "T1 codim bound");
    c.expect(report.t2.codim_bound >= golden::t2_codim_bound(d),
             tag + "T2 codim bound");
    if (d == 4) {
      c.expect(report.t1.dim_bound == 34, "d=4 dim bound");
      c.expect(report.t1.ambient_dim == 44, "d=4 ambient dim");
    }
  }
}

void criterion_properties(Checker& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);

  // (a) Hilbert-function symmetry on random point-supported functionals.
  for (int trial = 0; trial < 100; ++trial) {
    const Functional ell = random_point_functional(rng);
    const HilbertFunction h = hilbert_function(ell);
    const int two_d = ell.socle_degree();
    for (int i = 0; i <= two_d; ++i)
      c.expect(h.values[i] == h.values[two_d - i],
               "Hilbert symmetry, trial " + std::to_string(trial));
  }

  // (b) Cayley-Bacharach equality on the catalog splits and random splits.
  std::vector<PointConfig> splits;
  splits.push_back(gamma_split(4));
  splits.push_back(gamma_split(5));
  splits.push_back(d5_catalog(13).construction.config);
  splits.push_back(d5_catalog(14).construction.config);
  splits.push_back(d5_catalog(15).construction.config);
  splits.push_back(d5_catalog(16).construction.config);
  std::uniform_int_distribution<int> grid_dist(4, 5);
  std::uniform_int_distribution<int> size_dist(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = grid_dist(rng);
    PointConfig grid = integer_grid(d);
    const int g2_size = size_dist(rng);
    std::vector<ProjPoint> g2;
    std::uniform_int_distribution<std::size_t> pick(0, grid.points.size() - 1);
    while (static_cast<int>(g2.size()) < g2_size) {
      const ProjPoint cand = grid.points[pick(rng)];
      bool seen = false;
      for (const auto& p : g2)
        if (p == cand) seen = true;
      if (!seen) g2.push_back(cand);
    }
    splits.push_back(with_gamma2(std::move(grid), g2));
  }
  for (std::size_t si = 0; si < splits.size(); ++si) {
    const int s = splits[si].l1.degree() + splits[si].l2.degree() - 3;
    for (int k = 0; k <= s; ++k) {
      const CbDefect defect = cb_defect_check(splits[si], k);
      c.expect(defect.equal, "CB equality, split " + std::to_string(si) +
                                 " degree " + std::to_string(k));
    }
  }

  // (c) PSD certification against the floating eigenvalue oracle, and
  // (d) rank/nullity consistency on the same matrices.
  std::uniform_int_distribution<std::size_t> size(1, 25);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const bool gram = trial % 2 == 0;
    const QMatrix s = random_symmetric(rng, size(rng), gram);
    const PsdCertificate cert = psd_certify(s);
    if (gram) c.expect(cert.verdict == PsdVerdict::Psd, "Gram matrix not PSD");
    if (cert.verdict == PsdVerdict::NotPsd) {
      Rational value = 0;
      for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
          value += cert.witness[i] * s.at(i, j) * cert.witness[j];
      c.expect(sgn(value) < 0, "witness value not negative");
    }
    const double lambda_min = oracle::min_eigenvalue(s);
    if (std::abs(lambda_min) > 1e-8) {
      ++compared;
      c.expect((lambda_min > 0) == (cert.verdict == PsdVerdict::Psd),
               "disagrees with eigenvalue oracle, trial " +
                   std::to_string(trial));
    }
    const std::size_t r = rank(s);
    c.expect(cert.rank == r, "psd rank disagrees with elimination rank");
    c.expect(r + kernel(s).size() == s.cols(), "rank + nullity != cols");
    c.expect(r == oracle::bareiss_rank(s), "rank disagrees with Bareiss");
  }
  c.expect(compared >= 100, "eigenvalue oracle skipped too many cases");

  // (e) the two published minimal degree sequences.
  {
    DegreeSequence a = minimize_degrees(
        degree_sequence({5, 5, 5, 5, 6, 6, 8, 8, 9, 9, 9}, 12));
    c.expect(a.generators == std::vector<int>({5, 5, 5, 5, 8, 8, 9}),
             "first minimal sequence");
    DegreeSequence b =
        minimize_degrees(degree_sequence({4, 5, 5, 6, 7, 7, 8, 9, 9}, 12));
    c.expect(b.generators == std::vector<int>({4, 5, 5, 7, 9}),
             "second minimal sequence");
  }
}

CriterionResult run_criterion(int index, const std::string& name,
                              double budget_seconds,
                              const std::function<void(Checker&)>& body,
                              std::ostream& out) {
  CriterionResult result;
  result.index = index;
  result.name = name;
  Checker checker;
  const auto start = Clock::now();
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (result.seconds > budget_seconds)
    checker.expect(false, "exceeded " + std::to_string(budget_seconds) +
                              " s budget");
  result.passed = checker.ok;
  result.detail = checker.detail.str();
  out << "criterion " << index << " (" << name << "): "
      << (result.passed ? "PASS" : "FAIL");
  char buf[32];
  std::snprintf(buf, sizeof(buf), " (%.2f s)", result.seconds);
  out << buf;
  if (!result.passed) out << "\n  " << result.detail;
  out << "\n";
  return result;
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed, std::ostream& out) {
  std::vector<CriterionResult> results;
  SuiteState state;
  results.push_back(run_criterion(
      1, "golden relation matrix", 5.0,
      [](Checker& c) { criterion_relation(c); }, out));
  results.push_back(run_criterion(
      2, "maximal-rank extreme rays d=4..8", 120.0,
      [&state](Checker& c) { criterion_max_rank(c, state); }, out));
  results.push_back(run_criterion(
      3, "exceptional degrees 4..100", 10.0,
      [](Checker& c) { criterion_exceptional(c); }, out));
  results.push_back(run_criterion(
      4, "d=9 perturbation", 300.0,
      [](Checker& c) { criterion_perturbation(c); }, out));
  results.push_back(run_criterion(
      5, "d=5 rank catalog", 120.0,
      [&state](Checker& c) { criterion_catalog(c, state); }, out));
  results.push_back(run_criterion(
      6, "rank bounds", 5.0,
      [&state](Checker& c) { criterion_rank_bounds(c, state); }, out));
  results.push_back(run_criterion(
      7, "presentation-space counts", 1.0,
      [](Checker& c) { criterion_diesel(c); }, out));
  results.push_back(run_criterion(
      8, "property suites", 300.0,
      [seed](Checker& c) { criterion_properties(c, seed); }, out));
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace hankelray::accept
