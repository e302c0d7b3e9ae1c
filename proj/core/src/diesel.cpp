#include "hankelray/diesel.hpp"

#include <algorithm>
#include <stdexcept>

#include "hankelray/rational.hpp"

namespace hankelray {

DegreeSequence degree_sequence(std::vector<int> generators, int socle) {
  std::sort(generators.begin(), generators.end());
  DegreeSequence seq;
  seq.socle = socle;
  seq.relations.reserve(generators.size());
  for (int q : generators) seq.relations.push_back(socle + 3 - q);
  seq.generators = std::move(generators);
  // Generators ascending makes relations descending automatically.
  return seq;
}

DegreeSequence minimize_degrees(DegreeSequence seq) {
  if (seq.generators.size() != seq.relations.size())
    throw std::invalid_argument("degree sequence: |Q| != |P|");
  bool deleted = true;
  while (deleted) {
    deleted = false;
    const std::size_t n = seq.generators.size();
    for (std::size_t i = 0; i < n && !deleted; ++i) {
      for (std::size_t j = i + 1; j < n && !deleted; ++j) {
        const int sum = seq.relations[i] + seq.relations[j] -
                        seq.generators[i] - seq.generators[j];
        if (sum != 0) continue;
        seq.generators.erase(seq.generators.begin() + j);
        seq.generators.erase(seq.generators.begin() + i);
        seq.relations.erase(seq.relations.begin() + j);
        seq.relations.erase(seq.relations.begin() + i);
        deleted = true;
      }
    }
  }
  return seq;
}

std::int64_t h_em(const DegreeSequence& seq) {
  std::int64_t total = 0;
  const std::size_t n = seq.generators.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      total += ternary_dim(seq.relations[j] - seq.generators[i]);
  return total;
}

std::vector<SelfComplementaryPartition> enumerate_self_complementary(int k,
                                                                     int m) {
  if (k < 0 || 2 * k > m + 2)
    throw std::invalid_argument("enumerate_self_complementary: box malformed");
  const int height = m - 2 * k + 2;
  const int width = 2 * k;
  std::vector<SelfComplementaryPartition> out;
  if (width == 0) {
    out.push_back({height, width, {}});
    return out;
  }
  // The first k column heights determine the rest: h_{k+i} = height -
  // h_{k+1-i}. Weak decrease across the middle forces 2 h_k >= height.
  const int low = (height + 1) / 2;
  std::vector<int> half(k);
  auto emit = [&]() {
    std::vector<int> columns(width);
    for (int i = 0; i < k; ++i) columns[i] = half[i];
    for (int i = 0; i < k; ++i) columns[k + i] = height - half[k - 1 - i];
    out.push_back({height, width, std::move(columns)});
  };
  auto rec = [&](auto&& self, int pos, int maxv) -> void {
    if (pos == k) {
      emit();
      return;
    }
    for (int h = maxv; h >= low; --h) {
      half[pos] = h;
      self(self, pos + 1, h);
    }
  };
  rec(rec, 0, height);
  return out;
}

DegreeSequence partition_degree_sequence(const SelfComplementaryPartition& p,
                                         int k, int m) {
  if (p.box_width != 2 * k || p.box_height != m - 2 * k + 2)
    throw std::invalid_argument("partition does not fit the (k, m) box");
  std::vector<int> gens;
  gens.reserve(p.column_heights.size() + 1);
  gens.push_back(k);
  for (int h : p.column_heights) gens.push_back(k + h);
  return degree_sequence(std::move(gens), m);
}

SelfComplementaryPartition t1_partition(int d) {
  if (d < 3) throw std::invalid_argument("t1_partition: requires d >= 3");
  std::vector<int> columns(2 * d, 0);
  for (int i = 0; i < 3; ++i) columns[i] = 2;
  for (int i = 3; i < 2 * d - 3; ++i) columns[i] = 1;
  return {2, 2 * d, std::move(columns)};
}

SelfComplementaryPartition t2_partition(int d) {
  if (d < 4) throw std::invalid_argument("t2_partition: requires d >= 4");
  std::vector<int> columns(2 * d - 2, 2);
  columns.front() = 3;
  columns.back() = 1;
  return {4, 2 * d - 2, std::move(columns)};
}

Corank4Report corank4_dimension_bounds(int d) {
  if (d < 4)
    throw std::invalid_argument("corank4_dimension_bounds: requires d >= 4");
  Corank4Report report;
  report.d = d;
  const std::int64_t ambient = ternary_dim(2 * d) - 1;

  // Four generators in degree d, none lower: every ideal choice is counted
  // once per basis of the degree-d generators (16) and once per choice of the
  // extra generators above degree d.
  report.t1.full = partition_degree_sequence(t1_partition(d), d, 2 * d);
  report.t1.minimized = minimize_degrees(report.t1.full);
  report.t1.h_em = h_em(report.t1.minimized);
  if (d == 4) {
    report.t1.overcount = 16 + (ternary_dim(6) - ternary_dim(2));
  } else {
    report.t1.overcount =
        16 + (2 * d - 9) * (ternary_dim(d + 1) - ternary_dim(d - 1));
  }
  report.t1.dim_bound = report.t1.h_em - report.t1.overcount;
  report.t1.ambient_dim = ambient;
  report.t1.codim_bound = ambient - report.t1.dim_bound;

  // One generator of degree d-1 and one of degree d.
  report.t2.full = partition_degree_sequence(t2_partition(d), d - 1, 2 * d);
  report.t2.minimized = minimize_degrees(report.t2.full);
  report.t2.h_em = h_em(report.t2.minimized);
  report.t2.overcount =
      4 + (2 * d - 5) * (ternary_dim(d + 1) - (ternary_dim(d - 1) - 1));
  report.t2.dim_bound = report.t2.h_em - report.t2.overcount;
  report.t2.ambient_dim = ambient;
  report.t2.codim_bound = ambient - report.t2.dim_bound;

  report.t2_exceeds_t1 =
      report.t2.codim_bound >= 12 && report.t2.codim_bound > report.t1.codim_bound;
  return report;
}

int ci_socle_degree(int d1, int d2, int d3) { return d1 + d2 + d3 - 3; }

}  // namespace hankelray
