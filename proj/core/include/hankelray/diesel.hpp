#pragma once

#include <cstdint>
#include <vector>

namespace hankelray {

// Generator degrees ascending, relation degrees descending; matched position
// by position they satisfy q_i + p_i = socle + 3.
struct DegreeSequence {
  std::vector<int> generators;
  std::vector<int> relations;
  int socle = 0;

  bool operator==(const DegreeSequence&) const = default;
};

// Builds the sequence from generator degrees; relations are socle+3 - q,
// sorted descending.
DegreeSequence degree_sequence(std::vector<int> generators, int socle);

// Iteratively deletes index pairs (i, j) with p_i + p_j - q_i - q_j = 0,
// smallest i first, then smallest j, until none remain.
DegreeSequence minimize_degrees(DegreeSequence seq);

// Dimension of the space of compatible skew-symmetric presentation matrices:
// the sum over i < j of dim C[x,y,z]_{p_j - q_i} (zero for negative degree).
// Expects a minimized sequence.
std::int64_t h_em(const DegreeSequence& seq);

// A partition in an (m-2k+2) x 2k box (height x width), stored as the full
// width-2k weakly decreasing list of column heights, equal to its own
// complement rotated by 180 degrees.
struct SelfComplementaryPartition {
  int box_height = 0;
  int box_width = 0;
  std::vector<int> column_heights;

  bool operator==(const SelfComplementaryPartition&) const = default;
};

// All self-complementary partitions in the (m-2k+2) x 2k box for Hilbert
// functions of order k and socle degree m. Requires 2k <= m + 2.
std::vector<SelfComplementaryPartition> enumerate_self_complementary(int k,
                                                                     int m);

// Reads the maximal generator multiset off a partition: the 2k+1 degrees
// {k} and {k + h_i : i = 1..2k}. Validated against the three explicitly
// known corank-4 sequences; other partitions are unverified.
DegreeSequence partition_degree_sequence(const SelfComplementaryPartition& p,
                                         int k, int m);

// The two corank-4 partitions: order d in a 2 x 2d box and order d-1 in a
// 4 x (2d-2) box.
SelfComplementaryPartition t1_partition(int d);
SelfComplementaryPartition t2_partition(int d);

struct FamilyBounds {
  DegreeSequence full;       // 2k+1 generators from the partition
  DegreeSequence minimized;  // D_min
  std::int64_t h_em = 0;
  std::int64_t overcount = 0;
  std::int64_t dim_bound = 0;    // h_em - overcount
  std::int64_t ambient_dim = 0;  // projective dimension C(2d+2,2) - 1
  std::int64_t codim_bound = 0;  // ambient_dim - dim_bound
};

struct Corank4Report {
  int d = 0;
  FamilyBounds t1;
  FamilyBounds t2;
  // codim(T2) >= 2d+4 >= 12 exceeds the codimension-10 bound of T1, so the
  // T2 family cannot be a component of the corank-4 locus.
  bool t2_exceeds_t1 = false;
};

// Reproduces the corank-4 dimension count for both Hilbert-function
// families. Requires d >= 4.
Corank4Report corank4_dimension_bounds(int d);

// Socle degree d1 + d2 + d3 - 3 of a complete intersection of three ternary
// forms.
int ci_socle_degree(int d1, int d2, int d3);

}  // namespace hankelray
