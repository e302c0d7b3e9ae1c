#pragma once

#include <array>
#include <cstdint>

namespace hankelray::golden {

// Version of the embedded expected-value tables; bump when any table changes.
inline constexpr int kDataVersion = 1;

// The unique degree-5 relation on Gamma_1 of the split 5x5 grid, in grid
// layout (entry (i,j), 1-based, is the coefficient at (5-i : j-1 : 1)),
// scaled to coprime integers. The exporter normalizes the lexicographically
// first support point (0:0:1) to 1, i.e. divides this table by 3.
inline constexpr int kRelationGridD5[5][5] = {
    {-1, 3, 0, -5, 3},
    {3, -16, 18, 0, -5},
    {0, 18, -36, 18, 0},
    {-5, 0, 18, -16, 3},
    {3, -5, 0, 3, -1},
};

// Hilbert functions of the five d = 5 catalog constructions, ranks 13..17.
inline constexpr std::int64_t kCatalogHilbert[5][11] = {
    {1, 3, 6, 9, 12, 13, 12, 9, 6, 3, 1},
    {1, 3, 6, 10, 13, 14, 13, 10, 6, 3, 1},
    {1, 3, 6, 10, 14, 15, 14, 10, 6, 3, 1},
    {1, 3, 6, 10, 14, 16, 14, 10, 6, 3, 1},
    {1, 3, 6, 10, 15, 17, 15, 10, 6, 3, 1},
};

// Degrees in 4..100 whose grid conic picks up extra integer grid points.
inline constexpr std::array<int, 18> kExceptionalDegrees = {
    9, 19, 21, 29, 33, 34, 36, 40, 49, 51, 57, 61, 73, 78, 79, 81, 89, 99};

constexpr std::int64_t ternary_dim(std::int64_t n) {
  return n < 0 ? 0 : (n + 2) * (n + 1) / 2;
}

// Maximal Hankel rank of a non-evaluation extreme ray.
constexpr std::int64_t max_rank(int d) { return ternary_dim(d) - 4; }

// Minimal Hankel rank of a non-evaluation extreme ray.
constexpr std::int64_t min_rank(int d) { return 3 * d - 2; }

// Presentation-space dimensions for the two corank-4 Hilbert functions.
constexpr std::int64_t h_em_t1(int d) {
  return d == 4 ? 72 : 6 * d * d - 9 * d - 21;
}
constexpr std::int64_t h_em_t2(int d) { return 6 * d * d - d - 20; }

constexpr std::int64_t t1_dim_bound(int d) {
  return d == 4 ? 34 : 2 * d * d + 3 * d - 10;
}
constexpr std::int64_t ambient_dim(int d) { return ternary_dim(2 * d) - 1; }
constexpr std::int64_t t2_codim_bound(int d) { return 2 * d + 4; }

}  // namespace hankelray::golden
