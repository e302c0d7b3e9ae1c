#pragma once

// Independent oracles used by the verification suites. These deliberately
// avoid the library's own elimination routines: rank via fraction-free
// Bareiss elimination on scaled integer rows, semidefiniteness via a
// floating-point eigendecomposition, and ideal-square spans via a separate
// convolution-based product enumeration.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "hankelray/functional.hpp"
#include "hankelray/qmatrix.hpp"

namespace hankelray::oracle {

// Fraction-free Gaussian elimination (Bareiss) rank on the integer matrix
// obtained by clearing each row's denominators.
inline std::size_t bareiss_rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[lead]);
    for (std::size_t i = lead + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        a[i][j] = (a[lead][col] * a[i][j] - a[i][col] * a[lead][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[lead][col];
    ++lead;
  }
  return lead;
}

// Smallest eigenvalue of the double-precision image of a symmetric matrix.
inline double min_eigenvalue(const QMatrix& s) {
  Eigen::MatrixXd a(s.rows(), s.cols());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          s.at(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  return solver.eigenvalues().minCoeff();
}

// Brute-force dimension of the degree-2d part of the squared apolar ideal:
// enumerates all ordered products (no a <= b shortcut), multiplies
// coefficient vectors by direct exponent convolution, and takes the Bareiss
// rank of the stack.
inline std::size_t ideal_square_dimension(const Functional& ell) {
  const int two_d = ell.socle_degree();
  const auto basis_2d = monomial_basis(two_d);
  std::vector<std::vector<Rational>> rows;
  for (int a = 0; a <= two_d; ++a) {
    const int b = two_d - a;
    if (a > b) break;
    const IdealPart ia = ideal_degree_part(ell, a);
    if (ia.basis.empty()) continue;
    const IdealPart ib = ideal_degree_part(ell, b);
    if (ib.basis.empty()) continue;
    for (const Poly& f : ia.basis) {
      for (const Poly& g : ib.basis) {
        std::vector<Rational> row(basis_2d.size(), Rational(0));
        for (const auto& [mf, cf] : f.terms())
          for (const auto& [mg, cg] : g.terms())
            row[monomial_index(mf + mg)] += cf * cg;
        rows.push_back(std::move(row));
        // also the reversed product, so the enumeration ignores symmetry
        if (a != b) {
          std::vector<Rational> rev(basis_2d.size(), Rational(0));
          for (const auto& [mg, cg] : g.terms())
            for (const auto& [mf, cf] : f.terms())
              rev[monomial_index(mg + mf)] += cg * cf;
          rows.push_back(std::move(rev));
        }
      }
    }
  }
  QMatrix stack(rows.size(), basis_2d.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < basis_2d.size(); ++j)
      stack.at(i, j) = rows[i][j];
  return bareiss_rank(stack);
}

}  // namespace hankelray::oracle
