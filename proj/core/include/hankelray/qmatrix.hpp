#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hankelray/rational.hpp"

namespace hankelray {

// Dense exact rational matrix, row-major. Values are immutable in spirit:
// all algorithms below are pure functions returning fresh data.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  QMatrix transpose() const;
  bool is_symmetric() const;
  bool operator==(const QMatrix& other) const = default;

  // Appends rows of `other` below; column counts must agree.
  static QMatrix vstack(const QMatrix& top, const QMatrix& bottom);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  QMatrix r;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// Unique reduced row echelon form. Pivot search scans each column top to
// bottom and takes the first nonzero entry.
RrefResult rref(const QMatrix& m);

// Rank via forward elimination on gcd-normalized integer rows. Same pivot
// order as rref; exact, and much cheaper on large stacks of product rows.
std::size_t rank(const QMatrix& m);

// Basis of the right null space, one vector per free column of the RREF,
// each scaled so its first nonzero entry is 1.
std::vector<std::vector<Rational>> kernel(const QMatrix& m);

// One exact solution of A x = b with free variables set to 0, or nullopt if
// the system is inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& a,
                                           std::span<const Rational> b);

// Whether v lies in the row span of `rows`.
bool in_row_span(const QMatrix& rows, std::span<const Rational> v);

enum class PsdVerdict { Psd, NotPsd };

struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::Psd;
  std::vector<Rational> pivots;   // positive pivots, Psd case
  std::vector<Rational> witness;  // v with v^T S v < 0, NotPsd case
  Rational witness_value;         // the (negative) value v^T S v
  std::size_t rank = 0;
};

// Exact semidefiniteness test by symmetric Gaussian elimination. The pivot is
// the largest-magnitude remaining diagonal entry (ties: smallest index). A
// negative pivot, or an all-zero remaining diagonal next to a nonzero
// off-diagonal entry, yields an explicit witness vector.
// Throws NotSymmetricError if S != S^T.
PsdCertificate psd_certify(const QMatrix& s);

}  // namespace hankelray
