#include "hankelray/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hankelray/errors.hpp"

namespace hankelray {

namespace {

// Scales a row by a positive rational so all entries become coprime
// integers. Leaves zero rows alone; never flips signs.
void make_row_primitive(std::vector<Rational>& row) {
  Integer den_lcm = 1;
  bool any = false;
  for (const auto& e : row) {
    if (is_zero(e)) continue;
    any = true;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            e.get_den().get_mpz_t());
  }
  if (!any) return;
  std::vector<Integer> ints(row.size());
  Integer g = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (is_zero(row[i])) continue;
    ints[i] = row[i].get_num() * (den_lcm / row[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < row.size(); ++i) {
    row[i] = is_zero(row[i]) ? Rational(0) : Rational(ints[i] / g);
  }
}

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMatrix QMatrix::vstack(const QMatrix& top, const QMatrix& bottom) {
  if (top.cols() != bottom.cols())
    throw std::invalid_argument("vstack: column counts differ");
  QMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j)
      m.at(top.rows() + i, j) = bottom.at(i, j);
  return m;
}

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.r = m;
  QMatrix& r = res.r;
  const std::size_t rows = r.rows(), cols = r.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && is_zero(r.at(piv, col))) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(r.at(piv, j), r.at(lead, j));
    // Rows at or below `lead` are zero in every earlier column, so the
    // pivot row only needs normalizing from `col` on.
    {
      Rational inv = Rational(1) / r.at(lead, col);
      for (std::size_t j = col; j < cols; ++j)
        if (!is_zero(r.at(lead, j))) r.at(lead, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || is_zero(r.at(i, col))) continue;
      Rational f = r.at(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (is_zero(r.at(lead, j))) continue;
        r.at(i, j) -= f * r.at(lead, j);
      }
    }
    res.pivot_cols.push_back(col);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    a[i].assign(m.row(i).begin(), m.row(i).end());
    make_row_primitive(a[i]);
  }
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && is_zero(a[piv][col])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[lead]);
    const Rational pc = a[lead][col];
    for (std::size_t i = lead + 1; i < rows; ++i) {
      if (is_zero(a[i][col])) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        a[i][j] = pc * a[i][j] - f * a[lead][j];
      make_row_primitive(a[i]);
    }
    ++lead;
  }
  return lead;
}

std::vector<std::vector<Rational>> kernel(const QMatrix& m) {
  const RrefResult res = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : res.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t j = 0; j < res.pivot_cols.size(); ++j)
      v[res.pivot_cols[j]] = -res.r.at(j, f);
    // Scale so the first nonzero entry is 1.
    for (const auto& e : v) {
      if (is_zero(e)) continue;
      if (e != 1) {
        Rational inv = Rational(1) / e;
        for (auto& x : v)
          if (!is_zero(x)) x *= inv;
      }
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a,
                                           std::span<const Rational> b) {
  if (a.rows() != b.size())
    throw std::invalid_argument("solve: size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult res = rref(aug);
  for (std::size_t c : res.pivot_cols)
    if (c == a.cols()) return std::nullopt;  // inconsistent
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t j = 0; j < res.pivot_cols.size(); ++j)
    x[res.pivot_cols[j]] = res.r.at(j, a.cols());
  return x;
}

bool in_row_span(const QMatrix& rows, std::span<const Rational> v) {
  if (rows.cols() != v.size())
    throw std::invalid_argument("in_row_span: size mismatch");
  QMatrix ext(rows.rows() + 1, rows.cols());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) ext.at(i, j) = rows.at(i, j);
  for (std::size_t j = 0; j < rows.cols(); ++j)
    ext.at(rows.rows(), j) = v[j];
  return rank(ext) == rank(rows);
}

PsdCertificate psd_certify(const QMatrix& s) {
  if (!s.is_symmetric()) throw NotSymmetricError();
  const std::size_t n = s.rows();

  QMatrix b = s;
  // comb[i] tracks the row operations, so that b restricted to the active
  // set equals comb * s * comb^T; witnesses are read off these rows.
  QMatrix comb = QMatrix::identity(n);
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  PsdCertificate cert;
  auto quadratic_value = [&s](const std::vector<Rational>& v) {
    Rational acc = 0;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      if (is_zero(v[i])) continue;
      for (std::size_t j = 0; j < s.cols(); ++j) {
        if (is_zero(v[j])) continue;
        acc += v[i] * s.at(i, j) * v[j];
      }
    }
    return acc;
  };
  auto not_psd = [&](std::vector<Rational> witness) {
    cert.verdict = PsdVerdict::NotPsd;
    cert.pivots.clear();
    cert.witness = std::move(witness);
    cert.witness_value = quadratic_value(cert.witness);
    cert.rank = rank(s);
    return cert;
  };

  while (!active.empty()) {
    // Largest-magnitude remaining diagonal entry; ties towards lower index.
    std::size_t best = 0;
    for (std::size_t k = 1; k < active.size(); ++k)
      if (abs(b.at(active[k], active[k])) >
          abs(b.at(active[best], active[best])))
        best = k;
    const std::size_t p = active[best];

    if (is_zero(b.at(p, p))) {
      // Every remaining diagonal entry is zero. A nonzero off-diagonal
      // entry then witnesses indefiniteness.
      for (std::size_t ii = 0; ii < active.size(); ++ii) {
        for (std::size_t jj = ii + 1; jj < active.size(); ++jj) {
          const std::size_t i = active[ii], j = active[jj];
          if (is_zero(b.at(i, j))) continue;
          std::vector<Rational> w(n, Rational(0));
          const int sign = sgn(b.at(i, j));
          for (std::size_t c = 0; c < n; ++c)
            w[c] = comb.at(i, c) - Rational(sign) * comb.at(j, c);
          return not_psd(std::move(w));
        }
      }
      break;  // remaining block is zero: positive semidefinite so far
    }
    if (sgn(b.at(p, p)) < 0) {
      std::vector<Rational> w(n, Rational(0));
      for (std::size_t c = 0; c < n; ++c) w[c] = comb.at(p, c);
      return not_psd(std::move(w));
    }

    const Rational pivot = b.at(p, p);
    cert.pivots.push_back(pivot);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));

    std::vector<Rational> pivot_col(active.size());
    for (std::size_t k = 0; k < active.size(); ++k)
      pivot_col[k] = b.at(active[k], p);
    for (std::size_t ki = 0; ki < active.size(); ++ki) {
      if (is_zero(pivot_col[ki])) continue;
      const std::size_t i = active[ki];
      const Rational f = pivot_col[ki] / pivot;
      for (std::size_t kj = 0; kj < active.size(); ++kj) {
        const std::size_t j = active[kj];
        if (is_zero(pivot_col[kj])) continue;
        b.at(i, j) -= f * pivot_col[kj];
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (is_zero(comb.at(p, c))) continue;
        comb.at(i, c) -= f * comb.at(p, c);
      }
    }
  }

  cert.verdict = PsdVerdict::Psd;
  cert.rank = cert.pivots.size();
  return cert;
}

}  // namespace hankelray
