#include "hankelray/functional.hpp"

#include <stdexcept>
#include <utility>

#include "hankelray/errors.hpp"

namespace hankelray {

Functional::Functional(int socle_degree, std::vector<Rational> values,
                       std::optional<std::vector<WeightedPoint>> support)
    : socle_degree_(socle_degree),
      values_(std::move(values)),
      support_(std::move(support)) {
  if (socle_degree_ < 2 || socle_degree_ % 2 != 0)
    throw std::invalid_argument("socle degree must be even and >= 2");
  if (values_.size() != static_cast<std::size_t>(ternary_dim(socle_degree_)))
    throw std::invalid_argument("functional value vector has wrong length");
}

Functional Functional::zero(int socle_degree) {
  return Functional(
      socle_degree,
      std::vector<Rational>(static_cast<std::size_t>(ternary_dim(socle_degree)),
                            Rational(0)));
}

bool Functional::is_zero() const {
  for (const auto& v : values_)
    if (!hankelray::is_zero(v)) return false;
  return true;
}

Rational Functional::operator()(const Monomial& mono) const {
  if (mono.degree() != socle_degree_)
    throw std::invalid_argument("monomial degree does not match the socle");
  return values_[monomial_index(mono)];
}

Rational Functional::operator()(const Poly& p) const {
  if (p.degree() != socle_degree_)
    throw std::invalid_argument("form degree does not match the socle");
  Rational acc = 0;
  for (const auto& [mono, c] : p.terms()) acc += c * values_[monomial_index(mono)];
  return acc;
}

Functional Functional::scaled(const Rational& c) const {
  std::vector<Rational> v = values_;
  for (auto& e : v) e *= c;
  auto supp = support_;
  if (supp)
    for (auto& wp : *supp) wp.weight *= c;
  return Functional(socle_degree_, std::move(v), std::move(supp));
}

Functional functional_from_points(const std::vector<WeightedPoint>& support,
                                  int socle_degree) {
  const auto basis = monomial_basis(socle_degree);
  std::vector<Rational> values(basis.size(), Rational(0));
  for (const auto& wp : support) {
    // Power tables per point keep the evaluation loop cheap.
    std::vector<Rational> px(socle_degree + 1), py(socle_degree + 1),
        pz(socle_degree + 1);
    px[0] = py[0] = pz[0] = 1;
    for (int e = 1; e <= socle_degree; ++e) {
      px[e] = px[e - 1] * wp.point.x();
      py[e] = py[e - 1] * wp.point.y();
      pz[e] = pz[e - 1] * wp.point.z();
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      values[i] += wp.weight * px[basis[i].a] * py[basis[i].b] * pz[basis[i].c];
  }
  return Functional(socle_degree, std::move(values), support);
}

CatalecticantMatrix catalecticant(const Functional& ell, int u) {
  const int two_d = ell.socle_degree();
  if (u < 0 || u > two_d)
    throw std::invalid_argument("catalecticant: degree out of range");
  const int v = two_d - u;
  const auto rows_basis = monomial_basis(u);
  const auto cols_basis = monomial_basis(v);
  QMatrix m(rows_basis.size(), cols_basis.size());
  const auto& values = ell.values();
  for (std::size_t i = 0; i < rows_basis.size(); ++i)
    for (std::size_t j = 0; j < cols_basis.size(); ++j)
      m.at(i, j) = values[monomial_index(rows_basis[i] + cols_basis[j])];
  return {u, v, std::move(m)};
}

QMatrix hankel(const Functional& ell) {
  return catalecticant(ell, ell.half_degree()).matrix;
}

IdealPart ideal_degree_part(const Functional& ell, int k) {
  if (k < 0) throw std::invalid_argument("ideal_degree_part: negative degree");
  IdealPart part;
  part.degree = k;
  if (k > ell.socle_degree()) {
    part.full_space = true;
    return part;
  }
  // Forms p of degree k with ell(p q) = 0 for all q: the left kernel of the
  // (k, 2d-k) Catalecticant.
  const QMatrix cat = catalecticant(ell, k).matrix;
  for (auto& vec : kernel(cat.transpose()))
    part.basis.push_back(Poly::from_coeffs(k, vec));
  return part;
}

HilbertFunction hilbert_function(const Functional& ell) {
  if (ell.is_zero()) throw ZeroFunctionalError();
  HilbertFunction h;
  h.values.reserve(ell.socle_degree() + 1);
  for (int k = 0; k <= ell.socle_degree(); ++k)
    h.values.push_back(
        static_cast<std::int64_t>(rank(catalecticant(ell, k).matrix)));
  return h;
}

IdealSquarePart ideal_square_degree_part(const Functional& ell) {
  if (ell.is_zero()) throw ZeroFunctionalError();
  const int two_d = ell.socle_degree();
  const int d = ell.half_degree();
  const std::size_t dim_2d = static_cast<std::size_t>(ternary_dim(two_d));

  std::vector<std::vector<Rational>> rows;
  for (int a = 0; a <= d; ++a) {
    const IdealPart ia = ideal_degree_part(ell, a);
    if (ia.basis.empty()) continue;
    const int b = two_d - a;
    const IdealPart ib = a == b ? ia : ideal_degree_part(ell, b);
    if (ib.basis.empty()) continue;
    for (std::size_t i = 0; i < ia.basis.size(); ++i) {
      const std::size_t j0 = (a == b) ? i : 0;
      for (std::size_t j = j0; j < ib.basis.size(); ++j)
        rows.push_back((ia.basis[i] * ib.basis[j]).coeff_vector());
    }
  }

  QMatrix stack(rows.size(), dim_2d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim_2d; ++j) stack.at(i, j) = rows[i][j];

  const RrefResult res = rref(stack);
  IdealSquarePart out;
  out.dimension = res.rank;
  for (std::size_t i = 0; i < res.rank; ++i) {
    std::vector<Rational> vec(res.r.row(i).begin(), res.r.row(i).end());
    out.basis.push_back(Poly::from_coeffs(two_d, vec));
  }
  return out;
}

}  // namespace hankelray
