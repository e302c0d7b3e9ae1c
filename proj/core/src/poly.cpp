#include "hankelray/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hankelray {

Poly Poly::constant(const Rational& c) {
  Poly p(0);
  p.add_term({0, 0, 0}, c);
  return p;
}

Poly Poly::term(const Monomial& mono, const Rational& c) {
  Poly p(mono.degree());
  p.add_term(mono, c);
  return p;
}

Poly Poly::from_coeffs(int degree, const std::vector<Rational>& coeffs) {
  const auto basis = monomial_basis(degree);
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("from_coeffs: wrong coefficient count");
  Poly p(degree);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
  return p;
}

std::vector<Rational> Poly::coeff_vector() const {
  std::vector<Rational> v(static_cast<std::size_t>(ternary_dim(degree_)),
                          Rational(0));
  for (const auto& [mono, c] : terms_) v[monomial_index(mono)] = c;
  return v;
}

Rational Poly::coeff(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& mono, const Rational& c) {
  if (hankelray::is_zero(c)) return;
  if (mono.degree() != degree_ || mono.a < 0 || mono.b < 0 || mono.c < 0)
    throw std::invalid_argument("term degree does not match the form");
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (hankelray::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (degree_ != o.degree_)
    throw std::invalid_argument("adding forms of different degrees");
  Poly res = *this;
  for (const auto& [mono, c] : o.terms_) res.add_term(mono, c);
  return res;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
  Poly res(degree_ + o.degree_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) res.add_term(m1 + m2, c1 * c2);
  return res;
}

Poly Poly::scaled(const Rational& c) const {
  Poly res(degree_);
  if (hankelray::is_zero(c)) return res;
  for (const auto& [mono, coeff] : terms_) res.add_term(mono, coeff * c);
  return res;
}

Rational evaluate_monomial(const Monomial& mono, const ProjPoint& p) {
  return rational_pow(p.x(), static_cast<unsigned>(mono.a)) *
         rational_pow(p.y(), static_cast<unsigned>(mono.b)) *
         rational_pow(p.z(), static_cast<unsigned>(mono.c));
}

Rational Poly::evaluate(const ProjPoint& p) const {
  Rational acc = 0;
  for (const auto& [mono, c] : terms_) acc += c * evaluate_monomial(mono, p);
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    std::string vars;
    auto append_var = [&vars](char name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (e > 1) vars += "^" + std::to_string(e);
    };
    append_var('x', mono.a);
    append_var('y', mono.b);
    append_var('z', mono.c);
    if (vars.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << vars;
    } else {
      os << to_string(mag) << "*" << vars;
    }
  }
  return os.str();
}

Poly linear_root_product(Var v, const std::vector<Rational>& roots) {
  if (roots.empty())
    throw std::invalid_argument("linear_root_product: no roots given");
  const Monomial var =
      v == Var::X ? Monomial{1, 0, 0} : Monomial{0, 1, 0};
  Poly acc = Poly::constant(1);
  for (const Rational& r : roots) {
    Poly factor = Poly::term(var, 1) + Poly::term({0, 0, 1}, -r);
    acc = acc * factor;
  }
  return acc;
}

Poly diagonal_line(const Rational& c) {
  return Poly::term({1, 0, 0}, 1) + Poly::term({0, 1, 0}, 1) +
         Poly::term({0, 0, 1}, -c);
}

Poly grid_conic(int d) {
  if (d < 4) throw std::invalid_argument("grid_conic: requires d >= 4");
  const Rational mixed = Rational(-2 * (d - 2), d - 1);
  return Poly::term({2, 0, 0}, 1) + Poly::term({0, 2, 0}, 1) +
         Poly::term({1, 1, 0}, mixed) + Poly::term({1, 0, 1}, -1) +
         Poly::term({0, 1, 1}, -1);
}

Poly gamma1_form(int d) {
  Poly p = grid_conic(d);
  for (int j = 3; j <= d; ++j) p = p * diagonal_line(j);
  return p;
}

}  // namespace hankelray
