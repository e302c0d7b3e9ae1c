#pragma once

#include <map>
#include <string>
#include <vector>

#include "hankelray/monomial.hpp"
#include "hankelray/projpoint.hpp"
#include "hankelray/rational.hpp"

namespace hankelray {

// A homogeneous ternary form as a sparse coefficient map over the graded-lex
// monomial order. Immutable value type; arithmetic returns new values.
class Poly {
 public:
  explicit Poly(int degree = 0) : degree_(degree) {}

  static Poly constant(const Rational& c);
  static Poly term(const Monomial& mono, const Rational& c);

  // Coefficient vector over monomial_basis(degree), length C(degree+2, 2).
  static Poly from_coeffs(int degree, const std::vector<Rational>& coeffs);
  std::vector<Rational> coeff_vector() const;

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& mono) const;
  const std::map<Monomial, Rational, MonomialOrder>& terms() const {
    return terms_;
  }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;

  Rational evaluate(const ProjPoint& p) const;

  // Human-readable sum of coefficient-monomial terms.
  std::string str() const;

  bool operator==(const Poly& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  void add_term(const Monomial& mono, const Rational& c);

  int degree_;
  std::map<Monomial, Rational, MonomialOrder> terms_;
};

enum class Var { X, Y };

// The product of the linear forms (v - r z) over the given roots r, where v
// is x or y. Degree equals the number of roots; roots must be nonempty.
Poly linear_root_product(Var v, const std::vector<Rational>& roots);

// The line x + y - c z.
Poly diagonal_line(const Rational& c);

// The unique conic through (0,0), (1,0), (0,1), (d-1,d-1), (d-2,d-1),
// (d-1,d-2): x^2 + y^2 - (2(d-2)/(d-1)) xy - xz - yz. Requires d >= 4.
Poly grid_conic(int d);

// The degree-d form completing {L1, L2} to a basis of the forms through
// Gamma_1 of the split d x d grid: grid_conic(d) times the product of the
// lines x + y - jz for j = 3..d. For non-exceptional d it vanishes nowhere
// on Gamma_2. Requires d >= 4.
Poly gamma1_form(int d);

Rational evaluate_monomial(const Monomial& mono, const ProjPoint& p);

}  // namespace hankelray
