#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hankelray {

// A monomial x^a y^b z^c. The degree-m basis is ordered graded-lex with
// x > y > z: within one degree, larger a first, then larger b.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return a + b + c; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator+(const Monomial& o) const {
    return {a + o.a, b + o.b, c + o.c};
  }
};

// Basis order: degree ascending, then a descending, then b descending.
struct MonomialOrder {
  bool operator()(const Monomial& l, const Monomial& r) const {
    if (l.degree() != r.degree()) return l.degree() < r.degree();
    if (l.a != r.a) return l.a > r.a;
    return l.b > r.b;
  }
};

// All degree-m monomials in basis order; length C(m+2, 2).
std::vector<Monomial> monomial_basis(int m);

// Index of `mono` within monomial_basis(mono.degree()).
std::size_t monomial_index(const Monomial& mono);

}  // namespace hankelray
