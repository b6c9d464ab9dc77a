#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lospec/field.hpp"

namespace lospec::poly {

enum class Ring { sphere, euclidean4 };

// Exponents of the four generators: (z, zb, w, wb) on the sphere ring,
// (x1, y1, x2, y2) on the euclidean ring.
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  // sphere ring only: z and w count +1, zb and wb count -1
  int weight() const { return e[0] - e[1] + e[2] - e[3]; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic: by total degree, then lexicographically on exponents.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElem, GradedLexLess>;

  explicit Poly(Ring ring = Ring::sphere) : ring_(ring) {}
  static Poly zero(Ring ring) { return Poly(ring); }
  static Poly constant(Ring ring, const FieldElem& c);
  static Poly generator(Ring ring, int index);  // z,zb,w,wb / x1,y1,x2,y2
  static Poly monomial(Ring ring, const Monomial& m, const FieldElem& c);

  Ring ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  FieldElem coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const FieldElem& c);

  // -1 for the zero polynomial, the common degree for homogeneous input,
  // throws otherwise.
  int homogeneous_degree() const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElem& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b);

  // Complex conjugate: swaps z<->zb, w<->wb (sphere ring) and conjugates
  // coefficients; on the euclidean ring just conjugates coefficients.
  Poly conj() const;

  FieldElem eval(const std::array<FieldElem, 4>& x) const;

  std::string text() const;

 private:
  Ring ring_;
  TermMap terms_;
};

void require_ring(const Poly& p, Ring ring, const char* op);

// Right-invariant derivations d1, d2, d3 on the sphere ring, extended from
// the generator images by the Leibniz rule:
//   d1: z->iz, w->iw, zb->-i zb, wb->-i wb
//   d2: z->-wb, w->zb, zb->-w, wb->z
//   d3: z->-i wb, w->i zb, zb->i w, wb->-i z
Poly apply_derivation(int index, const Poly& f);

// [d_i, d_j]f minus the bracket-table multiple of the third derivation;
// identically zero by the Lie bracket relations.
Poly commutator_defect(int i, int j, const Poly& f);

// d1^2 + d2^2 + d3^2
Poly laplacian_round(const Poly& f);

// (1/tau) d1^2 + d2^2 + d3^2, tau > 0
Poly laplacian_berger(const Poly& f, const Rational& tau);

// Euclidean Laplacian of C^2 in Wirtinger form: on z^a zb^b w^c wb^d gives
// 4(ab z^{a-1}zb^{b-1}w^c wb^d + cd z^a zb^b w^{c-1}wb^{d-1}).
Poly laplacian_c2(const Poly& f);

// Normalized average over S^3: zero unless a=b and c=d, else a!c!/(a+c+1)!.
Rational sphere_integral(const Monomial& m);
FieldElem sphere_integral(const Poly& f);

// <f,g> = average of f * conj(g) over S^3.
FieldElem sphere_inner_product(const Poly& f, const Poly& g);

// d/d(generator index) on the euclidean ring.
Poly partial_derivative(const Poly& f, int index);

}  // namespace lospec::poly
