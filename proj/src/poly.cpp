#include "lospec/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lospec::poly {

namespace {
const char* kSphereGens[4] = {"z", "zb", "w", "wb"};
const char* kEuclideanGens[4] = {"x1", "y1", "x2", "y2"};
}  // namespace

Poly Poly::constant(Ring ring, const FieldElem& c) {
  Poly p(ring);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::generator(Ring ring, int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("generator index out of range");
  Monomial m;
  m.e[index] = 1;
  Poly p(ring);
  p.add_term(m, FieldElem::one());
  return p;
}

Poly Poly::monomial(Ring ring, const Monomial& m, const FieldElem& c) {
  Poly p(ring);
  p.add_term(m, c);
  return p;
}

FieldElem Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem() : it->second;
}

void Poly::add_term(const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) throw std::domain_error("polynomial is not homogeneous");
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_ring(o, ring_, "add");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_ring(o, ring_, "subtract");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_ring(b, a.ring_, "multiply");
  Poly r(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < 4; ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly operator*(const FieldElem& c, const Poly& p) {
  Poly r(p.ring_);
  if (c.is_zero()) return r;
  for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  }
  return true;
}

Poly Poly::conj() const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial cm = m;
    if (ring_ == Ring::sphere) {
      std::swap(cm.e[0], cm.e[1]);
      std::swap(cm.e[2], cm.e[3]);
    }
    r.add_term(cm, c.conj());
  }
  return r;
}

FieldElem Poly::eval(const std::array<FieldElem, 4>& x) const {
  FieldElem acc;
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

std::string Poly::text() const {
  if (terms_.empty()) return "0";
  const char** names = ring_ == Ring::sphere ? kSphereGens : kEuclideanGens;
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.text() << ")";
    for (int i = 0; i < 4; ++i) os << "*" << names[i] << "^" << m.e[i];
  }
  return os.str();
}

void require_ring(const Poly& p, Ring ring, const char* op) {
  if (p.ring() != ring)
    throw std::domain_error(std::string("ring mismatch in polynomial ") + op);
}

namespace {

struct GenImage {
  FieldElem coeff;
  int target;  // generator index
};

// Images of (z, zb, w, wb) under d1, d2, d3.
std::array<GenImage, 4> derivation_table(int index) {
  FieldElem i = FieldElem::i();
  FieldElem one = FieldElem::one();
  switch (index) {
    case 1:
      return {GenImage{i, 0}, GenImage{-i, 1}, GenImage{i, 2}, GenImage{-i, 3}};
    case 2:
      return {GenImage{-one, 3}, GenImage{-one, 2}, GenImage{one, 1}, GenImage{one, 0}};
    case 3:
      return {GenImage{-i, 3}, GenImage{i, 2}, GenImage{i, 1}, GenImage{-i, 0}};
    default:
      throw std::invalid_argument("derivation index must be 1, 2 or 3");
  }
}

}  // namespace

Poly apply_derivation(int index, const Poly& f) {
  require_ring(f, Ring::sphere, "derivation");
  auto table = derivation_table(index);
  Poly r(Ring::sphere);
  for (const auto& [m, c] : f.terms()) {
    for (int g = 0; g < 4; ++g) {
      if (m.e[g] == 0) continue;
      Monomial t = m;
      t.e[g] -= 1;
      t.e[table[g].target] += 1;
      r.add_term(t, Rational(m.e[g]) * (c * table[g].coeff));
    }
  }
  return r;
}

Poly commutator_defect(int i, int j, const Poly& f) {
  if (i == j) throw std::invalid_argument("commutator requires distinct indices");
  require_ring(f, Ring::sphere, "commutator");
  Poly bracket = apply_derivation(i, apply_derivation(j, f)) -
                 apply_derivation(j, apply_derivation(i, f));
  // [d2,d3] = -2 d1, [d1,d3] = 2 d2, [d1,d2] = -2 d3 and antisymmetry.
  int k = 6 - i - j;
  Rational factor;
  if ((i == 2 && j == 3)) factor = -2;
  else if ((i == 3 && j == 2)) factor = 2;
  else if ((i == 1 && j == 3)) factor = 2;
  else if ((i == 3 && j == 1)) factor = -2;
  else if ((i == 1 && j == 2)) factor = -2;
  else factor = 2;  // (2,1)
  return bracket - FieldElem(factor) * apply_derivation(k, f);
}

Poly laplacian_round(const Poly& f) {
  require_ring(f, Ring::sphere, "laplacian");
  Poly r(Ring::sphere);
  for (int i = 1; i <= 3; ++i) r += apply_derivation(i, apply_derivation(i, f));
  return r;
}

Poly laplacian_berger(const Poly& f, const Rational& tau) {
  if (tau <= 0) throw std::domain_error("Berger parameter tau must be positive");
  require_ring(f, Ring::sphere, "laplacian");
  Poly r = FieldElem(Rational(1) / tau) * apply_derivation(1, apply_derivation(1, f));
  r += apply_derivation(2, apply_derivation(2, f));
  r += apply_derivation(3, apply_derivation(3, f));
  return r;
}

Poly laplacian_c2(const Poly& f) {
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.e[0] > 0 && m.e[1] > 0) {
      Monomial t = m;
      t.e[0] -= 1;
      t.e[1] -= 1;
      r.add_term(t, Rational(4L * m.e[0] * m.e[1]) * c);
    }
    if (m.e[2] > 0 && m.e[3] > 0) {
      Monomial t = m;
      t.e[2] -= 1;
      t.e[3] -= 1;
      r.add_term(t, Rational(4L * m.e[2] * m.e[3]) * c);
    }
  }
  return r;
}

Rational sphere_integral(const Monomial& m) {
  if (m.e[0] != m.e[1] || m.e[2] != m.e[3]) return Rational(0);
  unsigned a = static_cast<unsigned>(m.e[0]);
  unsigned c = static_cast<unsigned>(m.e[2]);
  Rational r(factorial(a) * factorial(c), factorial(a + c + 1));
  r.canonicalize();
  return r;
}

FieldElem sphere_integral(const Poly& f) {
  require_ring(f, Ring::sphere, "integral");
  FieldElem acc;
  for (const auto& [m, c] : f.terms()) {
    Rational w = sphere_integral(m);
    if (w != 0) acc += w * c;
  }
  return acc;
}

FieldElem sphere_inner_product(const Poly& f, const Poly& g) {
  return sphere_integral(f * g.conj());
}

Poly partial_derivative(const Poly& f, int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("variable index out of range");
  Poly r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m.e[index] == 0) continue;
    Monomial t = m;
    t.e[index] -= 1;
    r.add_term(t, Rational(m.e[index]) * c);
  }
  return r;
}

}  // namespace lospec::poly
