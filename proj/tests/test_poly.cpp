#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lospec/poly.hpp"

using namespace lospec;
using namespace lospec::poly;

namespace {

Poly Z() { return Poly::generator(Ring::sphere, 0); }
Poly Zb() { return Poly::generator(Ring::sphere, 1); }
Poly W() { return Poly::generator(Ring::sphere, 2); }
Poly Wb() { return Poly::generator(Ring::sphere, 3); }
FieldElem I() { return FieldElem::i(); }

Poly sphere_relation() { return Z() * Zb() + W() * Wb(); }

std::vector<Monomial> monomials_up_to_degree(int max_deg) {
  std::vector<Monomial> out;
  for (int a = 0; a <= max_deg; ++a)
    for (int b = 0; a + b <= max_deg; ++b)
      for (int c = 0; a + b + c <= max_deg; ++c)
        for (int d = 0; a + b + c + d <= max_deg; ++d) out.push_back(Monomial{{a, b, c, d}});
  return out;
}

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg);
  std::uniform_int_distribution<int> coef(-6, 6);
  Poly p(Ring::sphere);
  for (int t = 0; t < 5; ++t) {
    Monomial m{{e(rng), e(rng), e(rng), e(rng)}};
    FieldElem c = FieldElem(Rational(coef(rng))) + Rational(coef(rng)) * FieldElem::i();
    p += Poly::monomial(Ring::sphere, m, c);
  }
  return p;
}

}  // namespace

TEST_CASE("generator derivation table") {
  CHECK(apply_derivation(2, Z()) == -Wb());
  CHECK(apply_derivation(1, Z()) == I() * Z());
  CHECK(apply_derivation(1, Poly::constant(Ring::sphere, FieldElem::one())).is_zero());
  // d3(z*w) = i(z*zb - w*wb), by Leibniz from the generator images
  Poly expected = I() * (Z() * Zb() - W() * Wb());
  CHECK(apply_derivation(3, Z() * W()) == expected);
}

TEST_CASE("derivations annihilate the sphere relation") {
  for (int i = 1; i <= 3; ++i) CHECK(apply_derivation(i, sphere_relation()).is_zero());
}

TEST_CASE("bracket relations on all monomials of degree <= 6") {
  for (const auto& m : monomials_up_to_degree(6)) {
    Poly f = Poly::monomial(Ring::sphere, m, FieldElem::one());
    CHECK(commutator_defect(2, 3, f).is_zero());
    CHECK(commutator_defect(1, 3, f).is_zero());
    CHECK(commutator_defect(1, 2, f).is_zero());
  }
}

TEST_CASE("bracket relations on random polynomials") {
  std::mt19937 rng(7123);
  for (int t = 0; t < 20; ++t) {
    Poly f = random_poly(rng, 3);
    CHECK(commutator_defect(2, 3, f).is_zero());
    CHECK(commutator_defect(3, 1, f).is_zero());
    CHECK(commutator_defect(2, 1, f).is_zero());
  }
}

TEST_CASE("derivations are compatible with conjugation") {
  std::mt19937 rng(99);
  for (int t = 0; t < 15; ++t) {
    Poly f = random_poly(rng, 3);
    for (int i = 1; i <= 3; ++i)
      CHECK(apply_derivation(i, f.conj()) == apply_derivation(i, f).conj());
  }
}

TEST_CASE("round laplacian eigenfunctions") {
  CHECK(laplacian_round(Z()) == FieldElem(-3) * Z());
  CHECK(laplacian_round(Poly::constant(Ring::sphere, FieldElem::one())).is_zero());
  Poly q = Z() * Zb() - W() * Wb();
  CHECK(laplacian_round(q) == FieldElem(-8) * q);
}

TEST_CASE("round laplacian commutes with the derivations") {
  for (const auto& m : monomials_up_to_degree(4)) {
    Poly f = Poly::monomial(Ring::sphere, m, FieldElem::one());
    for (int i = 1; i <= 3; ++i)
      CHECK(laplacian_round(apply_derivation(i, f)) == apply_derivation(i, laplacian_round(f)));
  }
}

TEST_CASE("derivations preserve homogeneous degree") {
  std::mt19937 rng(5);
  for (const auto& m : monomials_up_to_degree(5)) {
    Poly f = Poly::monomial(Ring::sphere, m, FieldElem::one());
    for (int i = 1; i <= 3; ++i) {
      Poly df = apply_derivation(i, f);
      if (!df.is_zero()) CHECK(df.homogeneous_degree() == m.degree());
    }
  }
}

TEST_CASE("berger laplacian") {
  CHECK(laplacian_berger(Z(), rat(1, 6)) == FieldElem(-8) * Z());
  CHECK(laplacian_berger(Poly::constant(Ring::sphere, FieldElem::one()), rat(1, 3)).is_zero());
  CHECK(laplacian_berger(Z() * Z(), rat(1, 6)) == FieldElem(-28) * (Z() * Z()));
  CHECK_THROWS_AS(laplacian_berger(Z(), rat(-1, 6)), std::domain_error);
}

TEST_CASE("euclidean C2 laplacian") {
  CHECK(laplacian_c2(Z() * Z()).is_zero());
  CHECK(laplacian_c2(Z() * Zb()) == Poly::constant(Ring::sphere, FieldElem(4)));
  CHECK(laplacian_c2(Z() * Zb() - W() * Wb()).is_zero());
}

TEST_CASE("sphere integral") {
  CHECK(sphere_integral(Monomial{{0, 0, 0, 0}}) == 1);
  CHECK(sphere_integral(Monomial{{1, 1, 0, 0}}) == rat(1, 2));
  CHECK(sphere_integral(Monomial{{1, 1, 1, 1}}) == rat(1, 6));
  CHECK(sphere_integral(Monomial{{1, 0, 0, 0}}) == 0);
  CHECK(sphere_integral(Monomial{{2, 2, 1, 1}}) == rat(2, 24));
}

TEST_CASE("cross-ring arithmetic is rejected") {
  Poly s = Z();
  Poly e = Poly::generator(Ring::euclidean4, 0);
  CHECK_THROWS_AS(s + e, std::domain_error);
  CHECK_THROWS_AS(apply_derivation(1, e), std::domain_error);
}

TEST_CASE("polynomial text form") {
  Poly p = Poly::monomial(Ring::sphere, Monomial{{1, 0, 0, 1}}, FieldElem::sqrt_radicand(6));
  CHECK(p.text() == "((1 + 0*i)*sqrt(6))*z^1*zb^0*w^0*wb^1");
}
