#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lospec/exactla.hpp"

using namespace lospec;
using namespace lospec::linalg;

namespace {

Matrix diag(const std::vector<long>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = FieldElem(d[i]);
  return m;
}

QPoly qp(std::initializer_list<long> ascending) {
  QPoly p;
  for (long c : ascending) p.c.push_back(Rational(c));
  p.trim();
  return p;
}

Matrix random_hermitian(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-4, 4);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = FieldElem(Rational(coef(rng)));
    for (std::size_t j = i + 1; j < n; ++j) {
      FieldElem e = FieldElem(Rational(coef(rng))) + Rational(coef(rng)) * FieldElem::i() +
                    Rational(coef(rng)) * FieldElem::sqrt_radicand(2);
      m.at(i, j) = e;
      m.at(j, i) = e.conj();
    }
  }
  return m;
}

}  // namespace

TEST_CASE("charpoly of small matrices") {
  Matrix z(2, 2);
  CharPoly p = charpoly(z);
  CHECK(p.coeffs.size() == 3);
  CHECK(p.coeffs[2] == FieldElem::one());
  CHECK(p.coeffs[1].is_zero());
  CHECK(p.coeffs[0].is_zero());

  Matrix d = diag({1, 2, 3});
  CharPoly q = charpoly(d);
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  CHECK(q.coeffs[3] == FieldElem::one());
  CHECK(q.coeffs[2] == FieldElem(-6));
  CHECK(q.coeffs[1] == FieldElem(11));
  CHECK(q.coeffs[0] == FieldElem(-6));
}

TEST_CASE("trace recursion and fraction-free elimination agree") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 6; ++t) {
    std::size_t n = 4 + t % 3;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = FieldElem(rat(coef(rng), 1 + (t % 2))) +
                     Rational(coef(rng)) * FieldElem::sqrt_radicand(3);
    CharPoly a = charpoly(m, CharPolyMethod::trace_recursion);
    CharPoly b = charpoly(m, CharPolyMethod::fraction_free);
    CHECK(a == b);
  }
}

TEST_CASE("kernel of simple matrices") {
  CHECK(kernel(Matrix::identity(4)).dimension == 0);
  Matrix m(3, 3);
  m.at(0, 0) = FieldElem::one();
  m.at(0, 1) = FieldElem(2);
  auto k = kernel(m);
  CHECK(k.dimension == 2);
  // pivot entries 1, kernel vectors in reduced echelon convention
  for (const auto& v : k.basis) {
    FieldElem acc0;
    acc0 += m.at(0, 0) * v[0];
    acc0 += m.at(0, 1) * v[1];
    acc0 += m.at(0, 2) * v[2];
    CHECK(acc0.is_zero());
  }
}

TEST_CASE("inertia of definite and indefinite matrices") {
  CHECK(inertia(FieldElem(-1) * Matrix::identity(3)) == InertiaTriple{0, 0, 3});
  CHECK(inertia(Matrix::identity(5)) == InertiaTriple{5, 0, 0});

  // [[0, i],[-i, 0]] has eigenvalues +-1
  Matrix m(2, 2);
  m.at(0, 1) = FieldElem::i();
  m.at(1, 0) = -FieldElem::i();
  CHECK(inertia(m) == InertiaTriple{1, 0, 1});

  Matrix nonherm(2, 2);
  nonherm.at(0, 1) = FieldElem::one();
  CHECK_THROWS_AS(inertia(nonherm), std::domain_error);
}

TEST_CASE("inertia is congruence-invariant (Sylvester)") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> coef(1, 5);
  for (int t = 0; t < 6; ++t) {
    Matrix h = random_hermitian(rng, 5);
    InertiaTriple base = inertia(h);
    Matrix d(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      d.at(i, i) = FieldElem(rat(coef(rng), coef(rng))) +
                   Rational(coef(rng)) * FieldElem::i();
    Matrix congruent = d.conjugate_transpose() * h * d;
    REQUIRE(congruent.is_hermitian());
    CHECK(inertia(congruent) == base);
  }
}

TEST_CASE("inertia agrees with charpoly root sign counts on Hermitian input") {
  std::mt19937 rng(8888);
  for (int t = 0; t < 5; ++t) {
    Matrix h = random_hermitian(rng, 4);
    CharPoly p = charpoly(h);
    if (!p.is_rational()) continue;  // sqrt entries can leave Q; skip those
    CHECK(root_sign_counts(p) == inertia(h));
  }
}

TEST_CASE("root multiplicity by synthetic division") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  CharPoly p;
  p.coeffs = {FieldElem(2), FieldElem(-3), FieldElem(0), FieldElem(1)};
  CHECK(root_multiplicity(p, Rational(1)) == 2);
  CHECK(root_multiplicity(p, Rational(-2)) == 1);
  CHECK(root_multiplicity(p, Rational(5)) == 0);

  CharPoly sq;
  sq.coeffs = {FieldElem(0), FieldElem(0), FieldElem(1)};
  CHECK(root_multiplicity(sq, Rational(1)) == 0);
  CHECK(root_multiplicity(sq, Rational(0)) == 2);
}

TEST_CASE("verify_factorization") {
  CharPoly sq;
  sq.coeffs = {FieldElem(0), FieldElem(0), FieldElem(1)};
  CHECK(verify_factorization(sq, {{qp({0, 1}), 2}}));
  CHECK_FALSE(verify_factorization(sq, {{qp({1, 1}), 2}}));

  // (x^2+1)(x-3)^2
  CharPoly p;
  QPoly prod = qp({1, 0, 1}) * qp({-3, 1}) * qp({-3, 1});
  p.coeffs.clear();
  for (const auto& c : prod.c) p.coeffs.push_back(FieldElem(c));
  CHECK(verify_factorization(p, {{qp({1, 0, 1}), 1}, {qp({-3, 1}), 2}}));
}

TEST_CASE("polynomial text grammar round trip") {
  Matrix m(3, 3);
  m.at(0, 0) = FieldElem(2);
  m.at(0, 1) = FieldElem::sqrt_radicand(2);
  m.at(1, 0) = FieldElem::sqrt_radicand(2);
  m.at(2, 2) = FieldElem(rat(-1, 3));
  CharPoly p = charpoly(m);
  CharPoly back = parse_charpoly(p.text());
  CHECK(back == p);

  // hand-written factor in the same grammar, bare rational coefficients
  QPoly q = parse_qpoly("lambda^2 + -166*lambda^1 + 6720*lambda^0");
  CHECK(q == qp({6720, -166, 1}));
  CHECK(parse_qpoly(q.text()) == q);
}

TEST_CASE("dual-route charpoly hard failure surfaces as an exception type") {
  // identical routes agree on any input; the checked variant returns the value
  Matrix d = diag({1, 2, 3});
  CHECK(charpoly_dual_checked(d) == charpoly(d));
}

TEST_CASE("squarefree decomposition and Sturm counting") {
  // p = (x-1)^2 (x+2) (x^2-2)
  QPoly p = qp({-1, 1}) * qp({-1, 1}) * qp({2, 1}) * qp({-2, 0, 1});
  auto sf = squarefree_decomposition(p);
  unsigned total = 0;
  for (const auto& f : sf) total += f.multiplicity * static_cast<unsigned>(f.poly.degree());
  CHECK(total == 5);

  CharPoly cp;
  for (const auto& c : p.c) cp.coeffs.push_back(FieldElem(c));
  CHECK(roots_in_interval(cp, rat(9, 10), rat(11, 10)) == 2);    // the double root at 1
  CHECK(roots_in_interval(cp, rat(-3, 1), rat(-19, 10)) == 1);   // -2
  CHECK(roots_in_interval(cp, rat(14, 10), rat(15, 10)) == 1);   // sqrt(2)
  CHECK(roots_in_interval(cp, rat(-100, 1), rat(100, 1)) == 5);

  auto counts = root_sign_counts(cp);
  CHECK(counts.n_plus == 3);   // 1, 1, sqrt2
  CHECK(counts.n_minus == 2);  // -2, -sqrt2
  CHECK(counts.n_zero == 0);
}
