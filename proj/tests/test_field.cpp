#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lospec/field.hpp"

using namespace lospec;

namespace {

FieldElem sqrt_d(int d) { return FieldElem::sqrt_radicand(d); }

// deterministic generator of small random field elements
struct ElemGen {
  std::mt19937 rng{20240917};

  Rational rational() {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    return rat(num(rng), den(rng));
  }

  FieldElem real_elem() {
    FieldElem e;
    std::uniform_int_distribution<int> pick(0, 2);
    for (int d : {1, 2, 3, 5, 6, 10, 15, 30})
      if (pick(rng) == 0) e += rational() * sqrt_d(d);
    return e;
  }

  FieldElem elem() {
    FieldElem e = real_elem();
    e += FieldElem::i() * real_elem();
    return e;
  }
};

}  // namespace

TEST_CASE("radicand reduction in products") {
  CHECK(sqrt_d(2) * sqrt_d(3) == sqrt_d(6));
  CHECK(sqrt_d(6) * sqrt_d(6) == FieldElem(6));
  CHECK(sqrt_d(6) * sqrt_d(10) == Rational(2) * sqrt_d(15));
  CHECK(sqrt_d(30) * sqrt_d(30) == FieldElem(30));
  CHECK(sqrt_d(2) * sqrt_d(30) == Rational(2) * sqrt_d(15));
}

TEST_CASE("gaussian product norms") {
  FieldElem one_plus_i = FieldElem::one() + FieldElem::i();
  FieldElem one_minus_i = FieldElem::one() - FieldElem::i();
  CHECK(one_plus_i * one_minus_i == FieldElem(2));
}

TEST_CASE("inverse examples") {
  FieldElem a = FieldElem::one() + sqrt_d(2);
  CHECK(a.inverse() == -FieldElem::one() + sqrt_d(2));
  CHECK(FieldElem::i().inverse() == -FieldElem::i());
  CHECK(FieldElem(rat(2, 3)).inverse() == FieldElem(rat(3, 2)));
  CHECK_THROWS_AS(FieldElem::zero().inverse(), std::domain_error);
}

TEST_CASE("inverse is an involution and exact on random elements") {
  ElemGen gen;
  int tested = 0;
  while (tested < 60) {
    FieldElem a = gen.elem();
    if (a.is_zero()) continue;
    ++tested;
    FieldElem inv = a.inverse();
    CHECK(a * inv == FieldElem::one());
    CHECK(inv.inverse() == a);
  }
}

TEST_CASE("ring axioms on random elements") {
  ElemGen gen;
  for (int t = 0; t < 40; ++t) {
    FieldElem a = gen.elem(), b = gen.elem(), c = gen.elem();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("conjugation commutes with ring operations and fixes the real subfield") {
  ElemGen gen;
  for (int t = 0; t < 40; ++t) {
    FieldElem a = gen.elem(), b = gen.elem();
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
    FieldElem r = gen.real_elem();
    CHECK(r.conj() == r);
  }
}

TEST_CASE("sign determination") {
  // 15 - 4*sqrt(15) is negative: 15^2 = 225 < 240 = (4 sqrt15)^2.
  // The squaring comparison is the independent check here.
  Rational lhs_sq = Rational(15) * 15;
  Rational rhs_sq = Rational(16) * 15;
  REQUIRE(lhs_sq < rhs_sq);
  FieldElem x = FieldElem(15) - Rational(4) * sqrt_d(15);
  CHECK(x.sign() == Sign::negative);

  CHECK(FieldElem::zero().sign() == Sign::zero);
  CHECK((sqrt_d(2) - FieldElem::one()).sign() == Sign::positive);
  CHECK_THROWS_AS(FieldElem::i().sign(), std::domain_error);
}

TEST_CASE("sign is multiplicative on real elements") {
  ElemGen gen;
  for (int t = 0; t < 30; ++t) {
    FieldElem a = gen.real_elem(), b = gen.real_elem();
    CHECK(sign_product(a.sign(), b.sign()) == (a * b).sign());
  }
}

TEST_CASE("float conversion") {
  auto v = sqrt_d(2).to_complex();
  CHECK(v.real() == doctest::Approx(1.41421356237309).epsilon(1e-12));
  CHECK(v.imag() == 0.0);

  auto w = (FieldElem::one() + FieldElem::i()).to_complex();
  CHECK(w.real() == 1.0);
  CHECK(w.imag() == 1.0);

  // sqrt(6)/4 = 0.61237...
  auto u = (rat(1, 4) * sqrt_d(6)).to_complex(50);
  CHECK(u.real() == doctest::Approx(0.61237243569579).epsilon(1e-12));
}

TEST_CASE("sqrt_rational normalization") {
  CHECK(FieldElem::sqrt_rational(rat(3, 8)) == rat(1, 4) * sqrt_d(6));
  CHECK(FieldElem::sqrt_rational(rat(15, 8)) == rat(1, 4) * sqrt_d(30));
  CHECK(FieldElem::sqrt_rational(rat(9, 4)) == FieldElem(rat(3, 2)));
  CHECK(FieldElem::sqrt_rational(rat(1, 6)) == rat(1, 6) * sqrt_d(6));
  CHECK_THROWS_AS(FieldElem::sqrt_rational(rat(7, 1)), std::domain_error);
}

TEST_CASE("canonical text round trip") {
  ElemGen gen;
  for (int t = 0; t < 25; ++t) {
    FieldElem a = gen.elem();
    std::string s = a.text();
    FieldElem back = FieldElem::parse(s);
    CHECK(back == a);
    CHECK(back.text() == s);
  }
  CHECK(FieldElem::zero().text() == "0");
  CHECK(FieldElem::parse("0") == FieldElem::zero());
  FieldElem half_sqrt6 = rat(1, 2) * sqrt_d(6);
  CHECK(half_sqrt6.text() == "(1/2 + 0*i)*sqrt(6)");
  CHECK_THROWS_AS(FieldElem::parse("garbage"), std::invalid_argument);
  CHECK_THROWS_AS(FieldElem::parse("(1 + 0*i)*sqrt(7)"), std::invalid_argument);
}

TEST_CASE("high-precision enclosures") {
  FieldElem x = sqrt_d(2) + sqrt_d(3);
  auto e = x.enclosure(120);
  CHECK(e.re_lo <= e.re_hi);
  Rational width = e.re_hi - e.re_lo;
  Rational mag = e.re_hi;
  // relative width below 2^-119
  CHECK(width * pow_rational(Rational(2), 119) < mag);
  CHECK(e.im_lo == 0);
  CHECK(e.im_hi == 0);
  // encloses the true value: (lo^2 - 5)^2 < 24 < (hi^2 - 5)^2 fails sign-wise;
  // check via squaring: lo < sqrt2 + sqrt3 iff (lo^2 - 5)/2 < sqrt(6)
  Rational lo2 = e.re_lo * e.re_lo;
  Rational hi2 = e.re_hi * e.re_hi;
  CHECK(lo2 < hi2);
  CHECK((lo2 - 5) * (lo2 - 5) < 24);  // lo in (sqrt2+sqrt3 - eps, ...) band
}
