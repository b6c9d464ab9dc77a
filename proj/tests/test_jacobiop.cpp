#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lospec/golden.hpp"
#include "lospec/jacobi_operator.hpp"

using namespace lospec;
using namespace lospec::jacobi;
using harmonic::BasisFamily;
using harmonic::BasisSource;
using poly::Poly;
using poly::Ring;

namespace {

Poly Z() { return Poly::generator(Ring::sphere, 0); }
Poly Wb() { return Poly::generator(Ring::sphere, 3); }
Poly one() { return Poly::constant(Ring::sphere, FieldElem::one()); }

TripleField triple(Poly a, Poly b, Poly c) {
  TripleField t;
  t.comp = {std::move(a), std::move(b), std::move(c)};
  return t;
}

}  // namespace

TEST_CASE("apply_L on constants") {
  TripleField y = apply_L(triple(one(), Poly(Ring::sphere), Poly(Ring::sphere)));
  CHECK(y.comp[0] == FieldElem(-10) * one());
  CHECK(y.comp[1].is_zero());
  CHECK(y.comp[2].is_zero());

  TripleField y2 = apply_L(triple(Poly(Ring::sphere), one(), Poly(Ring::sphere)));
  CHECK(y2.comp[0].is_zero());
  CHECK(y2.comp[1].is_zero());
  CHECK(y2.comp[2].is_zero());
}

TEST_CASE("apply_L on (z, 0, 0)") {
  TripleField y = apply_L(triple(Z(), Poly(Ring::sphere), Poly(Ring::sphere)));
  // manual expansion through the derivation table
  CHECK(y.comp[0] == FieldElem(-2) * Z());
  CHECK(y.comp[1] == FieldElem::sqrt_radicand(6) * Wb());
  CHECK(y.comp[2] == (FieldElem::i() * FieldElem::sqrt_radicand(6)) * Wb());
}

TEST_CASE("apply_Ltilde is the componentwise round eigenvalue") {
  TripleField y = apply_Ltilde(triple(Z(), Poly(Ring::sphere), Poly(Ring::sphere)));
  CHECK(y.comp[0] == FieldElem(3) * Z());
  TripleField c = apply_Ltilde(triple(one(), one(), one()));
  CHECK(c.comp[0].is_zero());
  CHECK(c.comp[1].is_zero());
  CHECK(c.comp[2].is_zero());

  // on any V_2 element the eigenvalue is 8
  BasisFamily fam = harmonic::paper_basis(2);
  for (const auto& v : fam.flatten()) {
    TripleField t2 = apply_Ltilde(triple(v, Poly(Ring::sphere), Poly(Ring::sphere)));
    CHECK(t2.comp[0] == FieldElem(8) * v);
  }
}

TEST_CASE("L and Ltilde commute on V_k elements") {
  BasisFamily fam = harmonic::paper_basis(2);
  auto flat = fam.flatten();
  TripleField x = triple(flat[0], flat[4], flat[8]);
  TripleField lhs = apply_Ltilde(apply_L(x));
  TripleField rhs = apply_L(apply_Ltilde(x));
  for (int c = 0; c < 3; ++c) CHECK(lhs.comp[c] == rhs.comp[c]);
}

TEST_CASE("assembled matrices reproduce the printed representations, k = 0..4") {
  for (int k = 0; k <= 4; ++k) {
    OperatorMatrix op = assemble_matrix(harmonic::paper_basis(k));
    CHECK(op.dimension() == static_cast<std::size_t>(3 * (k + 1) * (k + 1)));
    Matrix expected = golden::operator_matrix(k);
    INFO("k = ", k);
    CHECK(op.entries == expected);
  }
}

TEST_CASE("derivation representations match the printed A_i, k = 1..4") {
  for (int k = 1; k <= 4; ++k) {
    BasisFamily fam = harmonic::paper_basis(k);
    for (int i = 1; i <= 3; ++i) {
      INFO("k = ", k, ", i = ", i);
      CHECK(derivation_matrix(i, fam) == golden::derivation_rep(k, i));
    }
  }
}

TEST_CASE("skew structure of the derivation representations") {
  FieldElem s6 = FieldElem::sqrt_radicand(6);
  for (int k = 1; k <= 4; ++k) {
    BasisFamily fam = harmonic::paper_basis(k);
    Matrix a1 = derivation_matrix(1, fam);
    // A1 diagonal, purely imaginary
    for (std::size_t i = 0; i < a1.rows(); ++i)
      for (std::size_t j = 0; j < a1.cols(); ++j) {
        if (i != j) CHECK(a1.at(i, j).is_zero());
        else if (!a1.at(i, j).is_zero()) CHECK((FieldElem::i() * a1.at(i, j)).is_real());
      }
    for (int i : {2, 3}) {
      Matrix a = s6 * derivation_matrix(i, fam);
      CHECK(a.conjugate_transpose() == FieldElem(-1) * a);
    }
  }
}

TEST_CASE("Hermitian on the fixed bases, k = 0..4") {
  for (int k = 0; k <= 4; ++k) {
    OperatorMatrix op = assemble_matrix(harmonic::paper_basis(k));
    CHECK(check_hermitian(op.entries));
  }
}

TEST_CASE("expansion succeeds on generated bases and spectra agree, k <= 4") {
  for (int k = 0; k <= 4; ++k) {
    OperatorMatrix p = assemble_matrix(harmonic::paper_basis(k));
    OperatorMatrix g = assemble_matrix(harmonic::generated_basis(k));
    linalg::CharPoly cp = linalg::charpoly(p.entries);
    linalg::CharPoly cg = linalg::charpoly(g.entries);
    INFO("k = ", k);
    CHECK(cp == cg);
  }
}

TEST_CASE("eigenvalue dictionary: diagonal blocks carry the Berger eigenvalues") {
  for (int k = 2; k <= 4; ++k) {
    BasisFamily fam = harmonic::paper_basis(k);
    OperatorMatrix op = assemble_matrix(fam);
    auto weights = fam.weight_labels();
    const std::size_t n = fam.size();
    for (std::size_t j = 0; j < n; ++j) {
      long m = weights[j];
      Rational gamma(static_cast<long>(k) * (k + 2) + 5 * m * m);
      // slot 2 diagonal: -Delta_{1/6} restricted to the block
      CHECK(op.entries.at(n + j, n + j) == FieldElem(gamma));
      // slot 1 diagonal: gamma - 10
      CHECK(op.entries.at(j, j) == FieldElem(gamma - 10));
    }
  }
}

TEST_CASE("kernel dimension equals the zero-root multiplicity, k = 0..4") {
  for (int k = 0; k <= 4; ++k) {
    OperatorMatrix op = assemble_matrix(harmonic::paper_basis(k));
    auto ker = linalg::kernel(op.entries);
    auto p = linalg::charpoly(op.entries);
    CHECK(ker.dimension == linalg::root_multiplicity(p, Rational(0)));
    CHECK(ker.dimension == golden::kernel_dimension(k));
    // kernel vectors annihilate the matrix exactly
    for (const auto& v : ker.basis) {
      for (std::size_t i = 0; i < op.entries.rows(); ++i) {
        FieldElem acc;
        for (std::size_t j = 0; j < op.entries.cols(); ++j) acc += op.entries.at(i, j) * v[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("both charpoly routes agree on the small representations") {
  for (int k = 0; k <= 2; ++k) {
    OperatorMatrix op = assemble_matrix(harmonic::paper_basis(k));
    CHECK(linalg::charpoly_dual_checked(op.entries) ==
          linalg::charpoly(op.entries, linalg::CharPolyMethod::trace_recursion));
  }
}

TEST_CASE("jacobi eigenvalue scaling") {
  CHECK(jacobi_eigenvalue(Rational(-10)) == rat(-15, 4));
  CHECK(jacobi_eigenvalue(Rational(0)) == Rational(0));
  CHECK(jacobi_eigenvalue(Rational(-8)) == Rational(-3));
}

TEST_CASE("charpoly of the assembled matrices matches the closed forms, k <= 2") {
  for (int k = 0; k <= 2; ++k) {
    OperatorMatrix op = assemble_matrix(harmonic::paper_basis(k));
    linalg::CharPoly p = linalg::charpoly(op.entries);
    CHECK(p.is_rational());
    CHECK(linalg::verify_factorization(p, golden::charpoly_factors(k)));
  }
}

TEST_CASE("Gram-congruent form is Hermitian and has the operator inertia, k = 3") {
  BasisFamily fam = harmonic::generated_basis(3);
  OperatorMatrix op = assemble_matrix(fam);
  CHECK_FALSE(op.entries.is_hermitian());  // generated basis is not normalized
  Matrix h = hermitized_form(op, fam);
  REQUIRE(h.is_hermitian());
  CHECK(linalg::inertia(h) == golden::inertia_triple(3));
}

TEST_CASE("positivity guard rails") {
  CHECK_THROWS_AS(positivity_check(4, PositivityMethod::exact_inertia), std::invalid_argument);
  CHECK_THROWS_AS(positivity_check(9, PositivityMethod::exact_inertia, 6), std::domain_error);
}

TEST_CASE("positivity at k = 5 via exact inertia and the float bound") {
  PositivityReport exact = positivity_check(5, PositivityMethod::exact_inertia);
  CHECK(exact.dimension == 108);
  CHECK(exact.positive_definite);
  CHECK(exact.inertia == linalg::InertiaTriple{108, 0, 0});

  PositivityReport fb = positivity_check(5, PositivityMethod::float_bound);
  CHECK(fb.bound_ok);
  CHECK(fb.min_eigenvalue >= 1.5 - 1e-6);
}
