#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lospec/harmonic.hpp"

using namespace lospec;
using namespace lospec::harmonic;
using poly::Poly;
using poly::Ring;

TEST_CASE("weight space dimensions, k <= 8") {
  for (int k = 0; k <= 8; ++k) {
    std::size_t total = 0;
    for (int m : weight_order(k)) {
      auto basis = build_weight_space(k, m);
      CHECK(basis.size() == static_cast<std::size_t>(k + 1));
      total += basis.size();
    }
    CHECK(total == static_cast<std::size_t>((k + 1) * (k + 1)));
  }
}

TEST_CASE("weight space edge cases") {
  CHECK(build_weight_space(1, 0).empty());   // parity mismatch
  CHECK(build_weight_space(2, 4).empty());   // |m| > k
  CHECK(build_weight_space(5, 3).size() == 6);
  auto q11 = build_weight_space(1, 1);
  REQUIRE(q11.size() == 2);
  // spans {z, w}
  for (const auto& p : q11) {
    CHECK(p.homogeneous_degree() == 1);
    CHECK(poly::laplacian_c2(p).is_zero());
  }
}

TEST_CASE("generated vectors are harmonic with the right weight") {
  for (int k = 0; k <= 6; ++k) {
    for (int m : weight_order(k)) {
      for (const auto& f : build_weight_space(k, m)) {
        CHECK(poly::laplacian_c2(f).is_zero());
        CHECK(poly::apply_derivation(1, f) == (Rational(m) * FieldElem::i()) * f);
        CHECK(f.homogeneous_degree() == k);
      }
    }
  }
}

TEST_CASE("paper bases verify their eigenvalue data") {
  for (int k = 0; k <= 4; ++k) {
    BasisFamily fam = paper_basis(k);
    CHECK(fam.size() == static_cast<std::size_t>((k + 1) * (k + 1)));
    for (const auto& block : fam.blocks) {
      CHECK(block.vectors.size() == static_cast<std::size_t>(k + 1));
      for (const auto& f : block.vectors) {
        EigenCheck c = verify_eigen(f, k, block.weight);
        INFO("k=", k, " m=", block.weight, " -> ", c.describe());
        CHECK(c.pass());
      }
    }
  }
}

TEST_CASE("specific Berger eigenvalues from the k=3 blocks") {
  // z^3 has weight 3: gamma = 15, Berger eigenvalue 15 + 45 = 60
  Poly z3 = Poly::generator(Ring::sphere, 0);
  z3 = z3 * z3 * z3;
  EigenCheck c = verify_eigen(z3, 3, 3);
  CHECK(c.pass());
  CHECK(c.gamma_berger == Rational(60));

  // first element of the (3, 1) block has Berger eigenvalue 20
  BasisFamily fam = paper_basis(3);
  const auto& block31 = fam.blocks[2];
  REQUIRE(block31.weight == 1);
  EigenCheck c31 = verify_eigen(block31.vectors[0], 3, 1);
  CHECK(c31.pass());
  CHECK(c31.gamma_berger == Rational(20));

  EigenCheck c0 = verify_eigen(Poly::constant(Ring::sphere, FieldElem::one()), 0, 0);
  CHECK(c0.pass());
  CHECK(c0.gamma_berger == Rational(0));
}

TEST_CASE("paper bases are out of range beyond k = 4") {
  CHECK_THROWS_AS(paper_basis(5), std::out_of_range);
}

TEST_CASE("block weights are distinct within each family") {
  for (int k = 0; k <= 6; ++k) {
    BasisFamily fam = generated_basis(k);
    std::vector<int> seen;
    for (const auto& b : fam.blocks) {
      for (int w : seen) CHECK(w != b.weight);
      seen.push_back(b.weight);
    }
  }
}

TEST_CASE("orthogonality of the paper bases under the sphere integral") {
  for (int k = 0; k <= 4; ++k) {
    BasisFamily fam = paper_basis(k);
    auto flat = fam.flatten();
    auto weights = fam.weight_labels();
    for (std::size_t i = 0; i < flat.size(); ++i) {
      for (std::size_t j = 0; j < flat.size(); ++j) {
        FieldElem ip = poly::sphere_inner_product(flat[i], flat[j]);
        if (i == j) {
          CHECK_FALSE(ip.is_zero());
        } else if (weights[i] == weights[j]) {
          CHECK(ip.is_zero());  // within-block orthogonality
        } else {
          CHECK(ip.is_zero());  // distinct weights are always orthogonal
        }
      }
    }
  }
}

TEST_CASE("change of basis between paper and generated families") {
  for (int k = 1; k <= 4; ++k) {
    BasisFamily p = paper_basis(k);
    BasisFamily g = generated_basis(k);
    Matrix t = change_of_basis(p, g);
    const std::size_t n = p.size();
    REQUIRE(t.rows() == n);
    // invertibility: solve back the other way and check T * S = I
    Matrix s = change_of_basis(g, p);
    CHECK(s * t == Matrix::identity(n));
  }
  BasisFamily p1 = paper_basis(1);
  Matrix id = change_of_basis(p1, p1);
  CHECK(id == Matrix::identity(4));
}
