#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lospec/exactla.hpp"
#include "lospec/geometry.hpp"

using namespace lospec;
using namespace lospec::geometry;

namespace {

FieldElem det(const Matrix& m) {
  auto p = linalg::charpoly(m);
  FieldElem c0 = p.coeffs[0];
  return (m.rows() % 2 == 0) ? c0 : -c0;
}

bool is_identity(const Matrix& m) { return m == Matrix::identity(m.rows()); }

}  // namespace

TEST_CASE("frames evaluate to the recorded vectors at the base point") {
  Point4 p0 = base_point();
  auto nu = eval_field(position_field(), p0);
  CHECK(nu[0] == FieldElem(rat(2, 3)));
  CHECK(nu[4] == rat(1, 3) * FieldElem::sqrt_radicand(5));
  auto e1 = eval_field(frame_field(1), p0);
  CHECK(e1[1] == FieldElem(1));
  auto e4 = eval_field(frame_field(4), p0);
  CHECK(e4[0] == rat(1, 3) * FieldElem::sqrt_radicand(5));
  CHECK(e4[4] == FieldElem(rat(-2, 3)));
}

TEST_CASE("frame orthonormality at 50 exact sphere points") {
  auto points = rational_sphere_points(50, rat(2, 3));
  REQUIRE(points.size() == 50);
  for (const auto& p : points) {
    std::array<FieldElem, 7> at[7];
    for (int l = 1; l <= 6; ++l) at[l - 1] = eval_field(frame_field(l), p);
    at[6] = eval_field(position_field(), p);
    for (int a = 0; a < 7; ++a)
      for (int b = a; b < 7; ++b) {
        FieldElem ip = dot7(at[a], at[b]);
        if (a == b)
          CHECK(ip == FieldElem(1));
        else
          CHECK(ip.is_zero());
      }
  }
}

TEST_CASE("stereographic projection conventions") {
  Rational r = rat(2, 3);
  Point4 south = stereographic_point({Rational(0), Rational(0), Rational(0)}, r);
  CHECK(south == Point4{FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(rat(-2, 3))});
  Point4 east = stereographic_point({Rational(1), Rational(0), Rational(0)}, r);
  CHECK(east == Point4{FieldElem(rat(2, 3)), FieldElem(0), FieldElem(0), FieldElem(0)});
}

TEST_CASE("rational sphere points are exact and distinct") {
  auto points = rational_sphere_points(30, rat(2, 3));
  for (const auto& p : points) {
    FieldElem r2;
    for (const auto& c : p) r2 += c * c;
    CHECK(r2 == FieldElem(rat(4, 9)));
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) CHECK_FALSE(points[i] == points[j]);
}

TEST_CASE("complex frame presentation matches the real polynomials") {
  for (int label : {2, 3, 5, 6}) {
    Vec7 from_complex = frame_field_from_complex_form(label);
    Vec7 real_form = frame_field(label);
    for (int c = 0; c < 7; ++c) {
      INFO("label = ", label, ", component ", c);
      CHECK(from_complex[c] == real_form[c]);
    }
  }
}

TEST_CASE("connection table matches the reference table") {
  ConnectionTable computed = connection_coefficients();
  ConnectionTable expected = expected_connection();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 6; ++j) {
      INFO("entry (", i, ", ", j, ")");
      CHECK(computed.at(i, j) == expected.at(i, j));
    }
}

TEST_CASE("connection coefficients are constant along the group orbit") {
  ConnectionTable expected = expected_connection();
  auto points = rational_sphere_points(3, rat(2, 3));
  for (const auto& p : points) {
    ConnectionTable t = connection_coefficients_at(p);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 6; ++j) CHECK(t.at(i, j) == expected.at(i, j));
  }
}

TEST_CASE("antisymmetry of the connection coefficients") {
  ConnectionTable t = connection_coefficients();
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 6; ++j)
      for (int l = 1; l <= 6; ++l) {
        // <D_{e_i} e_j, e_l> = -<D_{e_i} e_l, e_j>
        CHECK(t.at(i, j).frame_coeff[l - 1] == -t.at(i, l).frame_coeff[j - 1]);
      }
}

TEST_CASE("shape operator data") {
  ShapeReport rep = shape_operator_checks();
  CHECK(rep.symmetric);
  CHECK(rep.mean_curvature_zero);
  CHECK(rep.btilde_diagonal);
  CHECK(rep.btilde_diag[0] == FieldElem(rat(15, 8)));
  CHECK(rep.btilde_diag[1] == FieldElem(rat(5, 8)));
  CHECK(rep.btilde_diag[2] == FieldElem(rat(5, 8)));
  CHECK(rep.pass());
}

TEST_CASE("phi lands in SO(3) with the right first entry") {
  GaussianRational z1(rat(3, 5)), z2(rat(4, 5));
  Matrix m = phi_hom(z1, z2);
  CHECK(m.at(0, 0) == FieldElem(rat(-7, 25)));
  CHECK(is_identity(m.conjugate_transpose() * m));
  CHECK(det(m) == FieldElem(1));

  CHECK(is_identity(phi_hom(GaussianRational(Rational(1)), GaussianRational())));
  CHECK_THROWS_AS(phi_hom(GaussianRational(Rational(1)), GaussianRational(Rational(1))),
                  std::domain_error);
}

TEST_CASE("phi is a homomorphism on 100 rational configurations") {
  auto quats = rational_unit_quaternions(200);
  for (std::size_t t = 0; t < 100; ++t) {
    Quaternion p = quats[t], q = quats[t + 100];
    Quaternion pq = p * q;
    REQUIRE(pq.norm() == 1);
    Matrix lhs = phi_hom(pq);
    Matrix rhs = phi_hom(p) * phi_hom(q);
    CHECK(lhs == rhs);
    Matrix m = phi_hom(p);
    CHECK(is_identity(m.conjugate_transpose() * m));
    CHECK(det(m) == FieldElem(1));
  }
}

TEST_CASE("explicit homomorphism product example") {
  Quaternion p{GaussianRational(rat(3, 5)), GaussianRational(rat(4, 5))};
  Quaternion q{GaussianRational(rat(5, 13)), GaussianRational(Rational(0), rat(12, 13))};
  CHECK(phi_hom(p * q) == phi_hom(p) * phi_hom(q));
}

TEST_CASE("hopf equivariance eta(PQ) = eta(P) Phi(Q)") {
  auto quats = rational_unit_quaternions(200);
  for (std::size_t t = 0; t < 100; ++t) {
    Quaternion p = quats[t], q = quats[199 - t];
    auto lhs = hopf_eta(p * q);
    Matrix phi = phi_hom(q);
    auto ep = hopf_eta(p);
    for (int c = 0; c < 3; ++c) {
      FieldElem acc;
      for (int i = 0; i < 3; ++i) acc += FieldElem(ep[i]) * phi.at(i, c);
      CHECK(acc == FieldElem(lhs[c]));
    }
  }
  // the stated special case P = (3/5, 4/5), Q = (0, 1)
  Quaternion p{GaussianRational(rat(3, 5)), GaussianRational(rat(4, 5))};
  Quaternion j{GaussianRational(), GaussianRational(Rational(1))};
  auto lhs = hopf_eta(p * j);
  auto ep = hopf_eta(p);
  Matrix phi = phi_hom(j);
  for (int c = 0; c < 3; ++c) {
    FieldElem acc;
    for (int i = 0; i < 3; ++i) acc += FieldElem(ep[i]) * phi.at(i, c);
    CHECK(acc == FieldElem(lhs[c]));
  }
}

TEST_CASE("psi is an isometry fixing the link") {
  Quaternion one{GaussianRational(Rational(1)), GaussianRational()};
  CHECK(is_identity(psi_matrix(one)));

  auto quats = rational_unit_quaternions(100);
  auto points = rational_sphere_points(100, rat(2, 3));
  for (std::size_t t = 0; t < 100; ++t) {
    Matrix m = psi_matrix(quats[t]);
    CHECK(is_identity(m.conjugate_transpose() * m));
    auto p = graph_point(points[t]);
    REQUIRE(on_link(p));
    auto moved = psi_action(p, quats[t]);
    CHECK(on_link(moved));
  }
}

TEST_CASE("the base point orbit is the graph map") {
  Point4 p0 = base_point();
  auto base = graph_point(p0);
  for (const auto& q : rational_unit_quaternions(25)) {
    auto moved = psi_action(base, q);
    // p0 Psi(Q) = G((2/3) q) exactly
    Point4 scaled{FieldElem(rat(2, 3) * q.z1.re), FieldElem(rat(2, 3) * q.z1.im),
                  FieldElem(rat(2, 3) * q.z2.re), FieldElem(rat(2, 3) * q.z2.im)};
    auto expected = graph_point(scaled);
    CHECK(moved == expected);
  }
}

TEST_CASE("killing map rank, kernel and Table 1") {
  KillingReport rep = killing_map();
  CHECK(rep.rank == 17);
  CHECK(rep.kernel_dimension == 4);
  CHECK(rep.reference_kernel_members);
  CHECK(rep.reference_kernel_independent);
  REQUIRE(rep.table1.size() == 12);
  for (const auto& e : rep.table1) {
    INFO("generator ", e.generator_index, " frame e", e.frame_label,
         " match=", e.match, " flipped=", e.sign_flipped);
    CHECK((e.match || e.sign_flipped));
  }
  CHECK(rep.table1_verified_up_to_sign());
}

TEST_CASE("e4 projection formula") {
  E4FormulaReport rep = killing_e4_formula_check();
  CHECK(rep.zero_when_w_zero);
  CHECK(rep.symbolic_identity);
  CHECK(rep.pointwise_identity);
}
