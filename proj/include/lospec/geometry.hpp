#pragma once

#include <array>
#include <string>
#include <vector>

#include "lospec/matrix.hpp"
#include "lospec/poly.hpp"

namespace lospec::geometry {

// 7-component polynomial vector field on R^7, each component a polynomial in
// the base coordinates (x1, y1, x2, y2).
using Vec7 = std::array<poly::Poly, 7>;
using Point4 = std::array<FieldElem, 4>;

// Global frames: e1..e3 tangent, e4..e6 normal, nu the position field.
// label 1..6 for the frame fields; nu() separately.
Vec7 frame_field(int label);
Vec7 position_field();

std::array<FieldElem, 7> eval_field(const Vec7& f, const Point4& p);
FieldElem dot7(const std::array<FieldElem, 7>& a, const std::array<FieldElem, 7>& b);

// Complex presentation of e3/e6 carries imaginary square-root coefficients;
// they are interpreted as i*sqrt(3/8), i*sqrt(15/8).  This returns the real
// 7-tuple obtained from that interpretation, for the consistency check.
Vec7 frame_field_from_complex_form(int label);  // label in {2, 3, 5, 6}

// the base point (2/3, 0, 0, 0); G(p0) = (2/3, 0, 0, 0, sqrt5/3, 0, 0)
Point4 base_point();

struct FrameDerivative {
  std::array<FieldElem, 6> frame_coeff{};  // e1..e6 coefficients
  FieldElem nu_coeff;
  friend bool operator==(const FrameDerivative& a, const FrameDerivative& b) {
    return a.frame_coeff == b.frame_coeff && a.nu_coeff == b.nu_coeff;
  }
};

// entry(i, j) = expansion of the ambient derivative D_{e_i} e_j at the base
// point, i = 1..3, j = 1..6.
struct ConnectionTable {
  std::array<std::array<FrameDerivative, 6>, 3> entries;
  const FrameDerivative& at(int i, int j) const { return entries[i - 1][j - 1]; }
  FrameDerivative& at(int i, int j) { return entries[i - 1][j - 1]; }
  friend bool operator==(const ConnectionTable& a, const ConnectionTable& b) {
    return a.entries == b.entries;
  }
};

// Derivatives of the frame polynomials along the tangent frame directions,
// projected back onto the frame at the evaluation point.
ConnectionTable connection_coefficients();
ConnectionTable connection_coefficients_at(const Point4& p);

// The reference table the computation must reproduce.
ConnectionTable expected_connection();

struct ShapeReport {
  FieldElem btilde_diag[3];     // coefficients on e4, e5, e6
  bool btilde_diagonal = false; // B~ has no cross terms in this frame
  bool mean_curvature_zero = false;
  bool symmetric = false;       // B(ei,ej) = B(ej,ei)
  bool pass() const;
};

ShapeReport shape_operator_checks();

// Unit quaternion z1 + z2 j presented by two Gaussian rationals.
struct Quaternion {
  GaussianRational z1, z2;
  Rational norm() const { return z1.norm() + z2.norm(); }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
};

// The double cover SU(2) -> SO(3) in explicit coordinates.  Requires
// |z1|^2 + |z2|^2 = 1; throws std::domain_error otherwise.
Matrix phi_hom(const GaussianRational& z1, const GaussianRational& z2);
Matrix phi_hom(const Quaternion& q);

// Hopf map value as a row 3-vector over Q.
std::array<Rational, 3> hopf_eta(const Quaternion& q);

// Block isometry (x, y) -> (xQ, y Phi(Q)) as a 7x7 matrix acting on row
// vectors.  Q must be a unit quaternion.
Matrix psi_matrix(const Quaternion& q);
std::array<FieldElem, 7> psi_action(const std::array<FieldElem, 7>& p, const Quaternion& q);

// Graph embedding of the 2/3-sphere into R^7.
std::array<FieldElem, 7> graph_point(const Point4& q);
// Does p satisfy the defining graph equations (last three coordinates are the
// stated quadratics of the first four)?
bool on_link(const std::array<FieldElem, 7>& p);

// Inverse stereographic projection (2v, |v|^2 - 1)/(1 + |v|^2) scaled by the
// radius; v = 0 maps to (0, 0, 0, -r), v = (1,0,0) to r(1,0,0,0).
Point4 stereographic_point(const std::array<Rational, 3>& v, const Rational& radius);

// n distinct exact points on the radius-r 3-sphere via inverse stereographic
// projection of rational 3-space points.
std::vector<Point4> rational_sphere_points(std::size_t n, const Rational& radius);
std::vector<Quaternion> rational_unit_quaternions(std::size_t n);

// so(7) generators in the 4+3 block convention.
Matrix so7_j(int i, int j);            // rotation in base coordinates i<j in 1..4
Matrix so7_k(int i, int j);            // rotation in fiber coordinates i<j in 1..3
Matrix so7_w(int a, int b);            // mixed block E_{ab}, a in 1..4, b in 1..3

// Reduce modulo x1^2+y1^2+x2^2+y2^2 = 4/9 by eliminating y2^2.
poly::Poly reduce_sphere_relation(const poly::Poly& p);

struct Table1Entry {
  int generator_index;  // 0..5 over J12, J13, J14, J23, J24, J34
  int frame_label;      // 5 or 6
  bool match = false;
  bool sign_flipped = false;
};

struct KillingReport {
  std::size_t rank = 0;
  std::size_t kernel_dimension = 0;
  std::vector<std::vector<Rational>> kernel_combinations;  // coefficients over the 21 generators
  bool reference_kernel_members = false;  // the four listed combinations map to zero
  bool reference_kernel_independent = false;
  std::vector<Table1Entry> table1;
  bool table1_all_match() const;
  bool table1_verified_up_to_sign() const;
};

// Generator order: J12, J13, J14, J23, J24, J34, K12, K13, K23, then W_ab for
// a = 1..4, b = 1..3.
std::vector<Matrix> so7_generators();
std::vector<std::string> so7_generator_names();

// The three projections <nu A, e_l>, l = 4, 5, 6, reduced modulo the sphere
// relation.
std::array<poly::Poly, 3> killing_projection(const Matrix& a);

KillingReport killing_map();

struct E4FormulaReport {
  bool zero_when_w_zero = false;     // symbolic
  bool symbolic_identity = false;    // polynomial identity for generic W
  bool pointwise_identity = false;   // exact evaluation at rational sphere points
  bool pass() const { return zero_when_w_zero && symbolic_identity && pointwise_identity; }
};

E4FormulaReport killing_e4_formula_check();

}  // namespace lospec::geometry
