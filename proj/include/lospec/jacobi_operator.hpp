#pragma once

#include <array>
#include <string>

#include "lospec/exactla.hpp"
#include "lospec/harmonic.hpp"
#include "lospec/poly.hpp"

namespace lospec::jacobi {

// A triple of functions on the 3-sphere (a section in the frame coordinates).
struct TripleField {
  std::array<poly::Poly, 3> comp{poly::Poly(poly::Ring::sphere), poly::Poly(poly::Ring::sphere),
                                 poly::Poly(poly::Ring::sphere)};
};

// The second-variation system in frame coordinates:
//   row 1: -(D_{1/6} + 10) f1 + sqrt6 d2 f2 + sqrt6 d3 f3
//   row 2: -sqrt6 d2 f1 - D_{1/6} f2 - 14 d1 f3
//   row 3: -sqrt6 d3 f1 + 14 d1 f2 - D_{1/6} f3
// with D_{1/6} the Berger Laplacian at tau = 1/6.
TripleField apply_L(const TripleField& x);

// Componentwise negative round Laplacian; commutes with apply_L.
TripleField apply_Ltilde(const TripleField& x);

struct OperatorMatrix {
  int k = 0;
  harmonic::BasisSource source = harmonic::BasisSource::generated;
  std::uint64_t basis_hash = 0;
  Matrix entries;

  std::size_t dimension() const { return entries.rows(); }
};

// Matrix representation L_k on V_k = Q_k^3 in the given basis, column j
// holding the expansion of L(basis vector j).  Throws std::domain_error if
// any image leaves the span (which would contradict commutation with the
// componentwise Laplacian).
OperatorMatrix assemble_matrix(const harmonic::BasisFamily& basis);

// Representation A of a single derivation on the scalar basis: d_i S = S A.
Matrix derivation_matrix(int index, const harmonic::BasisFamily& basis);

bool check_hermitian(const Matrix& m);

// Gram matrix G with G[i][j] = <u_j, u_i> under the normalized sphere
// integral, for the flattened scalar basis.
Matrix gram_matrix(const harmonic::BasisFamily& basis);

// diag(G, G, G) on the triple space V_k.
Matrix triple_gram(const harmonic::BasisFamily& basis);

// diag(G, G, G) * L_k: Hermitian whenever the basis spans V_k, positive
// congruence-equivalent to the operator (G is positive definite), so its
// inertia equals the operator's eigenvalue sign counts.
Matrix hermitized_form(const OperatorMatrix& op, const harmonic::BasisFamily& basis);

// Jacobi-operator eigenvalue from an L-eigenvalue: (3/8) mu.
Rational jacobi_eigenvalue(const Rational& mu);
FieldElem jacobi_eigenvalue(const FieldElem& mu);

enum class PositivityMethod { exact_inertia, float_bound };

struct PositivityReport {
  int k = 0;
  std::size_t dimension = 0;
  PositivityMethod method = PositivityMethod::exact_inertia;
  linalg::InertiaTriple inertia;      // exact_inertia
  bool positive_definite = false;
  double min_eigenvalue = 0.0;        // float_bound
  double bound = 0.0;
  bool bound_ok = false;
};

// Positivity of the operator on V_k for k >= 5 (no fixed basis exists there;
// the generated basis plus the Gram congruence is used).  max_k guards the
// expensive cases.
PositivityReport positivity_check(int k, PositivityMethod method, int max_k = 6);

}  // namespace lospec::jacobi
