#pragma once

#include <string>
#include <vector>

#include "lospec/exactla.hpp"
#include "lospec/matrix.hpp"

namespace lospec::oracle {

struct FloatSpectrum {
  std::vector<double> eigenvalues;  // ascending
  double residual_bound = 0.0;      // max ||Mv - lambda v|| over computed pairs
};

// Independent floating-point Hermitian eigensolver: entries are converted to
// doubles, the n x n complex Hermitian matrix is embedded as a 2n x 2n real
// symmetric one, and cyclic plane rotations run until the off-diagonal
// Frobenius mass falls below 1e-14 * ||M||.  Each eigenvalue appears twice in
// the embedding; the n deduplicated values are returned.
// Throws std::domain_error on non-Hermitian input, std::runtime_error when
// the sweep cap is hit.
FloatSpectrum float_spectrum(const Matrix& m);

// Generalized problem H v = lambda G v with G Hermitian positive definite:
// Cholesky reduction of the real embedding, then the same plane-rotation
// solver.  Returns operator eigenvalues (deduplicated from the embedding).
FloatSpectrum float_spectrum_generalized(const Matrix& h, const Matrix& g);

struct CompareReport {
  bool pass = true;
  std::vector<std::string> mismatches;
};

// Every float eigenvalue must sit within tol of a root of the exact
// (rational-coefficient) characteristic polynomial, with cluster sizes
// matching the exact multiplicities (certified by Sturm counts on the
// squarefree factors), and the sign counts must agree with the exact inertia.
CompareReport compare_spectra(const linalg::CharPoly& exact, const linalg::InertiaTriple& inertia,
                              const FloatSpectrum& approx, double tol);

// Plain real symmetric Jacobi eigensolver used by the embedding; exposed for
// tests.  Returns eigenvalues ascending; fills residual on request.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a,
                                          double* residual_bound = nullptr);

}  // namespace lospec::oracle
