#pragma once

#include <utility>
#include <vector>

#include "lospec/exactla.hpp"
#include "lospec/matrix.hpp"

namespace lospec::golden {

// Printed matrix representations on the fixed bases, k = 0..4.
Matrix operator_matrix(int k);

// Printed derivation representations d_i S_k = S_k A_i, k = 1..4, i = 1..3.
Matrix derivation_rep(int k, int i);

// Closed-form characteristic polynomial factorizations (over Q).
// k = 0: lambda^2 (lambda+10)
// k = 1: lambda^4 (lambda+8)^4 (lambda-22)^4
// k = 2: (lambda+8)^3 lambda^3 (lambda-6)^9 (lambda-20)^6 (lambda-56)^6
// k = 3: lambda^8 (quintic)^8
// k = 4: (quadratic)^10 (cubic)^5 (quartic)^10
std::vector<linalg::PolyFactor> charpoly_factors(int k);

// Exact rational eigenvalues with multiplicities, k = 0..3 (k = 4 has
// irrational pairs; see float_eigenvalues).
std::vector<std::pair<Rational, unsigned>> rational_eigenvalues(int k);

// Reference numerical spectra (ascending, with multiplicity), k = 0..4.
std::vector<double> float_eigenvalues(int k);

linalg::InertiaTriple inertia_triple(int k);

std::size_t kernel_dimension(int k);

// The six indicial roots of the nonpositive spectrum: {0, -1, -3/2, -5/2, -3, -4}.
std::vector<Rational> indicial_root_list();

}  // namespace lospec::golden
