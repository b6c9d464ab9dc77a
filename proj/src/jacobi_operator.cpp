#include "lospec/jacobi_operator.hpp"

#include <map>
#include <stdexcept>

#include "lospec/float_oracle.hpp"

namespace lospec::jacobi {

using harmonic::BasisFamily;
using poly::Monomial;
using poly::Poly;
using poly::Ring;

TripleField apply_L(const TripleField& x) {
  const Rational tau(1, 6);
  FieldElem sqrt6 = FieldElem::sqrt_radicand(6);
  const Poly& f1 = x.comp[0];
  const Poly& f2 = x.comp[1];
  const Poly& f3 = x.comp[2];
  TripleField out;
  out.comp[0] = -poly::laplacian_berger(f1, tau) - FieldElem(10) * f1 +
                sqrt6 * poly::apply_derivation(2, f2) + sqrt6 * poly::apply_derivation(3, f3);
  out.comp[1] = -(sqrt6 * poly::apply_derivation(2, f1)) - poly::laplacian_berger(f2, tau) -
                FieldElem(14) * poly::apply_derivation(1, f3);
  out.comp[2] = -(sqrt6 * poly::apply_derivation(3, f1)) +
                FieldElem(14) * poly::apply_derivation(1, f2) - poly::laplacian_berger(f3, tau);
  return out;
}

TripleField apply_Ltilde(const TripleField& x) {
  TripleField out;
  for (int c = 0; c < 3; ++c) out.comp[c] = -poly::laplacian_round(x.comp[c]);
  return out;
}

namespace {

// Shared coordinatization of the scalar basis: monomial index map plus the
// row-echelon factorization used to expand images.
struct BasisCoordinates {
  std::map<Monomial, std::size_t, poly::GradedLexLess> index;
  RowEchelon echelon;
  std::size_t n;

  explicit BasisCoordinates(const std::vector<Poly>& basis)
      : echelon(build(basis)), n(basis.size()) {}

  Matrix build(const std::vector<Poly>& basis) {
    for (const auto& p : basis)
      for (const auto& [m, c] : p.terms())
        if (index.find(m) == index.end()) {
          std::size_t next = index.size();
          index[m] = next;
        }
    Matrix b(index.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [m, c] : basis[j].terms()) b.at(index.at(m), j) = c;
    return b;
  }

  // expansion coefficients of p in the basis; nullopt if p leaves the span
  std::optional<std::vector<FieldElem>> expand(const Poly& p) const {
    std::vector<FieldElem> rhs(index.size());
    for (const auto& [m, c] : p.terms()) {
      auto it = index.find(m);
      if (it == index.end()) return std::nullopt;
      rhs[it->second] = c;
    }
    return echelon.solve(rhs);
  }
};

}  // namespace

OperatorMatrix assemble_matrix(const BasisFamily& basis) {
  auto scalars = basis.flatten();
  const std::size_t n = scalars.size();
  BasisCoordinates coords(scalars);
  if (coords.echelon.rank() != n)
    throw std::domain_error("basis vectors are linearly dependent");

  OperatorMatrix op;
  op.k = basis.k;
  op.source = basis.source;
  op.basis_hash = fnv1a(basis.content_text());
  op.entries = Matrix(3 * n, 3 * n);

  for (std::size_t slot = 0; slot < 3; ++slot) {
    for (std::size_t j = 0; j < n; ++j) {
      TripleField x;
      x.comp[slot] = scalars[j];
      TripleField y = apply_L(x);
      for (std::size_t c = 0; c < 3; ++c) {
        auto coef = coords.expand(y.comp[c]);
        if (!coef)
          throw std::domain_error("image of basis vector leaves the eigenspace span");
        for (std::size_t i = 0; i < n; ++i) op.entries.at(c * n + i, slot * n + j) = (*coef)[i];
      }
    }
  }
  return op;
}

Matrix derivation_matrix(int index, const BasisFamily& basis) {
  auto scalars = basis.flatten();
  const std::size_t n = scalars.size();
  BasisCoordinates coords(scalars);
  Matrix a(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly image = poly::apply_derivation(index, scalars[j]);
    auto coef = coords.expand(image);
    if (!coef) throw std::domain_error("derivation image leaves the span");
    for (std::size_t i = 0; i < n; ++i) a.at(i, j) = (*coef)[i];
  }
  return a;
}

bool check_hermitian(const Matrix& m) { return m.is_hermitian(); }

Matrix gram_matrix(const BasisFamily& basis) {
  auto scalars = basis.flatten();
  const std::size_t n = scalars.size();
  Matrix g(n, n);
  std::vector<Poly> conjugates;
  conjugates.reserve(n);
  for (const auto& p : scalars) conjugates.push_back(p.conj());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g.at(i, j) = poly::sphere_integral(scalars[j] * conjugates[i]);
  return g;
}

Matrix triple_gram(const BasisFamily& basis) {
  const std::size_t n = basis.size();
  Matrix g = gram_matrix(basis);
  Matrix g3(3 * n, 3 * n);
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g3.at(b * n + i, b * n + j) = g.at(i, j);
  return g3;
}

Matrix hermitized_form(const OperatorMatrix& op, const BasisFamily& basis) {
  return triple_gram(basis) * op.entries;
}

Rational jacobi_eigenvalue(const Rational& mu) { return mu * rat(3, 8); }
FieldElem jacobi_eigenvalue(const FieldElem& mu) { return rat(3, 8) * mu; }

PositivityReport positivity_check(int k, PositivityMethod method, int max_k) {
  if (k < 5) throw std::invalid_argument("positivity check applies to k >= 5");
  if (k > max_k) throw std::domain_error("k exceeds the configured resource limit");
  BasisFamily fam = harmonic::generated_basis(k);
  OperatorMatrix op = assemble_matrix(fam);
  Matrix h = hermitized_form(op, fam);
  if (!h.is_hermitian())
    throw std::domain_error("Gram-congruent form is not Hermitian; inner product inconsistent");

  PositivityReport rep;
  rep.k = k;
  rep.dimension = op.dimension();
  rep.method = method;
  if (method == PositivityMethod::exact_inertia) {
    rep.inertia = linalg::inertia(h);
    rep.positive_definite = rep.inertia.n_plus == rep.dimension;
    return rep;
  }
  oracle::FloatSpectrum fs = oracle::float_spectrum_generalized(h, triple_gram(fam));
  rep.min_eigenvalue = fs.eigenvalues.empty() ? 0.0 : fs.eigenvalues.front();
  rep.bound = 1.5;
  rep.bound_ok = rep.min_eigenvalue >= rep.bound - 1e-6;
  rep.positive_definite = rep.min_eigenvalue > 0;
  return rep;
}

}  // namespace lospec::jacobi
