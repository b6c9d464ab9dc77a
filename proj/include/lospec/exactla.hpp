#pragma once

#include <string>
#include <vector>

#include "lospec/matrix.hpp"

namespace lospec::linalg {

// Monic characteristic polynomial det(lambda I - M); coefficient k is the
// coefficient of lambda^k.
struct CharPoly {
  std::vector<FieldElem> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_rational() const;
  // Throws when a coefficient is irrational.
  std::vector<Rational> rational_coeffs() const;
  std::string text() const;
  friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
};

struct InertiaTriple {
  std::size_t n_plus = 0;
  std::size_t n_zero = 0;
  std::size_t n_minus = 0;
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

enum class CharPolyMethod { trace_recursion, fraction_free };

// Exact characteristic polynomial.  trace_recursion runs the
// Faddeev-LeVerrier iteration (the matrix is scaled to a common integral
// denominator first; the iteration is then division-exact); fraction_free
// runs Bareiss elimination on lambda I - M over the polynomial ring.
CharPoly charpoly(const Matrix& m, CharPolyMethod method = CharPolyMethod::trace_recursion);

// Runs both routes and throws std::logic_error when they disagree.  The
// fraction-free route is O(n^2) polynomial products per step, so this is for
// small matrices (the k <= 2 representations).
CharPoly charpoly_dual_checked(const Matrix& m);

struct KernelResult {
  std::size_t dimension = 0;
  std::vector<std::vector<FieldElem>> basis;
};

KernelResult kernel(const Matrix& m);

// Inertia of a Hermitian matrix by LDL* with symmetric pivoting: pivots are
// chosen largest-in-absolute-value among the remaining diagonal, with a 2x2
// off-diagonal pivot when the whole remaining diagonal vanishes.  Pivot signs
// are decided exactly.
InertiaTriple inertia(const Matrix& m);

// Dense univariate polynomial over Q, coefficient k on lambda^k.
struct QPoly {
  std::vector<Rational> c;

  static QPoly from_roots_free(std::vector<Rational> coeffs);
  int degree() const;
  void trim();
  bool is_zero() const;
  Rational eval(const Rational& x) const;
  QPoly derivative() const;
  std::string text() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b);
};

// quotient/remainder of Euclidean division
void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd

// Yun squarefree decomposition: p = lc * prod factors[i].poly^factors[i].multiplicity
struct SquarefreeFactor {
  QPoly poly;  // monic squarefree
  unsigned multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& p);

// Number of distinct real roots of squarefree p in (a, b].
int sturm_count(const QPoly& p, const Rational& a, const Rational& b);
// Number of distinct real roots of squarefree p in all of R.
int sturm_count_all(const QPoly& p);

// Exact multiplicity of lambda0 as a root of a rational-coefficient charpoly
// (repeated synthetic division).  Throws on irrational coefficients.
unsigned root_multiplicity(const CharPoly& p, const Rational& lambda0);

// Does prod (factor^multiplicity) equal p exactly?  Factors over Q.
struct PolyFactor {
  QPoly poly;
  unsigned multiplicity;
};
bool verify_factorization(const CharPoly& p, const std::vector<PolyFactor>& factors);

// Total multiplicity of roots of a rational charpoly in [lo, hi], via the
// squarefree decomposition and Sturm counts.
unsigned roots_in_interval(const CharPoly& p, const Rational& lo, const Rational& hi);

// Inertia read off the charpoly roots (valid for diagonalizable matrices):
// counts of negative / zero / positive roots with multiplicity.
InertiaTriple root_sign_counts(const CharPoly& p);

// Best rational approximation of x with denominator <= max_den (continued
// fraction convergents).
Rational approximate_rational(double x, unsigned long max_den);

struct SpectrumSplit {
  std::vector<std::pair<Rational, unsigned>> rational_roots;  // ascending
  QPoly residual;  // monic factor with no rational roots among the hints
};

// Rational eigenvalues certified from float hints: candidates come from the
// hint clusters, multiplicities from exact synthetic division; the residual
// is what remains after dividing those roots out.
SpectrumSplit certified_rational_roots(const CharPoly& p, const std::vector<double>& hints);

// Parses the emitted polynomial grammar: terms "(coef)*lambda^k" joined by
// " + " with canonical field-element coefficient text; bare rational
// coefficients and bare "lambda^k" terms are also accepted, so factor lists
// can be written by hand.
CharPoly parse_charpoly(const std::string& s);
QPoly parse_qpoly(const std::string& s);  // same grammar, coefficients must be rational

}  // namespace lospec::linalg
