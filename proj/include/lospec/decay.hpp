#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lospec/rational.hpp"

namespace lospec::decay {

// Indicial data of one Jacobi eigenvalue lambda: the mode equation
// xi'' + 4 xi' - lambda xi = 0 has characteristic roots -2 +- sqrt(4 + lambda).
// Roots are exact rationals when 4 + lambda is a rational square, otherwise
// kept symbolic with a float approximation.
struct IndicialRoot {
  Rational jacobi_eigenvalue;  // lambda = (3/8) * mu_L
  unsigned multiplicity = 0;
  Rational radicand;           // 4 + lambda, nonnegative for this spectrum
  bool rational_roots = false;
  std::optional<Rational> root_plus;
  std::optional<Rational> root_minus;
  double root_plus_approx = 0;
  double root_minus_approx = 0;
};

// Full indicial table from L-eigenvalues (mu, multiplicity); applies the
// (3/8) Jacobi scaling, merges duplicates, orders ascending by lambda.
// Throws std::domain_error when a radicand is negative (impossible for this
// spectrum; signals bad input).
std::vector<IndicialRoot> indicial_roots(const std::vector<std::pair<Rational, unsigned>>& l_spectrum);

struct DecayRow {
  Rational indicial_root;   // lambda_{k,+-}
  Rational graph_exponent;  // 1 + lambda: |Z(x)| ~ |x|^(1+lambda)
  std::string interpretation;
};

// Dictionary from the nonpositive part of the spectrum to cone-graph decay
// orders: the indicial roots {0, -1, -3/2, -5/2, -3, -4} map to exponents
// 1 + lambda, with -1 the translation mode and -3/2, -5/2 the leading decay
// rates.
std::vector<DecayRow> decay_rate_table(const std::vector<std::pair<Rational, unsigned>>& l_spectrum);

struct OdeDemoResult {
  double fitted_exponent = 0;
  double tail_start = 0;
  double tail_end = 0;
};

// Integrates xi'' + 4 xi' - lambda xi = 0 with a classical 4th-order
// Runge-Kutta scheme and fits the slope of log|xi| on the tail window.
// Throws std::domain_error when xi vanishes on the tail window.
OdeDemoResult ode_mode_demo(const Rational& lambda, double xi0, double xi0_prime, double t_end);

}  // namespace lospec::decay
