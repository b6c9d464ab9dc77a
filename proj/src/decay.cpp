#include "lospec/decay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace lospec::decay {

std::vector<IndicialRoot> indicial_roots(
    const std::vector<std::pair<Rational, unsigned>>& l_spectrum) {
  std::map<Rational, unsigned> merged;
  for (const auto& [mu, mult] : l_spectrum) merged[mu * rat(3, 8)] += mult;

  std::vector<IndicialRoot> out;
  for (const auto& [lambda, mult] : merged) {
    IndicialRoot r;
    r.jacobi_eigenvalue = lambda;
    r.multiplicity = mult;
    r.radicand = lambda + 4;
    if (r.radicand < 0)
      throw std::domain_error("negative indicial radicand: eigenvalue below -4 is not in this spectrum");
    Rational root;
    if (rational_square_root(r.radicand, root)) {
      r.rational_roots = true;
      r.root_plus = root - 2;
      r.root_minus = -root - 2;
      r.root_plus_approx = r.root_plus->get_d();
      r.root_minus_approx = r.root_minus->get_d();
    } else {
      double s = std::sqrt(r.radicand.get_d());
      r.root_plus_approx = -2 + s;
      r.root_minus_approx = -2 - s;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DecayRow> decay_rate_table(
    const std::vector<std::pair<Rational, unsigned>>& l_spectrum) {
  std::vector<DecayRow> rows;
  for (const auto& root : indicial_roots(l_spectrum)) {
    if (root.jacobi_eigenvalue > 0 || !root.rational_roots) continue;
    for (const Rational& lam : {*root.root_plus, *root.root_minus}) {
      DecayRow row;
      row.indicial_root = lam;
      row.graph_exponent = lam + 1;
      if (lam == Rational(-1))
        row.interpretation = "translation mode: Z(x) - E bounded";
      else if (lam == rat(-3, 2))
        row.interpretation = "leading decay |Z(x)| = O(|x|^-1/2)";
      else if (lam == rat(-5, 2))
        row.interpretation = "next decay |Z(x)| = O(|x|^-3/2)";
      else if (lam == Rational(0))
        row.interpretation = "neutral mode";
      else
        row.interpretation = "subleading mode";
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const DecayRow& a, const DecayRow& b) { return a.indicial_root > b.indicial_root; });
  return rows;
}

OdeDemoResult ode_mode_demo(const Rational& lambda, double xi0, double xi0_prime, double t_end) {
  if (t_end <= 0) throw std::invalid_argument("integration horizon must be positive");
  const double lam = lambda.get_d();
  // xi'' = -4 xi' + lambda xi
  auto accel = [lam](double xi, double v) { return -4.0 * v + lam * xi; };

  const int steps = 40000;
  const double h = t_end / steps;
  double xi = xi0, v = xi0_prime, t = 0;
  OdeDemoResult res;
  res.tail_start = 0.75 * t_end;
  res.tail_end = t_end;

  // least-squares fit of log|xi| over the tail window
  double sum_t = 0, sum_y = 0, sum_tt = 0, sum_ty = 0;
  long count = 0;
  for (int s = 0; s <= steps; ++s) {
    if (t >= res.tail_start) {
      double a = std::abs(xi);
      if (a < 1e-280) throw std::domain_error("mode vanished on the tail window");
      double y = std::log(a);
      sum_t += t;
      sum_y += y;
      sum_tt += t * t;
      sum_ty += t * y;
      ++count;
    }
    double k1x = v, k1v = accel(xi, v);
    double k2x = v + 0.5 * h * k1v, k2v = accel(xi + 0.5 * h * k1x, v + 0.5 * h * k1v);
    double k3x = v + 0.5 * h * k2v, k3v = accel(xi + 0.5 * h * k2x, v + 0.5 * h * k2v);
    double k4x = v + h * k3v, k4v = accel(xi + h * k3x, v + h * k3v);
    xi += h / 6.0 * (k1x + 2 * k2x + 2 * k3x + k4x);
    v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
    t += h;
  }
  double denom = count * sum_tt - sum_t * sum_t;
  if (count < 2 || denom == 0) throw std::domain_error("tail window too short for a fit");
  res.fitted_exponent = (count * sum_ty - sum_t * sum_y) / denom;
  return res;
}

}  // namespace lospec::decay
