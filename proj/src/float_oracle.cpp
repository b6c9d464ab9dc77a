#include "lospec/float_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lospec::oracle {

namespace {

using DMat = std::vector<std::vector<double>>;

double frobenius(const DMat& a) {
  double s = 0;
  for (const auto& row : a)
    for (double x : row) s += x * x;
  return std::sqrt(s);
}

double off_diagonal_mass(const DMat& a) {
  double s = 0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

// Cyclic Jacobi with accumulated rotations.
void jacobi_rotate(DMat& a, DMat& v, double target_off, int max_sweeps) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_mass(a) <= target_off) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (apq == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_diagonal_mass(a) > target_off)
    throw std::runtime_error("plane-rotation eigensolver failed to converge");
}

struct EigenResult {
  std::vector<double> values;  // ascending
  double residual;
};

EigenResult solve_symmetric(const DMat& a0) {
  const std::size_t n = a0.size();
  DMat a = a0;
  DMat v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  double norm = frobenius(a0);
  double target = (norm == 0.0 ? 1e-300 : 1e-14 * norm);
  jacobi_rotate(a, v, target, 64);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a[x][x] < a[y][y]; });

  EigenResult res;
  res.values.reserve(n);
  res.residual = 0.0;
  for (std::size_t idx : order) res.values.push_back(a[idx][idx]);
  // residual of each eigenpair against the original matrix
  for (std::size_t idx : order) {
    double lambda = a[idx][idx];
    double r2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += a0[i][j] * v[j][idx];
      acc -= lambda * v[i][idx];
      r2 += acc * acc;
    }
    res.residual = std::max(res.residual, std::sqrt(r2));
  }
  return res;
}

// [[Re, -Im],[Im, Re]] embedding of a complex Hermitian matrix
DMat embed(const Matrix& m) {
  const std::size_t n = m.rows();
  DMat a(2 * n, std::vector<double>(2 * n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto z = m.at(i, j).to_complex();
      a[i][j] = z.real();
      a[n + i][n + j] = z.real();
      a[i][n + j] = -z.imag();
      a[n + i][j] = z.imag();
    }
  }
  return a;
}

std::vector<double> dedup_embedding(const std::vector<double>& doubled) {
  std::vector<double> out;
  out.reserve(doubled.size() / 2);
  for (std::size_t i = 0; i + 1 < doubled.size(); i += 2)
    out.push_back(0.5 * (doubled[i] + doubled[i + 1]));
  return out;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(DMat a, double* residual_bound) {
  EigenResult r = solve_symmetric(a);
  if (residual_bound) *residual_bound = r.residual;
  return r.values;
}

FloatSpectrum float_spectrum(const Matrix& m) {
  if (!m.is_hermitian()) throw std::domain_error("float oracle requires a Hermitian matrix");
  EigenResult r = solve_symmetric(embed(m));
  FloatSpectrum fs;
  fs.eigenvalues = dedup_embedding(r.values);
  fs.residual_bound = r.residual;
  return fs;
}

FloatSpectrum float_spectrum_generalized(const Matrix& h, const Matrix& g) {
  if (!h.is_hermitian() || !g.is_hermitian())
    throw std::domain_error("generalized float oracle requires Hermitian input");
  if (h.rows() != g.rows()) throw std::invalid_argument("matrix shapes differ");
  const std::size_t n2 = 2 * h.rows();
  DMat he = embed(h);
  DMat ge = embed(g);
  // Cholesky ge = L L^T
  DMat l(n2, std::vector<double>(n2, 0.0));
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = ge[i][j];
      for (std::size_t k = 0; k < j; ++k) acc -= l[i][k] * l[j][k];
      if (i == j) {
        if (acc <= 0) throw std::domain_error("Gram matrix is not positive definite");
        l[i][i] = std::sqrt(acc);
      } else {
        l[i][j] = acc / l[j][j];
      }
    }
  }
  // B = L^{-1} He L^{-T}: forward solves on both sides
  DMat x = he;  // will hold L^{-1} He
  for (std::size_t col = 0; col < n2; ++col) {
    for (std::size_t i = 0; i < n2; ++i) {
      double acc = x[i][col];
      for (std::size_t k = 0; k < i; ++k) acc -= l[i][k] * x[k][col];
      x[i][col] = acc / l[i][i];
    }
  }
  DMat b(n2, std::vector<double>(n2, 0.0));
  for (std::size_t row = 0; row < n2; ++row) {
    for (std::size_t j = 0; j < n2; ++j) {
      double acc = x[row][j];
      for (std::size_t k = 0; k < j; ++k) acc -= l[j][k] * b[row][k];
      b[row][j] = acc / l[j][j];
    }
  }
  EigenResult r = solve_symmetric(b);
  FloatSpectrum fs;
  fs.eigenvalues = dedup_embedding(r.values);
  fs.residual_bound = r.residual;
  return fs;
}

CompareReport compare_spectra(const linalg::CharPoly& exact, const linalg::InertiaTriple& inertia,
                              const FloatSpectrum& approx, double tol) {
  CompareReport rep;
  auto fail = [&](const std::string& msg) {
    rep.pass = false;
    rep.mismatches.push_back(msg);
  };
  if (!exact.is_rational()) {
    fail("characteristic polynomial has irrational coefficients");
    return rep;
  }
  if (approx.eigenvalues.size() != exact.degree()) {
    fail("eigenvalue count differs from the polynomial degree");
    return rep;
  }
  const auto& ev = approx.eigenvalues;
  // cluster the sorted float eigenvalues; greedy by adjacent gaps
  std::vector<std::pair<std::size_t, std::size_t>> clusters;  // [begin, end)
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= ev.size(); ++i) {
    if (i == ev.size() || ev[i] - ev[i - 1] > 10 * tol) {
      clusters.push_back({begin, i});
      begin = i;
    }
  }
  std::size_t accounted = 0;
  for (auto [b, e] : clusters) {
    Rational lo(ev[b]);
    Rational hi(ev[e - 1]);
    Rational pad(tol);
    unsigned mult = linalg::roots_in_interval(exact, lo - pad, hi + pad);
    if (mult != e - b) {
      std::ostringstream os;
      os << "float cluster near " << ev[b] << " has size " << (e - b)
         << " but the exact multiplicity in the window is " << mult;
      fail(os.str());
    }
    accounted += mult;
  }
  if (accounted != exact.degree()) fail("exact roots unaccounted for by the float clusters");

  std::size_t below = 0, above = 0, near_zero = 0;
  for (double x : ev) {
    if (x < -tol)
      ++below;
    else if (x > tol)
      ++above;
    else
      ++near_zero;
  }
  if (below != inertia.n_minus || above != inertia.n_plus || near_zero != inertia.n_zero) {
    std::ostringstream os;
    os << "sign counts differ: float (" << above << ", " << near_zero << ", " << below
       << ") vs exact (" << inertia.n_plus << ", " << inertia.n_zero << ", " << inertia.n_minus
       << ")";
    fail(os.str());
  }
  return rep;
}

}  // namespace lospec::oracle
