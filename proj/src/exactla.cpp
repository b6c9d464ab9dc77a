#include "lospec/exactla.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lospec::linalg {

bool CharPoly::is_rational() const {
  for (const auto& c : coeffs)
    if (!c.is_rational()) return false;
  return true;
}

std::vector<Rational> CharPoly::rational_coeffs() const {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c.rational_value());
  return out;
}

std::string CharPoly::text() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k].is_zero() && !(first && k + 1 == coeffs.size())) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[k].text() << ")*lambda^" << k;
  }
  return os.str();
}

namespace {

CharPoly charpoly_integral_trace_recursion(const Matrix& m) {
  const std::size_t n = m.rows();
  CharPoly p;
  p.coeffs.assign(n + 1, FieldElem());
  p.coeffs[n] = FieldElem::one();
  if (n == 0) return p;
  Matrix iterate = m;
  FieldElem c = -iterate.trace();
  p.coeffs[n - 1] = c;
  for (std::size_t k = 1; k < n; ++k) {
    Matrix shifted = iterate;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c;
    iterate = m * shifted;
    // division is exact on integral input (Faddeev-LeVerrier integrality)
    c = FieldElem(Rational(-1, static_cast<long>(k + 1))) * iterate.trace();
    p.coeffs[n - 1 - k] = c;
  }
  return p;
}

// ---- polynomial matrix entries for the fraction-free route ----

using FPoly = std::vector<FieldElem>;  // dense, coefficient k on lambda^k

void ftrim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly fmul(const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  ftrim(r);
  return r;
}

FPoly fsub(FPoly a, const FPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ftrim(a);
  return a;
}

// exact division, throws if not divisible
FPoly fdiv_exact(FPoly a, const FPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  FPoly q;
  if (a.empty()) return q;
  if (a.size() < b.size()) throw std::domain_error("inexact polynomial division");
  q.assign(a.size() - b.size() + 1, FieldElem());
  FieldElem lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    if (a.size() < b.size() + k) continue;
    FieldElem coef = a[b.size() - 1 + k] * lead_inv;
    if (coef.is_zero()) continue;
    q[k] = coef;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + k] -= coef * b[j];
  }
  ftrim(a);
  if (!a.empty()) throw std::domain_error("inexact polynomial division in Bareiss step");
  return q;
}

CharPoly charpoly_bareiss(const Matrix& m) {
  const std::size_t n = m.rows();
  // entries of lambda I - M
  std::vector<std::vector<FPoly>> a(n, std::vector<FPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FPoly e;
      FieldElem c0 = -m.at(i, j);
      if (i == j) {
        e = {c0, FieldElem::one()};
      } else if (!c0.is_zero()) {
        e = {c0};
      }
      a[i][j] = std::move(e);
    }
  // Bareiss pivots for lambda I - M are the leading principal minors: monic
  // polynomials, never zero, so no pivoting is needed.
  FPoly prev = {FieldElem::one()};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].empty()) throw std::domain_error("unexpected zero pivot in Bareiss elimination");
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        FPoly num = fsub(fmul(a[k][k], a[i][j]), fmul(a[i][k], a[k][j]));
        a[i][j] = fdiv_exact(std::move(num), prev);
      }
      a[i][k].clear();
    }
    prev = a[k][k];
  }
  FPoly det = a[n - 1][n - 1];
  CharPoly p;
  p.coeffs.assign(n + 1, FieldElem());
  for (std::size_t i = 0; i < det.size() && i <= n; ++i) p.coeffs[i] = det[i];
  return p;
}

}  // namespace

CharPoly charpoly(const Matrix& m, CharPolyMethod method) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  if (method == CharPolyMethod::fraction_free) return charpoly_bareiss(m);
  // Clear denominators: charpoly(sM) has coefficients c_k(M) * s^(n-k).
  Integer s = m.denominator_lcm();
  if (s == 1) return charpoly_integral_trace_recursion(m);
  FieldElem scale = FieldElem(Rational(s));
  Matrix scaled = scale * m;
  CharPoly p = charpoly_integral_trace_recursion(scaled);
  Rational inv_s(1, 1);
  Rational s_q(s);
  for (std::size_t k = n; k-- > 0;) {
    inv_s /= s_q;
    p.coeffs[k] = inv_s * p.coeffs[k];
  }
  return p;
}

CharPoly charpoly_dual_checked(const Matrix& m) {
  CharPoly a = charpoly(m, CharPolyMethod::trace_recursion);
  CharPoly b = charpoly(m, CharPolyMethod::fraction_free);
  if (!(a == b))
    throw std::logic_error("trace recursion and fraction-free elimination disagree");
  return a;
}

KernelResult kernel(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("kernel of a non-square matrix");
  RowEchelon re(m);
  KernelResult res;
  res.basis = re.kernel_basis();
  res.dimension = res.basis.size();
  return res;
}

InertiaTriple inertia(const Matrix& m) {
  if (!m.is_hermitian()) throw std::domain_error("inertia requires a Hermitian matrix");
  const std::size_t n = m.rows();
  // Inertia is congruence-invariant; scale to integral entries first.
  Matrix h = m;
  Integer s = m.denominator_lcm();
  if (s != 1) h = FieldElem(Rational(s)) * h;

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  InertiaTriple out;

  while (!active.empty()) {
    // largest nonzero diagonal pivot by certified absolute value
    std::size_t best = active.size();
    for (std::size_t idx = 0; idx < active.size(); ++idx) {
      const FieldElem& d = h.at(active[idx], active[idx]);
      if (d.is_zero()) continue;
      if (best == active.size() ||
          compare_abs(d, h.at(active[best], active[best])) == Sign::positive)
        best = idx;
    }
    if (best < active.size()) {
      std::size_t p = active[best];
      const FieldElem d = h.at(p, p);
      Sign sg = d.sign();
      if (sg == Sign::positive)
        ++out.n_plus;
      else
        ++out.n_minus;
      FieldElem inv = d.inverse();
      std::vector<std::size_t> rest;
      rest.reserve(active.size() - 1);
      for (auto i : active)
        if (i != p) rest.push_back(i);
      for (std::size_t a = 0; a < rest.size(); ++a) {
        std::size_t i = rest[a];
        if (h.at(i, p).is_zero()) continue;
        FieldElem li = h.at(i, p) * inv;
        for (std::size_t b = 0; b < rest.size(); ++b) {
          std::size_t j = rest[b];
          if (h.at(p, j).is_zero()) continue;
          h.at(i, j) -= li * h.at(p, j);
        }
      }
      active = std::move(rest);
      continue;
    }
    // whole remaining diagonal is zero: look for an off-diagonal entry
    std::size_t pi = active.size(), pj = active.size();
    for (std::size_t a = 0; a < active.size() && pi == active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b)
        if (!h.at(active[a], active[b]).is_zero()) {
          pi = a;
          pj = b;
          break;
        }
    if (pi == active.size()) {
      out.n_zero += active.size();
      break;
    }
    // 2x2 pivot [[0, a],[conj(a), 0]]: one positive, one negative eigenvalue
    std::size_t i0 = active[pi], j0 = active[pj];
    ++out.n_plus;
    ++out.n_minus;
    FieldElem aij = h.at(i0, j0);
    FieldElem aji = h.at(j0, i0);
    FieldElem inv_ij = aij.inverse();
    FieldElem inv_ji = aji.inverse();
    std::vector<std::size_t> rest;
    for (auto i : active)
      if (i != i0 && i != j0) rest.push_back(i);
    for (std::size_t a = 0; a < rest.size(); ++a) {
      std::size_t r = rest[a];
      FieldElem ri = h.at(r, i0);
      FieldElem rj = h.at(r, j0);
      if (ri.is_zero() && rj.is_zero()) continue;
      for (std::size_t b = 0; b < rest.size(); ++b) {
        std::size_t c = rest[b];
        // Schur complement of the [[0,a],[conj(a),0]] block
        FieldElem upd = rj * inv_ij * h.at(i0, c) + ri * inv_ji * h.at(j0, c);
        h.at(r, c) -= upd;
      }
    }
    active = std::move(rest);
  }
  return out;
}

// ---- rational polynomial utilities ----

QPoly QPoly::from_roots_free(std::vector<Rational> coeffs) {
  QPoly p;
  p.c = std::move(coeffs);
  p.trim();
  return p;
}

int QPoly::degree() const { return static_cast<int>(c.size()) - 1; }

void QPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

bool QPoly::is_zero() const { return c.empty(); }

Rational QPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

QPoly QPoly::derivative() const {
  QPoly d;
  if (c.size() <= 1) return d;
  d.c.resize(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d.c[k - 1] = Rational(static_cast<long>(k)) * c[k];
  d.trim();
  return d;
}

std::string QPoly::text() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0 && !(first && k + 1 == c.size())) continue;
    if (!first) os << " + ";
    first = false;
    os << rational_text(c[k]) << "*lambda^" << k;
  }
  return os.str();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  r = a;
  q.c.clear();
  if (a.c.size() < b.c.size()) return;
  q.c.assign(a.c.size() - b.c.size() + 1, Rational(0));
  Rational lead = b.c.back();
  for (std::size_t k = q.c.size(); k-- > 0;) {
    if (r.c.size() < b.c.size() + k) continue;
    if (r.c.size() != b.c.size() + k) continue;
    Rational coef = r.c.back() / lead;
    q.c[k] = coef;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[j + k] -= coef * b.c[j];
    r.trim();
  }
  q.trim();
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    QPoly q, r;
    qpoly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  QPoly monic = p;
  Rational lead = monic.c.back();
  for (auto& x : monic.c) x /= lead;
  // Yun's algorithm
  QPoly d = monic.derivative();
  QPoly a = qpoly_gcd(monic, d);
  QPoly b, c, q, r;
  qpoly_divmod(monic, a, b, r);
  qpoly_divmod(d, a, c, r);
  unsigned i = 1;
  while (b.degree() > 0) {
    QPoly diff = c - b.derivative();
    QPoly g = qpoly_gcd(b, diff);
    if (g.degree() > 0) out.push_back({g, i});
    qpoly_divmod(b, g, q, r);
    b = q;
    qpoly_divmod(diff, g, q, r);
    c = q;
    ++i;
  }
  return out;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() >= 0) {
    const QPoly& s1 = chain[chain.size() - 2];
    const QPoly& s2 = chain.back();
    if (s2.is_zero()) break;
    QPoly q, r;
    qpoly_divmod(s1, s2, q, r);
    if (r.is_zero()) break;
    for (auto& x : r.c) x = -x;
    chain.push_back(r);
  }
  return chain;
}

int sign_changes_at(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    Rational v = s.eval(x);
    int sg = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<QPoly>& chain, bool plus) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    if (s.is_zero()) continue;
    Rational lead = s.c.back();
    int sg = lead > 0 ? 1 : -1;
    if (!plus && (s.degree() % 2 == 1)) sg = -sg;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

int sturm_count(const QPoly& p, const Rational& a, const Rational& b) {
  if (p.degree() <= 0) return 0;
  auto chain = sturm_chain(p);
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

int sturm_count_all(const QPoly& p) {
  if (p.degree() <= 0) return 0;
  auto chain = sturm_chain(p);
  return sign_changes_at_infinity(chain, false) - sign_changes_at_infinity(chain, true);
}

unsigned root_multiplicity(const CharPoly& p, const Rational& lambda0) {
  std::vector<Rational> c = p.rational_coeffs();
  unsigned mult = 0;
  while (c.size() > 1) {
    // synthetic division by (lambda - lambda0)
    std::vector<Rational> q(c.size() - 1);
    Rational carry = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
      carry = c[k] + carry * lambda0;
      q[k - 1] = carry;
    }
    Rational remainder = c[0] + carry * lambda0;
    if (remainder != 0) break;
    ++mult;
    c = std::move(q);
  }
  return mult;
}

bool verify_factorization(const CharPoly& p, const std::vector<PolyFactor>& factors) {
  if (!p.is_rational()) return false;
  QPoly prod;
  prod.c = {Rational(1)};
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) prod = prod * f.poly;
  QPoly target;
  target.c = p.rational_coeffs();
  target.trim();
  return prod == target;
}

unsigned roots_in_interval(const CharPoly& p, const Rational& lo, const Rational& hi) {
  QPoly q;
  q.c = p.rational_coeffs();
  q.trim();
  unsigned total = 0;
  for (const auto& f : squarefree_decomposition(q)) {
    int count = sturm_count(f.poly, lo, hi);
    // Sturm counts (lo, hi]; include lo itself when it is a root.
    if (f.poly.eval(lo) == 0) ++count;
    total += static_cast<unsigned>(count) * f.multiplicity;
  }
  return total;
}

Rational approximate_rational(double x, unsigned long max_den) {
  bool negative = x < 0;
  double v = std::abs(x);
  // continued fraction convergents p_k/q_k
  unsigned long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 1e18) break;
    unsigned long a = static_cast<unsigned long>(fl);
    unsigned long p2 = a * p1 + p0;
    unsigned long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(static_cast<long>(p1), static_cast<long>(q1));
  r.canonicalize();
  return negative ? -r : r;
}

SpectrumSplit certified_rational_roots(const CharPoly& p, const std::vector<double>& hints) {
  SpectrumSplit out;
  QPoly remaining;
  remaining.c = p.rational_coeffs();
  remaining.trim();
  std::vector<double> sorted = hints;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Rational> tried;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && std::abs(sorted[i] - sorted[i - 1]) < 1e-7) continue;
    Rational cand = approximate_rational(sorted[i], 1000000UL);
    if (std::abs(cand.get_d() - sorted[i]) > 1e-6) continue;
    bool seen = false;
    for (const auto& t : tried) seen = seen || t == cand;
    if (seen) continue;
    tried.push_back(cand);
    CharPoly rem;
    for (const auto& c : remaining.c) rem.coeffs.push_back(FieldElem(c));
    unsigned mult = root_multiplicity(rem, cand);
    if (mult == 0) continue;
    out.rational_roots.push_back({cand, mult});
    // divide the root out
    QPoly factor;
    factor.c = {-cand, Rational(1)};
    for (unsigned m = 0; m < mult; ++m) {
      QPoly q, r;
      qpoly_divmod(remaining, factor, q, r);
      remaining = q;
    }
  }
  std::sort(out.rational_roots.begin(), out.rational_roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual = remaining;
  return out;
}

CharPoly parse_charpoly(const std::string& s) {
  // split into terms on " + " at parenthesis depth 0
  std::vector<std::string> terms;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (depth == 0 && s.compare(i, 3, " + ") == 0) {
      terms.push_back(s.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  terms.push_back(s.substr(start));

  std::vector<std::pair<unsigned, FieldElem>> parsed;
  unsigned max_power = 0;
  for (const auto& term : terms) {
    std::size_t lam = term.rfind("lambda^");
    if (lam == std::string::npos) throw std::invalid_argument("missing lambda power in: " + term);
    unsigned power = static_cast<unsigned>(std::stoul(term.substr(lam + 7)));
    FieldElem coef;
    if (lam == 0) {
      coef = FieldElem::one();
    } else {
      std::string ctext = term.substr(0, lam);
      if (ctext.size() < 1 || ctext.back() != '*')
        throw std::invalid_argument("expected '*lambda^' in: " + term);
      ctext.pop_back();
      if (!ctext.empty() && ctext.front() == '(' && ctext.back() == ')')
        coef = FieldElem::parse(ctext.substr(1, ctext.size() - 2));
      else
        coef = FieldElem(parse_rational(ctext));
    }
    parsed.push_back({power, coef});
    max_power = std::max(max_power, power);
  }
  CharPoly p;
  p.coeffs.assign(max_power + 1, FieldElem());
  for (auto& [power, coef] : parsed) p.coeffs[power] += coef;
  return p;
}

QPoly parse_qpoly(const std::string& s) {
  CharPoly p = parse_charpoly(s);
  QPoly q;
  q.c = p.rational_coeffs();
  q.trim();
  return q;
}

InertiaTriple root_sign_counts(const CharPoly& p) {
  QPoly q;
  q.c = p.rational_coeffs();
  q.trim();
  InertiaTriple t;
  t.n_zero = root_multiplicity(p, Rational(0));
  for (const auto& f : squarefree_decomposition(q)) {
    // distinct negative roots: count in (-inf, 0) = all - count(0-) ... use
    // Cauchy bound to bracket.
    Rational bound(1);
    Rational lead = f.poly.c.back();
    for (const auto& coef : f.poly.c) {
      Rational a = abs(coef / lead);
      if (a > bound) bound = a;
    }
    bound += 1;
    int neg = sturm_count(f.poly, -bound, Rational(0));
    if (f.poly.eval(-bound) == 0) ++neg;
    if (f.poly.eval(Rational(0)) == 0) --neg;  // zero root counted separately
    int pos = sturm_count(f.poly, Rational(0), bound);
    t.n_minus += static_cast<unsigned>(neg) * f.multiplicity;
    t.n_plus += static_cast<unsigned>(pos) * f.multiplicity;
  }
  return t;
}

}  // namespace lospec::linalg
