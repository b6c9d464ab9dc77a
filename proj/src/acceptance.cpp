#include "lospec/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "lospec/decay.hpp"
#include "lospec/float_oracle.hpp"
#include "lospec/geometry.hpp"
#include "lospec/golden.hpp"
#include "lospec/jacobi_operator.hpp"
#include "lospec/report.hpp"

namespace lospec::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  Options opts;
  std::vector<CriterionResult> results;
  // assembled matrices shared by the untimed criteria; the timed ones
  // (1..4) recompute their own so the budgets cover the real work
  std::vector<jacobi::OperatorMatrix> paper_ops;   // k = 0..4
  std::vector<linalg::CharPoly> paper_charpolys;   // k = 0..4

  int covered_k() const { return std::min(4, opts.max_k); }

  void ensure_shared() {
    if (!paper_ops.empty()) return;
    for (int k = 0; k <= covered_k(); ++k) {
      auto fam = harmonic::paper_basis(k);
      paper_ops.push_back(opts.use_cache ? report::cached_matrix(fam)
                                         : jacobi::assemble_matrix(fam));
      paper_charpolys.push_back(linalg::charpoly(paper_ops.back().entries));
    }
  }

  void run(int index, const std::string& name, double budget_seconds,
           bool (*fn)(Runner&, std::string&)) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = fn(*this, detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_seconds > 0 && r.seconds > budget_seconds) {
      ok = false;
      detail += " [over budget " + std::to_string(budget_seconds) + "s]";
    }
    r.pass = ok;
    r.detail = detail;
    results.push_back(std::move(r));
  }
};

std::string inertia_text(const linalg::InertiaTriple& t) {
  std::ostringstream os;
  os << "(" << t.n_plus << ", " << t.n_zero << ", " << t.n_minus << ")";
  return os.str();
}

// standalone assemble + charpoly (+ inertia), fully inside the timed window;
// k <= 2 runs both charpoly routes and fails hard on disagreement
bool charpoly_criterion(Runner& r, int k, bool with_inertia,
                        const linalg::InertiaTriple& expected_inertia, std::string& detail) {
  if (k > r.opts.max_k) {
    detail = "skipped: beyond --max-k";
    return true;
  }
  auto op = jacobi::assemble_matrix(harmonic::paper_basis(k));
  auto p = k <= 2 ? linalg::charpoly_dual_checked(op.entries) : linalg::charpoly(op.entries);
  bool rational = p.is_rational();
  bool factored = rational && linalg::verify_factorization(p, golden::charpoly_factors(k));
  std::ostringstream os;
  os << "rational=" << (rational ? "yes" : "no") << " closed-form=" << (factored ? "yes" : "no");
  bool inertia_ok = true;
  if (with_inertia) {
    auto in = linalg::inertia(op.entries);
    inertia_ok = in == expected_inertia;
    os << " inertia=" << inertia_text(in);
  }
  detail = os.str();
  return factored && inertia_ok;
}

bool crit1(Runner& r, std::string& detail) { return charpoly_criterion(r, 1, false, {}, detail); }
bool crit2(Runner& r, std::string& detail) { return charpoly_criterion(r, 2, false, {}, detail); }
bool crit3(Runner& r, std::string& detail) {
  return charpoly_criterion(r, 3, true, {40, 8, 0}, detail);
}
bool crit4(Runner& r, std::string& detail) {
  return charpoly_criterion(r, 4, true, {75, 0, 0}, detail);
}

bool crit5(Runner& r, std::string& detail) {
  r.ensure_shared();
  const bool full = r.covered_k() == 4;
  std::size_t total_kernel = 0;
  bool per_k = true;
  unsigned mult_m10 = 0, mult_m8 = 0;
  for (int k = 0; k <= r.covered_k(); ++k) {
    auto ker = linalg::kernel(r.paper_ops[k].entries);
    total_kernel += ker.dimension;
    per_k = per_k && ker.dimension == golden::kernel_dimension(k);
    mult_m10 += linalg::root_multiplicity(r.paper_charpolys[k], Rational(-10));
    mult_m8 += linalg::root_multiplicity(r.paper_charpolys[k], Rational(-8));
  }
  bool kernel_ok = per_k && (!full || total_kernel == 17);
  bool mults_ok = !full || (mult_m10 == 1 && mult_m8 == 7);
  // Jacobi scaling: -10 -> -15/4, -8 -> -3, 0 stays; Morse index 1 + 7 = 8
  bool scaled_ok = jacobi::jacobi_eigenvalue(Rational(-10)) == rat(-15, 4) &&
                   jacobi::jacobi_eigenvalue(Rational(-8)) == Rational(-3);
  unsigned morse = mult_m10 + mult_m8;
  std::ostringstream os;
  os << "total kernel=" << total_kernel << " mult(-10)=" << mult_m10 << " mult(-8)=" << mult_m8
     << " morse index=" << morse << " first=-15/4 second=-3 third=0";
  if (!full) os << " [partial coverage, k <= " << r.covered_k() << "]";
  detail = os.str();
  return kernel_ok && mults_ok && scaled_ok && (!full || morse == 8);
}

bool crit6(Runner& r, std::string& detail) {
  r.ensure_shared();
  bool hermitian = true, charpolys_agree = true;
  for (int k = 0; k <= r.covered_k(); ++k) {
    hermitian = hermitian && r.paper_ops[k].entries.is_hermitian();
    auto gen = jacobi::assemble_matrix(harmonic::generated_basis(k));
    charpolys_agree = charpolys_agree && linalg::charpoly(gen.entries) == r.paper_charpolys[k];
  }
  std::ostringstream os;
  os << "hermitian=" << (hermitian ? "yes" : "no")
     << " basis-independent charpoly=" << (charpolys_agree ? "yes" : "no");
  detail = os.str();
  return hermitian && charpolys_agree;
}

bool crit7(Runner& r, std::string& detail) {
  r.ensure_shared();
  bool compare_ok = true, lists_ok = true;
  double worst_residual = 0;
  for (int k = 0; k <= r.covered_k(); ++k) {
    auto fs = oracle::float_spectrum(r.paper_ops[k].entries);
    worst_residual = std::max(worst_residual, fs.residual_bound);
    auto in = linalg::inertia(r.paper_ops[k].entries);
    auto rep = oracle::compare_spectra(r.paper_charpolys[k], in, fs, 1e-8);
    compare_ok = compare_ok && rep.pass;
    auto want = golden::float_eigenvalues(k);
    if (fs.eigenvalues.size() != want.size()) {
      lists_ok = false;
      continue;
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      if (std::abs(fs.eigenvalues[i] - want[i]) > 1e-8) lists_ok = false;
  }
  std::ostringstream os;
  os << "multiplicity windows=" << (compare_ok ? "ok" : "FAIL")
     << " printed lists=" << (lists_ok ? "ok" : "FAIL") << " max residual=" << worst_residual;
  detail = os.str();
  return compare_ok && lists_ok;
}

bool crit8(Runner& r, std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (int k = 5; k <= r.opts.positivity_k; ++k) {
    auto rep = jacobi::positivity_check(k, jacobi::PositivityMethod::exact_inertia,
                                        r.opts.positivity_k);
    ok = ok && rep.positive_definite;
    os << "L" << k << " inertia=" << inertia_text(rep.inertia) << " ";
  }
  auto fb = jacobi::positivity_check(5, jacobi::PositivityMethod::float_bound, r.opts.positivity_k);
  ok = ok && fb.bound_ok;
  os << "float min eigenvalue(L5)=" << fb.min_eigenvalue << " >= 3/2 - 1e-6: "
     << (fb.bound_ok ? "yes" : "no");
  detail = os.str();
  return ok;
}

bool crit9(Runner& r, std::string& detail) {
  (void)r;
  bool dims_ok = true;
  for (int k = 0; k <= 8; ++k) {
    std::size_t total = 0;
    for (int m : harmonic::weight_order(k)) {
      auto basis = harmonic::build_weight_space(k, m);
      dims_ok = dims_ok && basis.size() == static_cast<std::size_t>(k + 1);
      total += basis.size();
    }
    dims_ok = dims_ok && total == static_cast<std::size_t>((k + 1) * (k + 1));
  }
  bool berger_ok = true;
  for (int k = 0; k <= 4; ++k) {
    auto fam = harmonic::paper_basis(k);
    for (const auto& block : fam.blocks)
      for (const auto& f : block.vectors)
        berger_ok = berger_ok && harmonic::verify_eigen(f, k, block.weight).pass();
  }
  detail = std::string("dimensions(k<=8)=") + (dims_ok ? "ok" : "FAIL") +
           " berger identities=" + (berger_ok ? "ok" : "FAIL");
  return dims_ok && berger_ok;
}

bool crit10(Runner&, std::string& detail) {
  bool ok = true;
  long checked = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int c = 0; a + b + c <= 6; ++c)
        for (int d = 0; a + b + c + d <= 6; ++d) {
          poly::Poly f = poly::Poly::monomial(poly::Ring::sphere, poly::Monomial{{a, b, c, d}},
                                              FieldElem::one());
          ok = ok && poly::commutator_defect(2, 3, f).is_zero() &&
               poly::commutator_defect(1, 3, f).is_zero() &&
               poly::commutator_defect(1, 2, f).is_zero();
          ++checked;
        }
  detail = "monomials checked=" + std::to_string(checked);
  return ok;
}

bool crit11(Runner&, std::string& detail) {
  bool table_ok = geometry::connection_coefficients() == geometry::expected_connection();
  auto shape = geometry::shape_operator_checks();
  bool ortho_ok = true;
  auto points = geometry::rational_sphere_points(50, rat(2, 3));
  for (const auto& p : points) {
    std::array<FieldElem, 7> at[7];
    for (int l = 1; l <= 6; ++l) at[l - 1] = geometry::eval_field(geometry::frame_field(l), p);
    at[6] = geometry::eval_field(geometry::position_field(), p);
    for (int a = 0; a < 7 && ortho_ok; ++a)
      for (int b = a; b < 7 && ortho_ok; ++b) {
        FieldElem ip = geometry::dot7(at[a], at[b]);
        ortho_ok = (a == b) ? ip == FieldElem(1) : ip.is_zero();
      }
  }
  std::ostringstream os;
  os << "connection table=" << (table_ok ? "ok" : "FAIL")
     << " shape operator=" << (shape.pass() ? "ok" : "FAIL")
     << " orthonormality(50 pts)=" << (ortho_ok ? "ok" : "FAIL");
  detail = os.str();
  return table_ok && shape.pass() && ortho_ok;
}

bool crit12(Runner&, std::string& detail) {
  auto rep = geometry::killing_map();
  bool rank_ok = rep.rank == 17;
  bool kernel_ok = rep.kernel_dimension == 4 && rep.reference_kernel_members &&
                   rep.reference_kernel_independent;
  int flipped = 0;
  for (const auto& e : rep.table1)
    if (e.sign_flipped) ++flipped;
  bool table_ok = rep.table1_verified_up_to_sign() && rep.table1.size() == 12;
  std::ostringstream os;
  os << "rank=" << rep.rank << " kernel dim=" << rep.kernel_dimension
     << " table1 entries=" << rep.table1.size() << " sign flips=" << flipped;
  detail = os.str();
  return rank_ok && kernel_ok && table_ok;
}

bool crit13(Runner&, std::string& detail) {
  auto quats = geometry::rational_unit_quaternions(200);
  auto points = geometry::rational_sphere_points(100, rat(2, 3));
  bool hom_ok = true, so3_ok = true, eta_ok = true, invariance_ok = true;
  for (std::size_t t = 0; t < 100; ++t) {
    geometry::Quaternion p = quats[t], q = quats[t + 100];
    Matrix lhs = geometry::phi_hom(p * q);
    Matrix rhs = geometry::phi_hom(p) * geometry::phi_hom(q);
    hom_ok = hom_ok && lhs == rhs;

    Matrix m = geometry::phi_hom(p);
    so3_ok = so3_ok && (m.conjugate_transpose() * m) == Matrix::identity(3);
    auto cp = linalg::charpoly(m);
    so3_ok = so3_ok && -cp.coeffs[0] == FieldElem(1);  // det = 1

    auto e_pq = geometry::hopf_eta(p * q);
    auto e_p = geometry::hopf_eta(p);
    Matrix phi_q = geometry::phi_hom(q);
    for (int c = 0; c < 3; ++c) {
      FieldElem acc;
      for (int i = 0; i < 3; ++i) acc += FieldElem(e_p[i]) * phi_q.at(i, c);
      eta_ok = eta_ok && acc == FieldElem(e_pq[c]);
    }

    auto link_point = geometry::graph_point(points[t]);
    invariance_ok = invariance_ok && geometry::on_link(link_point) &&
                    geometry::on_link(geometry::psi_action(link_point, q));
  }
  std::ostringstream os;
  os << "homomorphism=" << (hom_ok ? "ok" : "FAIL") << " SO(3)=" << (so3_ok ? "ok" : "FAIL")
     << " equivariance=" << (eta_ok ? "ok" : "FAIL")
     << " invariance=" << (invariance_ok ? "ok" : "FAIL") << " (100 configurations each)";
  detail = os.str();
  return hom_ok && so3_ok && eta_ok && invariance_ok;
}

bool crit14(Runner&, std::string& detail) {
  std::vector<std::pair<Rational, unsigned>> spectrum = {
      {Rational(-10), 1}, {Rational(-8), 7}, {Rational(0), 17}};
  auto roots = decay::indicial_roots(spectrum);
  std::vector<Rational> produced;
  for (const auto& r : roots) {
    if (!r.rational_roots) return false;
    produced.push_back(*r.root_plus);
    produced.push_back(*r.root_minus);
  }
  bool roots_ok = true;
  for (const auto& want : golden::indicial_root_list()) {
    long count = std::count(produced.begin(), produced.end(), want);
    roots_ok = roots_ok && count == 1;
  }
  auto rows = decay::decay_rate_table(spectrum);
  bool dict_ok = false, dict_ok2 = false;
  for (const auto& row : rows) {
    if (row.indicial_root == rat(-3, 2)) dict_ok = row.graph_exponent == rat(-1, 2);
    if (row.indicial_root == rat(-5, 2)) dict_ok2 = row.graph_exponent == rat(-3, 2);
  }
  bool ode_ok = true;
  for (const auto& r : roots) {
    auto generic = decay::ode_mode_demo(r.jacobi_eigenvalue, 1.0, 0.3, 20.0);
    ode_ok = ode_ok && std::abs(generic.fitted_exponent - r.root_plus_approx) < 1e-3;
    double gap = r.root_plus_approx - r.root_minus_approx;
    auto fast = decay::ode_mode_demo(r.jacobi_eigenvalue, 1.0, r.root_minus_approx, 18.0 / gap);
    ode_ok = ode_ok && std::abs(fast.fitted_exponent - r.root_minus_approx) < 1e-3;
  }
  std::ostringstream os;
  os << "six roots=" << (roots_ok ? "ok" : "FAIL")
     << " decay dictionary=" << ((dict_ok && dict_ok2) ? "ok" : "FAIL")
     << " ode fits=" << (ode_ok ? "ok" : "FAIL");
  detail = os.str();
  return roots_ok && dict_ok && dict_ok2 && ode_ok;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& opts) {
  Runner r;
  r.opts = opts;
  r.run(1, "charpoly(L1) = lambda^4 (lambda+8)^4 (lambda-22)^4", 5, crit1);
  r.run(2, "charpoly(L2) = (lambda+8)^3 lambda^3 (lambda-6)^9 (lambda-20)^6 (lambda-56)^6", 30,
        crit2);
  r.run(3, "inertia(L3) = (40, 8, 0) and charpoly(L3) = lambda^8 (quintic)^8", 120, crit3);
  r.run(4, "charpoly(L4) closed form and inertia(L4) = (75, 0, 0)", 300, crit4);
  r.run(5, "kernel dimensions 2+4+3+8+0 = 17; spectrum -15/4 (1), -3 (7), 0 (17); index 8", 0,
        crit5);
  r.run(6, "Hermitian representations; basis-independent characteristic polynomials", 0, crit6);
  r.run(7, "float oracle within 1e-8 and printed spectra reproduced", 0, crit7);
  r.run(8, "positive definiteness for k = 5..6 with the 3/2 float bound", 600, crit8);
  r.run(9, "eigenspace dimensions (k+1)^2 for k <= 8; Berger eigenvalue identities", 0, crit9);
  r.run(10, "bracket relations on all monomials of degree <= 6", 0, crit10);
  r.run(11, "connection table, shape operator, frame orthonormality", 0, crit11);
  r.run(12, "Killing map rank 17, 4-dim kernel, Table 1 verified", 0, crit12);
  r.run(13, "group actions at 100 exact configurations each", 0, crit13);
  r.run(14, "indicial roots, decay dictionary, ode demo", 0, crit14);
  return r.results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace lospec::acceptance
