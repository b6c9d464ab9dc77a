// Command-line interface: exact spectra of the second-variation operator on
// the link of the Lawson-Osserman cone, with a floating-point cross-check,
// geometric verifications and the indicial decay table.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error.
#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "lospec/acceptance.hpp"
#include "lospec/decay.hpp"
#include "lospec/float_oracle.hpp"
#include "lospec/geometry.hpp"
#include "lospec/golden.hpp"
#include "lospec/report.hpp"

using namespace lospec;
using report::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

harmonic::BasisSource parse_source(const std::string& s) {
  if (s == "paper") return harmonic::BasisSource::paper;
  if (s == "generated") return harmonic::BasisSource::generated;
  throw CLI::ValidationError("--source", "must be 'paper' or 'generated'");
}

void emit(const json& doc, const std::string& format) {
  if (format == "text")
    std::cout << report::render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

int finish(json& doc, bool pass, const std::string& format, bool partial = false) {
  report::set_status(doc, pass, partial);
  emit(doc, format);
  return pass || partial ? kExitPass : kExitFail;
}

json field_row(const std::vector<FieldElem>& v) {
  json row = json::array();
  for (const auto& e : v) row.push_back(e.text());
  return row;
}

// shared spectral data for matrix / charpoly / spectrum / inertia commands
struct SpectralData {
  harmonic::BasisFamily basis;
  jacobi::OperatorMatrix op;
  linalg::CharPoly charpoly;
  Matrix hermitian_form;  // the matrix itself when Hermitian, Gram form otherwise
  bool used_gram = false;
};

SpectralData spectral_data(int k, harmonic::BasisSource source, bool use_cache) {
  SpectralData d;
  d.basis = harmonic::basis(k, source);
  d.op = report::cached_matrix(d.basis, use_cache);
  // two-algorithm redundancy for the small cases; disagreement is fatal
  d.charpoly = k <= 2 ? linalg::charpoly_dual_checked(d.op.entries)
                      : linalg::charpoly(d.op.entries);
  if (d.op.entries.is_hermitian()) {
    d.hermitian_form = d.op.entries;
  } else {
    d.hermitian_form = jacobi::hermitized_form(d.op, d.basis);
    d.used_gram = true;
  }
  return d;
}

json spectrum_section(const SpectralData& d, bool with_oracle) {
  json out;
  out["charpoly"] = d.charpoly.text();
  out["charpoly_rational"] = d.charpoly.is_rational();
  auto inertia = linalg::inertia(d.hermitian_form);
  out["inertia"] = {{"positive", inertia.n_plus},
                    {"zero", inertia.n_zero},
                    {"negative", inertia.n_minus}};
  auto kernel = linalg::kernel(d.op.entries);
  out["kernel_dimension"] = kernel.dimension;
  out["hermitian"] = !d.used_gram;
  if (d.used_gram) out["note"] = "inertia computed on the Gram-congruent Hermitian form";

  oracle::FloatSpectrum fs;
  if (d.used_gram)
    fs = oracle::float_spectrum_generalized(d.hermitian_form, jacobi::triple_gram(d.basis));
  else
    fs = oracle::float_spectrum(d.op.entries);

  auto split = linalg::certified_rational_roots(d.charpoly, fs.eigenvalues);
  json eigen = json::array();
  for (const auto& [root, mult] : split.rational_roots) {
    eigen.push_back({{"eigenvalue", rational_text(root)},
                     {"multiplicity", mult},
                     {"jacobi_scaled", rational_text(jacobi::jacobi_eigenvalue(root))}});
  }
  out["rational_eigenvalues"] = eigen;
  if (split.residual.degree() > 0) out["irrational_factor"] = split.residual.text();

  if (with_oracle) {
    json floats = json::array();
    for (double x : fs.eigenvalues) floats.push_back(x);
    auto rep = oracle::compare_spectra(d.charpoly, inertia, fs, 1e-8);
    out["float_oracle"] = {{"eigenvalues", floats},
                           {"residual_bound", fs.residual_bound},
                           {"pass", rep.pass},
                           {"mismatches", rep.mismatches}};
  }
  return out;
}

bool golden_check(const SpectralData& d, json& section) {
  if (d.basis.k > 4) {
    section["golden"] = "no printed reference beyond k = 4";
    return false;
  }
  bool matrix_ok = true;
  if (d.basis.source == harmonic::BasisSource::paper)
    matrix_ok = d.op.entries == golden::operator_matrix(d.basis.k);
  bool factors_ok = linalg::verify_factorization(d.charpoly, golden::charpoly_factors(d.basis.k));
  auto inertia = linalg::inertia(d.hermitian_form);
  bool inertia_ok = inertia == golden::inertia_triple(d.basis.k);
  section["golden"] = {{"matrix", matrix_ok}, {"charpoly_factors", factors_ok}, {"inertia", inertia_ok}};
  return matrix_ok && factors_ok && inertia_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra for the link of the Lawson-Osserman cone"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  // ---- basis ----
  auto* basis_cmd = app.add_subcommand("basis", "harmonic eigenspace bases with verification");
  int basis_k = 0;
  int basis_m = std::numeric_limits<int>::min();
  std::string basis_source = "paper";
  basis_cmd->add_option("--k", basis_k, "degree")->required();
  basis_cmd->add_option("--m", basis_m, "restrict to one weight block");
  basis_cmd->add_option("--source", basis_source, "paper or generated")
      ->check(CLI::IsMember({"paper", "generated"}));

  // ---- matrix / charpoly / spectrum / inertia ----
  struct SpectralArgs {
    int k = 0;
    int resource_limit = 6;
    std::string source = "paper";
    std::string oracle = "on";
    bool golden = false;
  };
  SpectralArgs margs;
  auto add_spectral_options = [&margs](CLI::App* cmd) {
    cmd->add_option("--k", margs.k, "degree")->required();
    cmd->add_option("--resource-limit", margs.resource_limit,
                    "largest degree the command will attempt (default 6)");
    cmd->add_option("--source", margs.source, "paper or generated")
        ->check(CLI::IsMember({"paper", "generated"}));
    cmd->add_option("--oracle", margs.oracle, "float cross-check on|off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_flag("--golden", margs.golden, "compare against the printed reference data");
  };
  auto* matrix_cmd = app.add_subcommand("matrix", "assembled operator matrix (cached)");
  auto* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
  auto* inertia_cmd = app.add_subcommand("inertia", "exact inertia and kernel");
  for (auto* cmd : {matrix_cmd, charpoly_cmd, spectrum_cmd, inertia_cmd})
    add_spectral_options(cmd);

  // ---- verify-all ----
  auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance battery");
  int verify_max_k = 4, verify_positivity_k = 5;
  verify_cmd->add_option("--max-k", verify_max_k, "verify spectra for k <= max-k")
      ->check(CLI::Range(0, 4));
  verify_cmd->add_option("--positivity-k", verify_positivity_k, "positivity up to this degree")
      ->check(CLI::Range(5, 6));

  // ---- geometry ----
  auto* geometry_cmd = app.add_subcommand("geometry", "frame, connection and group checks");
  std::string geometry_check = "connections";
  geometry_cmd->add_option("--check", geometry_check, "connections|killing|groups|frames")
      ->check(CLI::IsMember({"connections", "killing", "groups", "frames"}));

  // ---- decay ----
  auto* decay_cmd = app.add_subcommand("decay", "indicial roots and decay table");
  std::string decay_lambda;
  std::string decay_ode;
  decay_cmd->add_option("--lambda", decay_lambda, "indicial roots of one Jacobi eigenvalue");
  decay_cmd->add_option("--ode-demo", decay_ode, "fit the mode equation for one eigenvalue");

  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "skip the on-disk matrix cache");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*basis_cmd) {
      json doc = report::make_report(
          "basis", {{"k", basis_k},
                    {"m", basis_m == std::numeric_limits<int>::min() ? json(nullptr) : json(basis_m)},
                    {"source", basis_source}});
      if (basis_k < 0 || (basis_source == "paper" && basis_k > 4)) {
        std::cerr << "basis: k out of range for source " << basis_source << "\n";
        return kExitUsage;
      }
      auto fam = harmonic::basis(basis_k, parse_source(basis_source));
      bool all_ok = true;
      json blocks = json::array();
      for (const auto& block : fam.blocks) {
        if (basis_m != std::numeric_limits<int>::min() && block.weight != basis_m) continue;
        json vecs = json::array();
        for (const auto& v : block.vectors) {
          auto check = harmonic::verify_eigen(v, fam.k, block.weight);
          all_ok = all_ok && check.pass();
          vecs.push_back({{"poly", v.text()},
                          {"verify", check.describe()},
                          {"norm2", poly::sphere_inner_product(v, v).text()}});
        }
        blocks.push_back({{"weight", block.weight}, {"size", block.vectors.size()},
                          {"vectors", vecs}});
      }
      doc["results"] = {{"blocks", blocks}, {"total", fam.size()}};
      return finish(doc, all_ok, format);
    }

    if (*matrix_cmd || *charpoly_cmd || *spectrum_cmd || *inertia_cmd) {
      std::string cmd_name = *matrix_cmd ? "matrix"
                             : *charpoly_cmd ? "charpoly"
                             : *spectrum_cmd ? "spectrum"
                                             : "inertia";
      json doc = report::make_report(cmd_name, {{"k", margs.k},
                                                {"source", margs.source},
                                                {"oracle", margs.oracle},
                                                {"golden", margs.golden}});
      if (margs.k < 0 || margs.k > margs.resource_limit) {
        std::cerr << cmd_name << ": k must lie in [0, " << margs.resource_limit
                  << "] (raise --resource-limit to go further)\n";
        return kExitUsage;
      }
      if (margs.source == "paper" && margs.k > 4) {
        std::cerr << cmd_name << ": --source paper covers k <= 4 only\n";
        return kExitUsage;
      }
      SpectralData d = spectral_data(margs.k, parse_source(margs.source), !no_cache);
      json section = spectrum_section(d, margs.oracle == "on");
      if (*inertia_cmd) {
        json kernel_rows = json::array();
        for (const auto& v : linalg::kernel(d.op.entries).basis) kernel_rows.push_back(field_row(v));
        section["kernel_basis"] = kernel_rows;
      }
      if (*matrix_cmd) {
        json rows = json::array();
        for (std::size_t i = 0; i < d.op.entries.rows(); ++i) {
          std::vector<FieldElem> row;
          for (std::size_t j = 0; j < d.op.entries.cols(); ++j) row.push_back(d.op.entries.at(i, j));
          rows.push_back(field_row(row));
        }
        section["entries"] = rows;
        section["dimension"] = d.op.dimension();
        section["basis_hash"] = d.op.basis_hash;
        section["cache_path"] = report::cache_path(d.op.k, d.op.source);
      }
      bool pass = true;
      if (margs.oracle == "on" && section.contains("float_oracle"))
        pass = section["float_oracle"]["pass"].get<bool>();
      if (margs.golden) pass = golden_check(d, section) && pass;
      doc["results"] = section;
      return finish(doc, pass, format);
    }

    if (*verify_cmd) {
      json doc = report::make_report(
          "verify-all", {{"max_k", verify_max_k}, {"positivity_k", verify_positivity_k}});
      acceptance::Options opts;
      opts.max_k = verify_max_k;
      opts.positivity_k = verify_positivity_k;
      opts.use_cache = !no_cache;
      auto results = acceptance::run_all(opts);
      json list = json::array();
      for (const auto& r : results)
        list.push_back({{"criterion", r.index},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"seconds", r.seconds},
                        {"detail", r.detail}});
      bool partial = verify_max_k < 4;
      doc["results"] = {{"criteria", list},
                        {"all_pass", acceptance::all_pass(results)},
                        {"coverage", partial ? "partial (max-k below 4)" : "full"}};
      return finish(doc, acceptance::all_pass(results), format, partial);
    }

    if (*geometry_cmd) {
      json doc = report::make_report("geometry", {{"check", geometry_check}});
      bool pass = false;
      json section;
      if (geometry_check == "connections") {
        auto computed = geometry::connection_coefficients();
        auto expected = geometry::expected_connection();
        pass = computed == expected;
        json rows = json::array();
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 6; ++j) {
            const auto& fd = computed.at(i, j);
            json coeffs = json::array();
            for (const auto& c : fd.frame_coeff) coeffs.push_back(c.text());
            rows.push_back({{"i", i}, {"j", j}, {"frame_coeffs", coeffs},
                            {"nu_coeff", fd.nu_coeff.text()},
                            {"matches_reference", fd == expected.at(i, j)}});
          }
        auto shape = geometry::shape_operator_checks();
        pass = pass && shape.pass();
        section = {{"entries", rows},
                   {"shape_operator",
                    {{"btilde_e4", shape.btilde_diag[0].text()},
                     {"btilde_e5", shape.btilde_diag[1].text()},
                     {"btilde_e6", shape.btilde_diag[2].text()},
                     {"mean_curvature_zero", shape.mean_curvature_zero}}}};
      } else if (geometry_check == "killing") {
        auto rep = geometry::killing_map();
        pass = rep.rank == 17 && rep.kernel_dimension == 4 && rep.reference_kernel_members &&
               rep.table1_verified_up_to_sign();
        auto names = geometry::so7_generator_names();
        json kernel = json::array();
        for (const auto& combo : rep.kernel_combinations) {
          std::string text;
          for (std::size_t g = 0; g < combo.size(); ++g) {
            if (combo[g] == 0) continue;
            if (!text.empty()) text += " + ";
            text += "(" + rational_text(combo[g]) + ")*" + names[g];
          }
          kernel.push_back(text);
        }
        json table = json::array();
        for (const auto& e : rep.table1)
          table.push_back({{"generator", names[e.generator_index]},
                           {"frame", "e" + std::to_string(e.frame_label)},
                           {"match", e.match},
                           {"sign_flipped", e.sign_flipped}});
        section = {{"rank", rep.rank},
                   {"kernel_dimension", rep.kernel_dimension},
                   {"kernel", kernel},
                   {"reference_kernel_members", rep.reference_kernel_members},
                   {"table1", table}};
      } else if (geometry_check == "groups") {
        auto quats = geometry::rational_unit_quaternions(200);
        auto points = geometry::rational_sphere_points(100, rat(2, 3));
        bool hom = true, inv = true;
        for (std::size_t t = 0; t < 100; ++t) {
          auto p = quats[t], q = quats[t + 100];
          hom = hom && geometry::phi_hom(p * q) == geometry::phi_hom(p) * geometry::phi_hom(q);
          auto lp = geometry::graph_point(points[t]);
          inv = inv && geometry::on_link(geometry::psi_action(lp, q));
        }
        pass = hom && inv;
        section = {{"homomorphism_100", hom}, {"link_invariance_100", inv}};
      } else {  // frames
        bool ortho = true;
        for (const auto& p : geometry::rational_sphere_points(50, rat(2, 3))) {
          std::array<FieldElem, 7> at[7];
          for (int l = 1; l <= 6; ++l)
            at[l - 1] = geometry::eval_field(geometry::frame_field(l), p);
          at[6] = geometry::eval_field(geometry::position_field(), p);
          for (int a = 0; a < 7; ++a)
            for (int b = a; b < 7; ++b) {
              FieldElem ip = geometry::dot7(at[a], at[b]);
              ortho = ortho && (a == b ? ip == FieldElem(1) : ip.is_zero());
            }
        }
        json frames = json::array();
        for (int l = 1; l <= 6; ++l) {
          json comps = json::array();
          for (const auto& c : geometry::frame_field(l)) comps.push_back(c.text());
          frames.push_back({{"label", "e" + std::to_string(l)}, {"components", comps}});
        }
        pass = ortho;
        section = {{"orthonormal_at_50_points", ortho}, {"frames", frames}};
      }
      doc["results"] = section;
      return finish(doc, pass, format);
    }

    if (*decay_cmd) {
      json doc = report::make_report("decay", {{"lambda", decay_lambda}, {"ode_demo", decay_ode}});
      bool pass = true;
      json section;
      if (!decay_lambda.empty()) {
        Rational lambda = parse_rational(decay_lambda);
        auto roots = decay::indicial_roots({{lambda * rat(8, 3), 1}});
        const auto& r = roots.front();
        section["roots"] = {{"lambda", rational_text(r.jacobi_eigenvalue)},
                            {"radicand", rational_text(r.radicand)},
                            {"rational", r.rational_roots},
                            {"plus", r.root_plus_approx},
                            {"minus", r.root_minus_approx}};
      } else if (!decay_ode.empty()) {
        Rational lambda = parse_rational(decay_ode);
        auto res = decay::ode_mode_demo(lambda, 1.0, 0.3, 20.0);
        section["ode_demo"] = {{"lambda", rational_text(lambda)},
                               {"fitted_exponent", res.fitted_exponent}};
      } else {
        std::vector<std::pair<Rational, unsigned>> spectrum = {
            {Rational(-10), 1}, {Rational(-8), 7}, {Rational(0), 17}};
        auto roots = decay::indicial_roots(spectrum);
        json list = json::array();
        std::vector<Rational> produced;
        for (const auto& r : roots) {
          list.push_back({{"jacobi_eigenvalue", rational_text(r.jacobi_eigenvalue)},
                          {"multiplicity", r.multiplicity},
                          {"root_plus", rational_text(*r.root_plus)},
                          {"root_minus", rational_text(*r.root_minus)}});
          produced.push_back(*r.root_plus);
          produced.push_back(*r.root_minus);
        }
        for (const auto& want : golden::indicial_root_list())
          pass = pass && std::count(produced.begin(), produced.end(), want) == 1;
        json dict = json::array();
        for (const auto& row : decay::decay_rate_table(spectrum))
          dict.push_back({{"indicial_root", rational_text(row.indicial_root)},
                          {"graph_exponent", rational_text(row.graph_exponent)},
                          {"interpretation", row.interpretation}});
        json fits = json::array();
        for (const auto& r : roots) {
          auto fit = decay::ode_mode_demo(r.jacobi_eigenvalue, 1.0, 0.3, 20.0);
          bool ok = std::abs(fit.fitted_exponent - r.root_plus_approx) < 1e-3;
          pass = pass && ok;
          fits.push_back({{"lambda", rational_text(r.jacobi_eigenvalue)},
                          {"fitted", fit.fitted_exponent},
                          {"expected", r.root_plus_approx},
                          {"ok", ok}});
        }
        section = {{"indicial_roots", list}, {"decay_dictionary", dict}, {"ode_fits", fits}};
      }
      doc["results"] = section;
      return finish(doc, pass, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
