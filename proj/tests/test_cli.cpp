#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "lospec/report.hpp"

using namespace lospec;
using report::json;

namespace {

struct CacheDirGuard {
  std::string dir;
  explicit CacheDirGuard(const std::string& d) : dir(d) {
    setenv("LOSPEC_CACHE_DIR", d.c_str(), 1);
  }
  ~CacheDirGuard() {
    unsetenv("LOSPEC_CACHE_DIR");
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
};

}  // namespace

TEST_CASE("cache round-trip is entrywise identical") {
  CacheDirGuard guard("test_cache_roundtrip");
  auto fam = harmonic::paper_basis(2);
  auto op = jacobi::assemble_matrix(fam);
  report::save_matrix(op);
  auto loaded = report::load_matrix(2, harmonic::BasisSource::paper, op.basis_hash);
  REQUIRE(loaded.has_value());
  CHECK(loaded->entries == op.entries);
  CHECK(loaded->k == op.k);
  CHECK(loaded->basis_hash == op.basis_hash);
}

TEST_CASE("cache rejects stale or mismatched content") {
  CacheDirGuard guard("test_cache_stale");
  auto fam = harmonic::paper_basis(1);
  auto op = jacobi::assemble_matrix(fam);
  report::save_matrix(op);
  CHECK_FALSE(report::load_matrix(1, harmonic::BasisSource::paper, op.basis_hash + 1).has_value());
  CHECK_FALSE(report::load_matrix(3, harmonic::BasisSource::paper, op.basis_hash).has_value());

  // corrupt the stored version field
  auto path = report::cache_path(1, harmonic::BasisSource::paper);
  json doc = report::matrix_to_json(op);
  doc["code_version"] = "0.0.0-stale";
  std::ofstream(path) << doc.dump();
  CHECK_FALSE(report::load_matrix(1, harmonic::BasisSource::paper, op.basis_hash).has_value());
}

TEST_CASE("cached_matrix computes, stores and reuses") {
  CacheDirGuard guard("test_cache_reuse");
  auto fam = harmonic::paper_basis(1);
  auto first = report::cached_matrix(fam);
  CHECK(std::filesystem::exists(report::cache_path(1, harmonic::BasisSource::paper)));
  auto second = report::cached_matrix(fam);
  CHECK(first.entries == second.entries);
}

TEST_CASE("report determinism ignores only the timestamp") {
  json a = report::make_report("spectrum", {{"k", 2}});
  json b = report::make_report("spectrum", {{"k", 2}});
  a["results"]["value"] = "same";
  b["results"]["value"] = "same";
  b["provenance"]["timestamp"] = a["provenance"]["timestamp"].get<long>() + 100;
  CHECK(report::determinism_hash(a) == report::determinism_hash(b));

  b["results"]["value"] = "different";
  CHECK(report::determinism_hash(a) != report::determinism_hash(b));
}

TEST_CASE("text rendering contains the scalar fields") {
  json doc = report::make_report("decay", {{"lambda", "0"}});
  doc["results"] = {{"roots", json::array({0.0, -4.0})}, {"status_note", "ok"}};
  std::string text = report::render_text(doc);
  CHECK(text.find("decay") != std::string::npos);
  CHECK(text.find("status_note") != std::string::npos);
  CHECK(text.find("schema") != std::string::npos);
}

TEST_CASE("matrix json serialization round-trips through text entries") {
  auto fam = harmonic::paper_basis(1);
  auto op = jacobi::assemble_matrix(fam);
  json doc = report::matrix_to_json(op);
  auto back = report::matrix_from_json(doc);
  CHECK(back.entries == op.entries);
}
