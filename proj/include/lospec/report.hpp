#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "lospec/jacobi_operator.hpp"

namespace lospec::report {

using json = nlohmann::json;

const char* code_version();

// Report skeleton: { schema, command, inputs, results, status, provenance }.
// The provenance timestamp is excluded from the determinism hash.
json make_report(const std::string& command, json inputs);
void set_status(json& doc, bool pass, bool partial = false);

// FNV-1a over the document with provenance.timestamp removed.
std::uint64_t determinism_hash(const json& doc);

// Aligned plain-text rendering of a report document.
std::string render_text(const json& doc);

// ---- on-disk matrix cache ----

// cache directory: $LOSPEC_CACHE_DIR if set, else "cache"
std::string cache_directory();
std::string cache_path(int k, harmonic::BasisSource source);

json matrix_to_json(const jacobi::OperatorMatrix& op);
jacobi::OperatorMatrix matrix_from_json(const json& doc);

void save_matrix(const jacobi::OperatorMatrix& op);
// nullopt when missing, stale (code version) or hash-mismatched
std::optional<jacobi::OperatorMatrix> load_matrix(int k, harmonic::BasisSource source,
                                                  std::uint64_t basis_hash);

// assemble with cache: load when fresh, else compute and store
jacobi::OperatorMatrix cached_matrix(const harmonic::BasisFamily& basis, bool use_cache = true);

}  // namespace lospec::report
