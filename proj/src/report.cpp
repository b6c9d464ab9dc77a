#include "lospec/report.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lospec::report {

const char* code_version() { return "1.0.0"; }

json make_report(const std::string& command, json inputs) {
  json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["results"] = json::object();
  doc["status"] = "pass";
  auto now = std::chrono::system_clock::now();
  doc["provenance"] = {
      {"code_version", code_version()},
      {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()},
  };
  return doc;
}

void set_status(json& doc, bool pass, bool partial) {
  doc["status"] = partial ? "partial" : (pass ? "pass" : "fail");
}

std::uint64_t determinism_hash(const json& doc) {
  json copy = doc;
  if (copy.contains("provenance")) copy["provenance"].erase("timestamp");
  return fnv1a(copy.dump());
}

namespace {

void render_value(std::ostringstream& os, const json& v, int indent);

void render_object(std::ostringstream& os, const json& v, int indent) {
  std::size_t width = 0;
  for (auto it = v.begin(); it != v.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = v.begin(); it != v.end(); ++it) {
    os << std::string(indent, ' ') << it.key() << std::string(width - it.key().size(), ' ')
       << " : ";
    if (it.value().is_object() || it.value().is_array()) {
      os << "\n";
      render_value(os, it.value(), indent + 2);
    } else {
      render_value(os, it.value(), 0);
      os << "\n";
    }
  }
}

void render_value(std::ostringstream& os, const json& v, int indent) {
  if (v.is_object()) {
    render_object(os, v, indent);
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_object() || item.is_array()) {
        os << std::string(indent, ' ') << "-\n";
        render_value(os, item, indent + 2);
      } else {
        os << std::string(indent, ' ') << "- ";
        render_value(os, item, 0);
        os << "\n";
      }
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  render_value(os, doc, 0);
  return os.str();
}

std::string cache_directory() {
  const char* env = std::getenv("LOSPEC_CACHE_DIR");
  return env && *env ? env : "cache";
}

std::string cache_path(int k, harmonic::BasisSource source) {
  std::string name = "L" + std::to_string(k) + "_" +
                     (source == harmonic::BasisSource::paper ? "paper" : "generated") + ".json";
  return cache_directory() + "/" + name;
}

json matrix_to_json(const jacobi::OperatorMatrix& op) {
  json doc;
  doc["schema"] = 1;
  doc["code_version"] = code_version();
  doc["k"] = op.k;
  doc["source"] = op.source == harmonic::BasisSource::paper ? "paper" : "generated";
  doc["basis_hash"] = op.basis_hash;
  doc["dimension"] = op.dimension();
  json rows = json::array();
  for (std::size_t i = 0; i < op.entries.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < op.entries.cols(); ++j) row.push_back(op.entries.at(i, j).text());
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc;
}

jacobi::OperatorMatrix matrix_from_json(const json& doc) {
  jacobi::OperatorMatrix op;
  op.k = doc.at("k").get<int>();
  op.source = doc.at("source").get<std::string>() == "paper" ? harmonic::BasisSource::paper
                                                             : harmonic::BasisSource::generated;
  op.basis_hash = doc.at("basis_hash").get<std::uint64_t>();
  const auto& rows = doc.at("entries");
  const std::size_t n = rows.size();
  op.entries = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      op.entries.at(i, j) = FieldElem::parse(rows[i][j].get<std::string>());
  return op;
}

void save_matrix(const jacobi::OperatorMatrix& op) {
  std::filesystem::create_directories(cache_directory());
  std::ofstream out(cache_path(op.k, op.source));
  out << matrix_to_json(op).dump(1) << "\n";
}

std::optional<jacobi::OperatorMatrix> load_matrix(int k, harmonic::BasisSource source,
                                                  std::uint64_t basis_hash) {
  std::ifstream in(cache_path(k, source));
  if (!in) return std::nullopt;
  json doc;
  try {
    in >> doc;
    if (doc.at("code_version").get<std::string>() != code_version()) return std::nullopt;
    if (doc.at("basis_hash").get<std::uint64_t>() != basis_hash) return std::nullopt;
    return matrix_from_json(doc);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

jacobi::OperatorMatrix cached_matrix(const harmonic::BasisFamily& basis, bool use_cache) {
  std::uint64_t hash = fnv1a(basis.content_text());
  if (use_cache) {
    auto cached = load_matrix(basis.k, basis.source, hash);
    if (cached) return *cached;
  }
  jacobi::OperatorMatrix op = jacobi::assemble_matrix(basis);
  if (use_cache) save_matrix(op);
  return op;
}

}  // namespace lospec::report
