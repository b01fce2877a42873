// TSV/JSON table emission with stable formatting (tab separator, '.'
// decimal point, 6 significant digits) and the run manifest that records
// parameters, seeds, budgets and per-table digests.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mgl {

// Cells are preformatted strings so TSV and JSON mirror each other byte
// for byte.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  std::string to_tsv() const;
  std::string to_json() const;
};

std::string format_double(double v);   // %.6g, "na" for NaN
std::string format_u64(std::uint64_t v);
std::string format_i64(std::int64_t v);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

struct RunManifest {
  std::string artifact_version;
  std::string command;
  std::string verb;
  std::map<std::string, std::string> params;
  std::uint64_t budget = 0;
  int threads = 1;
  double wall_ms = 0;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, digest

  std::string to_json() const;
};

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace mgl
