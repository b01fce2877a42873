#include "mgl/tables.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mgl {

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size())
    throw std::invalid_argument("row width does not match table columns");
  rows.push_back(std::move(cells));
}

std::string Table::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += '\t';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string Table::to_json() const {
  std::string out = "{\"name\":\"" + json_escape(name) + "\",\"columns\":[";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += '"' + json_escape(columns[i]) + '"';
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ',';
      out += '"' + json_escape(rows[r][i]) + '"';
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "na";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string format_u64(std::uint64_t v) { return std::to_string(v); }
std::string format_i64(std::int64_t v) { return std::to_string(v); }

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string RunManifest::to_json() const {
  std::string out = "{";
  out += "\"artifact_version\":\"" + json_escape(artifact_version) + "\",";
  out += "\"command\":\"" + json_escape(command) + "\",";
  out += "\"verb\":\"" + json_escape(verb) + "\",";
  out += "\"params\":{";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) out += ',';
    first = false;
    out += '"' + json_escape(k) + "\":\"" + json_escape(v) + '"';
  }
  out += "},";
  out += "\"budget\":" + std::to_string(budget) + ",";
  out += "\"threads\":" + std::to_string(threads) + ",";
  out += "\"wall_ms\":" + format_double(wall_ms) + ",";
  out += "\"outputs\":[";
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (i) out += ',';
    out += "{\"path\":\"" + json_escape(outputs[i].first) + "\",\"fnv1a64\":\"" +
           json_escape(outputs[i].second) + "\"}";
  }
  out += "]}\n";
  return out;
}

}  // namespace mgl
