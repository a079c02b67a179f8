#include "salem/report.hpp"

#include <cstdio>
#include <cstring>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace salem {

double round15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::invalid_argument("row width mismatch");
  rows_.push_back(std::move(row));
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(std::uint64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_real(v); }
  std::string operator()(const std::string& v) const { return csv_escape(v); }
  std::string operator()(const std::vector<std::string>&) const { return ""; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
  nlohmann::ordered_json operator()(double v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  nlohmann::ordered_json operator()(const std::vector<std::string>& v) const { return v; }
};

}  // namespace

std::string Report::to_csv() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (json_only_.count(columns_[i])) continue;
    if (!first) out += ',';
    out += csv_escape(columns_[i]);
    first = false;
  }
  out += '\n';
  for (const auto& row : rows_) {
    first = true;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (json_only_.count(columns_[i])) continue;
      if (!first) out += ',';
      out += std::visit(CsvCell{}, row[i]);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = std::visit(JsonCell{}, row[i]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace salem
