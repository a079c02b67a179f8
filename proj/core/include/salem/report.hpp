#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace salem {

/// Rounds to 15 significant decimal digits; report values are stored
/// pre-rounded so CSV/JSON serialization round-trips exactly.
double round15(double v);

/// Formats exactly like the reports do (%.15g).
std::string format_real(double v);

/// Small column-oriented table for deterministic CSV/JSON output.
/// Cells: monostate renders empty/null; lists render only in JSON.
class Report {
 public:
  using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string,
                            std::vector<std::string>>;

  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);
  /// Columns listed here are omitted from CSV (JSON keeps them).
  void mark_json_only(const std::string& column) { json_only_.insert(column); }

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string to_csv() const;
  std::string to_json() const;  // pretty-printed array of objects

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::set<std::string> json_only_;
};

}  // namespace salem
