#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wsnpc {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  bool operator==(const Table&) const = default;
};

struct Report {
  std::string scenario;
  std::vector<Table> tables;

  const Table* find(std::string_view name) const;
  Table& add(std::string name, std::vector<std::string> columns);
  bool operator==(const Report&) const = default;
};

/// Doubles are written with 12 significant digits; strings with commas,
/// quotes or newlines are quoted.
std::string format_cell(const Cell& cell);
std::string emit_csv(const Table& table);
/// All tables, each preceded by a "# <name>" line and separated by a blank line.
std::string emit_csv(const Report& report);
std::string emit_json(const Report& report);
/// Inverse of emit_json.
Report report_from_json(std::string_view text);

}  // namespace wsnpc
