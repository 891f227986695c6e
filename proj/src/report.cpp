#include "wsnpc/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "wsnpc/error.hpp"

namespace wsnpc {

using nlohmann::json;

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw ValidationError("table '" + name + "' row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

const Table* Report::find(std::string_view name) const {
  for (const Table& t : tables)
    if (t.name == name) return &t;
  return nullptr;
}

Table& Report::add(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json cell_to_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return json{{"double", format_double(*d)}};
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

Cell cell_from_json(const json& j) {
  if (j.is_number_float()) return j.get<double>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object() && j.contains("double")) {
    const std::string s = j.at("double").get<std::string>();
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    return std::nan("");
  }
  throw SchemaError("report cell must be a number or string");
}

}  // namespace

std::string format_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return quote(std::get<std::string>(cell));
}

std::string emit_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += quote(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_csv(const Report& report) {
  std::string out;
  for (std::size_t i = 0; i < report.tables.size(); ++i) {
    if (i) out += '\n';
    out += "# " + report.tables[i].name + '\n';
    out += emit_csv(report.tables[i]);
  }
  return out;
}

std::string emit_json(const Report& report) {
  json tables = json::array();
  for (const Table& t : report.tables) {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const Cell& c : row) r.push_back(cell_to_json(c));
      rows.push_back(std::move(r));
    }
    tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}});
  }
  json root = {{"scenario", report.scenario}, {"tables", std::move(tables)}};
  return root.dump(2) + '\n';
}

Report report_from_json(std::string_view text) {
  try {
    const json root = json::parse(text);
    Report r;
    r.scenario = root.at("scenario").get<std::string>();
    for (const json& t : root.at("tables")) {
      Table& table = r.add(t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>());
      for (const json& row : t.at("rows")) {
        std::vector<Cell> cells;
        for (const json& c : row) cells.push_back(cell_from_json(c));
        table.add_row(std::move(cells));
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace wsnpc
