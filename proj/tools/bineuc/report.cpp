#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "bineuc/bigreal.hpp"

namespace bineuc::cli {

namespace {

std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = plain(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_json(std::ostream& os, const Report& r) {
  Json out = r.fields;
  if (!r.table_name.empty()) {
    Json table = Json::array();
    for (const auto& row : r.rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < r.columns.size(); ++c) obj[r.columns[c]] = row[c];
      table.push_back(std::move(obj));
    }
    out[r.table_name] = std::move(table);
  }
  os << out.dump(2) << '\n';
}

void render_csv(std::ostream& os, const Report& r) {
  auto line = [&](const auto& cells, auto cell) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cell(cells[i]);
    os << '\n';
  };
  if (!r.table_name.empty()) {
    line(r.columns, [](const std::string& s) { return s; });
    for (const auto& row : r.rows) line(row, csv_cell);
    return;
  }
  std::vector<std::string> keys;
  std::vector<Json> values;
  for (const auto& [k, v] : r.fields.items()) {
    keys.push_back(k);
    values.push_back(v);
  }
  line(keys, [](const std::string& s) { return s; });
  line(values, csv_cell);
}

void render_text(std::ostream& os, const Report& r, bool reproducible) {
  for (const auto& h : r.headline) os << h << '\n';
  std::size_t width = 0;
  for (const auto& [k, v] : r.fields.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : r.fields.items()) {
    os << std::left << std::setw(static_cast<int>(width)) << k << " = " << plain(v) << '\n';
  }
  if (!r.table_name.empty()) {
    std::vector<std::size_t> w(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) w[c] = r.columns[c].size();
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], plain(row[c]).size());
    }
    os << '\n' << r.table_name << ":\n";
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      os << (c ? "  " : "") << std::right << std::setw(static_cast<int>(w[c])) << r.columns[c];
    }
    os << '\n';
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << (c ? "  " : "") << std::right << std::setw(static_cast<int>(w[c])) << plain(row[c]);
      }
      os << '\n';
    }
  }
  if (!reproducible && r.elapsed >= 0.0) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << r.elapsed;
    os << "elapsed: " << t.str() << " s\n";
  }
}

}  // namespace

Json big(const BigReal& x, int digits) { return x.to_string(digits); }

void render(std::ostream& os, const Report& report, OutputFormat format, bool reproducible) {
  switch (format) {
    case OutputFormat::json:
      render_json(os, report);
      break;
    case OutputFormat::csv:
      render_csv(os, report);
      break;
    case OutputFormat::text:
      render_text(os, report, reproducible);
      break;
  }
}

}  // namespace bineuc::cli
