#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "run_config.hpp"

namespace bineuc {
class BigReal;
}

namespace bineuc::cli {

using Json = nlohmann::ordered_json;

/// Result of one subcommand: named scalars, an optional table, and lines
/// shown first in text mode.
struct Report {
  std::vector<std::string> headline;
  Json fields = Json::object();
  std::string table_name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  /// Wall-clock seconds; shown in text mode unless reproducible.
  double elapsed = -1.0;
  /// Set when a numerical quality target was missed (exit status 1).
  std::string quality_failure;

  void set(const std::string& key, Json value) { fields[key] = std::move(value); }
  void add_row(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

/// Decimal string with `digits` significant digits.
Json big(const BigReal& x, int digits = 40);

void render(std::ostream& os, const Report& report, OutputFormat format, bool reproducible);

}  // namespace bineuc::cli
