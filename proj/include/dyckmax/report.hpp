#pragma once

// Tables of results and their CSV / JSON renderings.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace dyck {

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Significant digits for floating cells.
  int precision = 12;

  // Throws std::invalid_argument on a width mismatch.
  void add_row(std::vector<Cell> row);
  // Stable sort on the first `keys` columns.
  void sort_rows(std::size_t keys);
};

enum class Format { kCsv, kJson };

std::string format_cell(const Cell& c, int precision);

// Header line, then one line per row; '\n' endings, '.' decimal point.
std::string render_csv(const Table& t);
// {"schema_version", "kind", "columns", "rows": [{column: value}], "meta"}.
std::string render_json(const Table& t, const nlohmann::json& meta = nlohmann::json::object());
std::string render(const Table& t, Format f, const nlohmann::json& meta = nlohmann::json::object());

// Writes to a temporary sibling and renames it over `path`. Throws
// std::runtime_error naming the path on failure.
void write_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace dyck
