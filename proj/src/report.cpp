#include "dyckmax/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <fmt/format.h>
#include <unistd.h>

namespace dyck {
namespace {

bool cell_less(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x < std::get<T>(b);
      },
      a);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("table " + kind + ": row has " + std::to_string(row.size()) + " cells, expected " +
                                std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

void Table::sort_rows(std::size_t keys) {
  keys = std::min(keys, columns.size());
  std::stable_sort(rows.begin(), rows.end(), [keys](const auto& a, const auto& b) {
    for (std::size_t i = 0; i < keys; ++i) {
      if (cell_less(a[i], b[i])) return true;
      if (cell_less(b[i], a[i])) return false;
    }
    return false;
  });
}

std::string format_cell(const Cell& c, int precision) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const double d = std::get<double>(c);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  return fmt::format("{:.{}g}", d, precision);
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(format_cell(row[i], t.precision));
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t, const nlohmann::json& meta) {
  // Keys keep the column order.
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = t.kind;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& c = row[i];
      if (const auto* v = std::get_if<std::int64_t>(&c)) {
        obj[t.columns[i]] = *v;
      } else if (const auto* s = std::get_if<std::string>(&c)) {
        obj[t.columns[i]] = *s;
      } else {
        const double d = std::get<double>(c);
        // Round through the printed form so the bytes depend only on it.
        if (std::isfinite(d)) {
          obj[t.columns[i]] = std::stod(format_cell(c, t.precision));
        } else {
          obj[t.columns[i]] = format_cell(c, t.precision);
        }
      }
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["meta"] = nlohmann::ordered_json::parse(meta.dump());
  return doc.dump(2) + "\n";
}

std::string render(const Table& t, Format f, const nlohmann::json& meta) {
  return f == Format::kCsv ? render_csv(t) : render_json(t, meta);
}

void write_atomic(const std::filesystem::path& path, std::string_view bytes) {
  const auto parent = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::error_code ec;
  std::filesystem::create_directories(parent, ec);
  if (ec) throw std::runtime_error("cannot create directory " + parent.string() + ": " + ec.message());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace dyck
