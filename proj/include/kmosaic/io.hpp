#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kmosaic/errors.hpp"
#include "kmosaic/mosaic.hpp"
#include "kmosaic/pdcode.hpp"

namespace kmosaic {

enum class mosaic_format { text, json, automatic };

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

inline std::vector<long long> parse_int_row(const std::string& line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    if (line[i] == '-' || line[i] == '+') ++i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start]))))
      throw parse_error(line_no, "expected an integer, found '" + line.substr(start) + "'");
    try {
      out.push_back(std::stoll(line.substr(start, i - start)));
    } catch (const std::out_of_range&) {
      throw parse_error(line_no, "integer out of range: '" + line.substr(start, i - start) + "'");
    }
  }
  return out;
}

inline mosaic parse_mosaic_text(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t idx = 0;
  const auto next_data_line = [&]() -> int {
    while (idx < lines.size()) {
      const std::string& line = lines[idx];
      std::size_t pos = line.find_first_not_of(" \t");
      if (pos == std::string::npos || line[pos] == '#') {
        ++idx;
        continue;
      }
      return static_cast<int>(idx);
    }
    return -1;
  };

  int line_no = next_data_line();
  if (line_no < 0) throw parse_error(1, "missing dimension line");
  const std::vector<long long> header = parse_int_row(lines[idx], line_no + 1);
  if (header.size() != 1) throw parse_error(line_no + 1, "dimension line must hold one integer");
  const long long n = header[0];
  if (n < 1) throw parse_error(line_no + 1, "dimension must be at least 1");
  ++idx;

  std::vector<std::vector<int>> rows;
  for (long long r = 0; r < n; ++r) {
    line_no = next_data_line();
    if (line_no < 0)
      throw parse_error(static_cast<int>(lines.size()) + 1,
                        "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    const std::vector<long long> row = parse_int_row(lines[idx], line_no + 1);
    if (static_cast<long long>(row.size()) != n)
      throw parse_error(line_no + 1, "expected " + std::to_string(n) + " entries, found " +
                                         std::to_string(row.size()));
    rows.emplace_back(row.begin(), row.end());
    ++idx;
  }
  while (idx < lines.size()) {
    const int extra = next_data_line();
    if (extra >= 0) throw parse_error(extra + 1, "unexpected content after the tile rows");
  }
  return mosaic(rows);
}

inline mosaic parse_mosaic_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("tiles") ||
      !doc["n"].is_number_integer() || !doc["tiles"].is_array())
    throw parse_error(1, "expected an object with integer \"n\" and array \"tiles\"");
  const long long n = doc["n"].get<long long>();
  std::vector<std::vector<int>> rows;
  for (const auto& row : doc["tiles"]) {
    if (!row.is_array()) throw parse_error(1, "\"tiles\" must be an array of integer arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw parse_error(1, "tile entries must be integers");
      r.push_back(v.get<int>());
    }
    rows.push_back(std::move(r));
  }
  if (static_cast<long long>(rows.size()) != n)
    throw parse_error(1, "\"tiles\" shape does not match \"n\"");
  return mosaic(rows);
}

}  // namespace detail

// Parse a mosaic from its text or JSON serialization. Automatic detection
// treats input whose first non-space character is '{' as JSON.
inline mosaic parse_mosaic(std::string_view text, mosaic_format format = mosaic_format::automatic) {
  if (format == mosaic_format::automatic) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    format = (i < text.size() && text[i] == '{') ? mosaic_format::json : mosaic_format::text;
  }
  return format == mosaic_format::json ? detail::parse_mosaic_json(text)
                                       : detail::parse_mosaic_text(text);
}

// Canonical serialization; parse_mosaic(write_mosaic(m)) == m in both
// formats.
inline std::string write_mosaic(const mosaic& m, mosaic_format format = mosaic_format::text) {
  const int n = m.dimension();
  if (format == mosaic_format::json) {
    nlohmann::json doc;
    doc["n"] = n;
    auto rows = nlohmann::json::array();
    for (int r = 0; r < n; ++r) {
      auto row = nlohmann::json::array();
      for (int c = 0; c < n; ++c) row.push_back(int(m.at(r, c)));
      rows.push_back(std::move(row));
    }
    doc["tiles"] = std::move(rows);
    return doc.dump() + "\n";
  }
  std::string out = std::to_string(n) + "\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out += ' ';
      out += std::to_string(int(m.at(r, c)));
    }
    out += '\n';
  }
  return out;
}

// Planar diagram serialization: {"pd": [[a,b,c,d], ...],
// "skipped_components": [...]}.
inline std::string write_pd_json(const pd_code& code) {
  nlohmann::json doc;
  auto tuples = nlohmann::json::array();
  for (const auto& t : code.tuples) tuples.push_back({t[0], t[1], t[2], t[3]});
  doc["pd"] = std::move(tuples);
  doc["skipped_components"] = code.skipped_components;
  return doc.dump() + "\n";
}

}  // namespace kmosaic
