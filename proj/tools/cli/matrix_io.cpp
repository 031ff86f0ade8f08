#include <algorithm>
#include <cctype>

#include "cli.hpp"
#include "tropvol/error.hpp"

namespace tropvol::cli {

namespace {

constexpr std::string_view kModule = "cli";

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

TropScalar parse_entry(std::string_view token, std::size_t line, std::size_t column) {
  if (iequals(token, "inf") || iequals(token, "+inf")) return TropScalar::infinity();
  try {
    return TropScalar(parse_rational(token));
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, kModule,
                "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": invalid entry '" + std::string(token) + "'");
  }
}

}  // namespace

TropMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<TropScalar>> rows;
  std::vector<std::size_t> row_lines;
  std::vector<TropScalar> current;
  std::string token;
  std::size_t line = 1;
  std::size_t column = 0;
  std::size_t token_column = 0;
  std::size_t row_line = 1;
  bool in_comment = false;

  const auto flush_token = [&] {
    if (token.empty()) return;
    if (current.empty()) row_line = line;
    current.push_back(parse_entry(token, line, token_column));
    token.clear();
  };
  const auto flush_row = [&] {
    flush_token();
    if (!current.empty()) {
      rows.push_back(std::move(current));
      row_lines.push_back(row_line);
      current.clear();
    }
  };

  for (char ch : text) {
    ++column;
    if (ch == '\n') {
      in_comment = false;
      flush_row();
      ++line;
      column = 0;
      continue;
    }
    if (in_comment) continue;
    if (ch == '#') {
      in_comment = true;
      flush_token();
    } else if (ch == ';') {
      flush_row();
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush_token();
    } else {
      if (token.empty()) token_column = column;
      token.push_back(ch);
    }
  }
  flush_row();

  if (rows.empty()) throw Error(ErrorCode::ParseError, kModule, "no matrix entries found");
  const std::size_t cols = rows.front().size();
  std::vector<TropScalar> entries;
  entries.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::RaggedRows, kModule,
                  "row " + std::to_string(r + 1) + " (line " + std::to_string(row_lines[r]) +
                      ") has " + std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
    entries.insert(entries.end(), rows[r].begin(), rows[r].end());
  }
  return TropMatrix(rows.size(), cols, std::move(entries));
}

std::string serialize_matrix(const TropMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

TropMatrix star_from_json(const nlohmann::json& report) {
  if (!report.contains("star") || !report["star"].is_array() || report["star"].empty()) {
    throw Error(ErrorCode::ParseError, kModule, "JSON input has no \"star\" matrix");
  }
  const auto& rows = report["star"];
  const std::size_t cols = rows.front().size();
  std::vector<TropScalar> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != cols) {
      throw Error(ErrorCode::RaggedRows, kModule, "JSON star row " + std::to_string(r + 1) + " is ragged");
    }
    for (const auto& entry : rows[r]) {
      if (!entry.is_string()) throw Error(ErrorCode::ParseError, kModule, "JSON star entries must be strings");
      entries.push_back(parse_entry(entry.get<std::string>(), r + 1, 0));
    }
  }
  return TropMatrix(rows.size(), cols, std::move(entries));
}

}  // namespace tropvol::cli
