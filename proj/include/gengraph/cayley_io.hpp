#pragma once

#include <gengraph/group.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace gengraph {

// Cayley-table text format:
//   # optional comment lines
//   n
//   n rows of n whitespace-separated indices in 0..n-1
// The identity may sit at any index; it is moved to 0 on load.

inline FiniteGroup parse_cayley_text(const std::string& text, const std::string& name,
                                     Validation validation = Validation::full) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  auto fail = [&](ErrorCode code, const std::string& what, std::size_t at) -> Error {
    return Error(code, name + ":" + std::to_string(at) + ": " + what);
  };

  std::string content;
  if (!next_content_line(content)) throw fail(ErrorCode::BadParameter, "missing group order", line_no);
  long long n = 0;
  {
    std::istringstream ls(content);
    std::string extra;
    if (!(ls >> n) || (ls >> extra)) throw fail(ErrorCode::BadParameter, "expected the group order on its own line", line_no);
  }
  if (n <= 0) throw fail(ErrorCode::BadParameter, "group order must be at least 1", line_no);

  std::vector<std::vector<Element>> table(static_cast<std::size_t>(n));
  std::vector<std::size_t> row_line(static_cast<std::size_t>(n));
  for (auto& row : table) {
    if (!next_content_line(content)) throw fail(ErrorCode::BadParameter, "expected " + std::to_string(n) + " table rows", line_no);
    row_line[&row - table.data()] = line_no;
    std::istringstream ls(content);
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || v < 0 || v >= n)
        throw fail(ErrorCode::BadParameter, "entry '" + token + "' is not an index in 0.." + std::to_string(n - 1), line_no);
      row.push_back(static_cast<Element>(v));
    }
    if (row.size() != static_cast<std::size_t>(n))
      throw fail(ErrorCode::BadParameter, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n), line_no);
  }
  if (next_content_line(content)) throw fail(ErrorCode::BadParameter, "unexpected content after the table", line_no);

  try {
    return FiniteGroup::from_cayley_table(table, name, {}, validation);
  } catch (const Error& e) {
    if (!e.row()) throw;
    throw Error(e.code(), name + ":" + std::to_string(row_line[*e.row()]) + ": " + e.message(), e.row());
  }
}

/// The group is named after the file stem.
inline FiniteGroup read_cayley_file(const std::filesystem::path& path, Validation validation = Validation::full) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cayley_text(buffer.str(), path.stem().string(), validation);
}

inline std::string to_cayley_text(const FiniteGroup& g) {
  std::ostringstream os;
  os << "# " << g.name() << '\n' << g.order() << '\n';
  for (Element x = 0; x < g.order(); ++x) {
    const auto row = g.row(x);
    for (std::size_t y = 0; y < row.size(); ++y) os << (y ? " " : "") << row[y];
    os << '\n';
  }
  return os.str();
}

inline void write_cayley_file(const FiniteGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << to_cayley_text(g);
}

}  // namespace gengraph
