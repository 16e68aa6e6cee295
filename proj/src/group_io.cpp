#include "hullkit/group_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

struct Line {
  int number;  // 1-based position in the document
  std::string text;
};

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// Significant lines only: blank lines and '#' comments dropped.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trimmed(raw);
    if (t.empty() || t.front() == '#') continue;
    out.push_back({number, std::move(t)});
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw FormatError("line " + std::to_string(line) + ": " + message);
}

int parse_header_int(const Line& line, const std::string& key) {
  std::string prefix = key + ":";
  if (line.text.rfind(prefix, 0) != 0) fail(line.number, "expected '" + key + ": <value>'");
  std::string value = trimmed(line.text.substr(prefix.size()));
  if (value.empty() ||
      !std::all_of(value.begin(), value.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    fail(line.number, key + " must be a non-negative integer, got '" + value + "'");
  return std::stoi(value);
}

FiniteGroup parse_permgroup(const std::vector<Line>& lines, int order_cap) {
  if (lines.size() < 2) throw FormatError("permgroup document is missing the degree line");
  int degree = parse_header_int(lines[1], "degree");
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    try {
      gens.push_back(Perm::parse(degree, lines[i].text));
    } catch (const FormatError& e) {
      fail(lines[i].number, e.what());
    }
  }
  return FiniteGroup::from_permutations(degree, gens, order_cap);
}

FiniteGroup parse_cayley(const std::vector<Line>& lines, int order_cap) {
  if (lines.size() < 2) throw FormatError("cayley document is missing the order line");
  int n = parse_header_int(lines[1], "order");
  if (n < 1) fail(lines[1].number, "order must be at least 1");
  if (n > order_cap)
    throw OrderCapError("group too large: order " + std::to_string(n) +
                            " exceeds the order cap " + std::to_string(order_cap),
                        order_cap);
  if (lines.size() != static_cast<std::size_t>(n) + 2)
    throw FormatError("cayley table needs exactly " + std::to_string(n) + " rows, found " +
                      std::to_string(lines.size() - 2));

  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row) {
    const Line& line = lines[row + 2];
    std::istringstream in(line.text);
    std::string token;
    int col = 0;
    while (in >> token) {
      if (!std::all_of(token.begin(), token.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; }))
        fail(line.number, "table entry '" + token + "' is not an element id");
      int v = std::stoi(token);
      if (v < 0 || v >= n)
        fail(line.number, "table entry " + token + " is outside 0.." + std::to_string(n - 1));
      if (col >= n) fail(line.number, "row has more than " + std::to_string(n) + " entries");
      table.push_back(v);
      ++col;
    }
    if (col != n)
      fail(line.number,
           "row has " + std::to_string(col) + " entries, expected " + std::to_string(n));
  }

  try {
    return FiniteGroup::from_table(std::move(table));
  } catch (const FormatError& e) {
    throw FormatError("cayley table: " + std::string(e.what()));
  }
}

}  // namespace

FiniteGroup parse_group_file(const std::string& text, int order_cap) {
  std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw FormatError("empty group document");
  const Line& header = lines[0];
  if (header.text == "format: permgroup v1") return parse_permgroup(lines, order_cap);
  if (header.text == "format: cayley v1") return parse_cayley(lines, order_cap);
  fail(header.number,
       "unknown header '" + header.text +
           "' (expected 'format: permgroup v1' or 'format: cayley v1')");
}

std::string to_cayley_file(const FiniteGroup& g) {
  std::ostringstream out;
  out << "format: cayley v1\n";
  out << "order: " << g.order() << "\n";
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << '\n';
  }
  return out.str();
}

FiniteGroup load_group_file(const std::string& path, int order_cap) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open group file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_group_file(buffer.str(), order_cap);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + std::string(e.what()));
  }
}

}  // namespace hullkit
