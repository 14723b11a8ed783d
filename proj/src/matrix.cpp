#include "quandle/matrix.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace quandle {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

QuandleMatrix::QuandleMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {
  if (n > kMaxOrder) throw std::invalid_argument("matrix order exceeds 255");
}

QuandleMatrix QuandleMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  QuandleMatrix m(rows.size());
  const auto n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      int v = rows[i][j];
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw std::invalid_argument("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
      m.at(i, j) = static_cast<Element>(v - 1);
    }
  }
  return m;
}

std::vector<std::vector<int>> QuandleMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = at(i, j) + 1;
  }
  return rows;
}

std::size_t QuandleMatrixHash::operator()(const QuandleMatrix& m) const noexcept {
  std::size_t h = m.order();
  for (Element x : m.data()) h = h * 1099511628211ULL + x;
  return h;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

}  // namespace

QuandleMatrix parse_matrix(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::size_t n = 0;
  std::size_t line_no = 0;
  std::size_t last_line = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tokens = split(line);
    if (rows.empty()) n = tokens.size();
    if (rows.size() == n)
      throw ParseError(line_no, tokens.front().column, "more than " + std::to_string(n) + " rows");
    if (tokens.size() != n)
      throw ParseError(line_no, tokens.size() < n ? line.size() + 1 : tokens[n].column,
                       "ragged row: expected " + std::to_string(n) + " entries, found " +
                           std::to_string(tokens.size()));
    std::vector<int> row;
    row.reserve(n);
    for (const auto& tok : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
      if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError(line_no, tok.column, "malformed integer '" + std::string(tok.text) + "'");
      if (v < 1 || static_cast<std::size_t>(v) > n)
        throw ParseError(line_no, tok.column,
                         "entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    last_line = line_no;
  }
  if (rows.empty()) throw ParseError(line_no + 1, 1, "no matrix rows");
  if (rows.size() != n)
    throw ParseError(last_line + 1, 1,
                     "ragged matrix: expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
  if (n > kMaxOrder) throw ParseError(1, 1, "matrix order exceeds 255");
  return QuandleMatrix::from_rows(rows);
}

QuandleMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::string format_matrix(const QuandleMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(m.at(i, j) + 1);
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_line(const QuandleMatrix& m) {
  std::string out;
  for (std::size_t k = 0; k < m.data().size(); ++k) {
    if (k) out += ',';
    out += std::to_string(m.data()[k] + 1);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuandleMatrix& m) { return os << format_matrix(m); }

}  // namespace quandle
