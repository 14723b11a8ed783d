#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/permutation.hpp"

namespace quandle {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An n×n operation table with entries in {0..n-1}; entry (i, j) is i▷j.
/// Nothing beyond the entry range is guaranteed; see Quandle for the
/// validated form.
class QuandleMatrix {
 public:
  QuandleMatrix() = default;
  explicit QuandleMatrix(std::size_t n);

  /// 1-based rows. Throws std::invalid_argument on non-square input or
  /// entries outside {1..n}.
  static QuandleMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t order() const noexcept { return n_; }

  Element at(std::size_t row, std::size_t col) const noexcept { return entries_[row * n_ + col]; }
  Element& at(std::size_t row, std::size_t col) noexcept { return entries_[row * n_ + col]; }

  /// Row-major entries.
  std::span<const Element> data() const noexcept { return entries_; }

  std::vector<std::vector<int>> to_rows() const;

  friend auto operator<=>(const QuandleMatrix&, const QuandleMatrix&) = default;
  friend bool operator==(const QuandleMatrix&, const QuandleMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> entries_;
};

struct QuandleMatrixHash {
  std::size_t operator()(const QuandleMatrix& m) const noexcept;
};

/// Reads the text format: '#' lines are comments, then n lines of n
/// integers. The matrix is not checked against the quandle conditions.
QuandleMatrix parse_matrix(std::istream& in);
QuandleMatrix parse_matrix(std::string_view text);

/// Text format, one row per line, single spaces, trailing newline.
std::string format_matrix(const QuandleMatrix& m);

/// Row-major, comma separated: trivial(2) is "1,1,2,2".
std::string format_matrix_line(const QuandleMatrix& m);

std::ostream& operator<<(std::ostream& os, const QuandleMatrix& m);

}  // namespace quandle
