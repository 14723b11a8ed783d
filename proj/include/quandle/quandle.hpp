#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/group.hpp"
#include "quandle/matrix.hpp"
#include "quandle/permutation.hpp"

namespace quandle {

enum class Condition { diagonal, column, distributivity };

std::string to_string(Condition c);

/// One violated matrix condition with 1-based witness indices:
///   diagonal:       {i, j}    positions i < j with equal diagonal entries
///   column:         {j, i, k} column j, rows i < k holding the same entry
///   distributivity: {i, j, k} first failing triple, lexicographic, labels
///                             of the standardized matrix
struct Failure {
  Condition condition;
  std::vector<int> witness;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::vector<Failure> failures;

  bool valid() const noexcept { return failures.empty(); }
};

std::string describe(const Failure& f);

VerificationReport verify_quandle(const QuandleMatrix& m);

/// Reorders rows and columns together so that the diagonal reads 1..n.
/// Entries are not relabeled. Throws std::invalid_argument when the
/// diagonal is not a permutation (racks have no standard form).
QuandleMatrix standardize(const QuandleMatrix& m);

class InvalidQuandle : public std::invalid_argument {
 public:
  explicit InvalidQuandle(VerificationReport report);
  const VerificationReport& report() const noexcept { return report_; }

 private:
  VerificationReport report_;
};

/// A finite quandle held as its standard-form matrix. Every instance
/// satisfies the three matrix conditions.
class Quandle {
 public:
  /// Verifies and standardizes; throws InvalidQuandle on failure.
  static Quandle from_matrix(const QuandleMatrix& m);

  /// Skips verification. `m` must already be a standard-form quandle matrix.
  static Quandle from_trusted(QuandleMatrix m) noexcept { return Quandle(std::move(m)); }

  std::size_t order() const noexcept { return m_.order(); }
  const QuandleMatrix& matrix() const noexcept { return m_; }

  /// 0-based i▷j.
  Element operator()(Element i, Element j) const noexcept { return m_.at(i, j); }

  /// 1-based i▷j; throws std::out_of_range.
  int apply(int i, int j) const;

  friend auto operator<=>(const Quandle&, const Quandle&) = default;
  friend bool operator==(const Quandle&, const Quandle&) = default;

 private:
  explicit Quandle(QuandleMatrix m) noexcept : m_(std::move(m)) {}

  QuandleMatrix m_;
};

/// The right translation f_j: i ↦ i▷j (j is 1-based).
Permutation column_permutation(const Quandle& q, int j);

/// The quandle under a◁b = f_b^{-1}(a).
Quandle dual(const Quandle& q);

bool is_latin(const Quandle& q);

/// Group generated by the column maps and their inverses.
PermGroup inner_group(const Quandle& q);

/// Orbits of the inner group, 1-based, each block sorted, blocks ordered
/// by least element.
std::vector<std::vector<int>> orbits(const Quandle& q);

bool is_connected(const Quandle& q);

std::int64_t trace(const Quandle& q);

}  // namespace quandle
