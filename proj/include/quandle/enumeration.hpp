#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/group.hpp"
#include "quandle/permutation.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

enum class Strategy { naive, backtracking };

std::string to_string(Strategy s);

struct EnumerationOptions {
  Strategy strategy = Strategy::backtracking;
  int jobs = 1;
  /// Naive: full candidate matrices. Backtracking: column placements.
  std::uint64_t max_placements = 1'000'000'000;
  /// Zero disables the wall-clock cap.
  std::chrono::milliseconds time_limit{0};
};

class ResourceLimitExceeded : public std::runtime_error {
 public:
  ResourceLimitExceeded(const std::string& what, std::uint64_t placements, std::size_t found)
      : std::runtime_error(what), placements_(placements), found_(found) {}

  std::uint64_t placements() const noexcept { return placements_; }
  std::size_t found() const noexcept { return found_; }

 private:
  std::uint64_t placements_;
  std::size_t found_;
};

/// P_{n,i}: the (n-1)! permutations of {1..n} with value i at position i,
/// in lexicographic order. Each column is returned as a Permutation.
std::vector<Permutation> column_candidates(std::size_t n, int i);

/// Every standard-form quandle matrix of order n, ordered by the tuple of
/// column-candidate indices. Both strategies yield the same sequence.
std::vector<Quandle> enumerate_all(std::size_t n, const EnumerationOptions& opts = {});

struct ClassRecord {
  Quandle representative;  // canonical form
  std::uint64_t aut_order = 0;
  GroupId aut_id;
  std::uint64_t np = 0;
  std::uint64_t members = 0;  // matrices of this class seen during enumeration
  bool latin = false;
  bool connected = false;
};

struct EnumerationReport {
  std::size_t n = 0;
  std::uint64_t total_valid_matrices = 0;
  std::vector<ClassRecord> classes;  // sorted by representative
  std::chrono::duration<double> elapsed{};
  Strategy strategy = Strategy::backtracking;
};

/// Groups a list of standard-form quandles of one order into p-equivalence
/// classes by canonical form.
std::vector<ClassRecord> classify(const std::vector<Quandle>& quandles, int jobs = 1);

EnumerationReport enumerate_classes(std::size_t n, const EnumerationOptions& opts = {});

/// "aut=<order>:<label> np=<k> latin=<0|1> connected=<0|1>"
std::string format_class_summary(const ClassRecord& c);

/// Canonical matrix line followed by the summary line, per class.
std::string format_report_machine(const EnumerationReport& r);

/// Human-readable table: matrix, Aut(Q), N_p per class.
std::string format_report_table(const EnumerationReport& r);

}  // namespace quandle
