#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quandle/group.hpp"
#include "quandle/permutation.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

/// ρ(M): the standard-form matrix M' with M'[ρ(i)][ρ(j)] = ρ(M[i][j]).
/// Throws std::invalid_argument on degree mismatch.
Quandle permute(const Quandle& q, const Permutation& rho);

/// Lexicographically least ρ with permute(a, ρ) == b, if any.
///
/// The Σ_n scans below (are_isomorphic, isomorphisms, automorphism_group,
/// canonical_form) partition the search on ρ(1) and run the partitions on
/// `jobs` OpenMP threads; results do not depend on `jobs`.
std::optional<Permutation> are_isomorphic(const Quandle& a, const Quandle& b, int jobs = 1);

/// Every ρ with permute(a, ρ) == b, sorted by image array.
std::vector<Permutation> isomorphisms(const Quandle& a, const Quandle& b, int jobs = 1);

PermGroup automorphism_group(const Quandle& q, int jobs = 1);

/// n!/|Aut(Q)|.
std::uint64_t np_count(const Quandle& q, int jobs = 1);

/// Number of distinct matrices in {permute(q, ρ) : ρ ∈ Σ_n}, counted
/// explicitly.
std::uint64_t np_count_by_orbit(const Quandle& q);

/// Row-major lexicographically least member of the p-equivalence class.
Quandle canonical_form(const Quandle& q, int jobs = 1);

/// Isomorphism invariants used to reject pairs before searching Σ_n.
struct QuickInvariants {
  std::vector<std::vector<std::size_t>> column_cycle_types;  // sorted
  bool latin = false;
  std::vector<std::size_t> orbit_sizes;                       // sorted

  friend bool operator==(const QuickInvariants&, const QuickInvariants&) = default;
};

QuickInvariants quick_invariants(const Quandle& q);

/// Exact determinant of the entry matrix (1-based entries).
/// Throws std::overflow_error if it does not fit in 64 bits.
std::int64_t determinant(const QuandleMatrix& m);

}  // namespace quandle
