#pragma once

// Serial brute-force versions of the parallel kernels. They follow the
// definitions directly and are kept for cross-checking and benchmarking.

#include <optional>
#include <vector>

#include "quandle/group.hpp"
#include "quandle/permutation.hpp"
#include "quandle/quandle.hpp"

namespace quandle::reference {

/// Materializes permute(q, ρ) for every ρ ∈ Σ_n.
std::vector<Permutation> isomorphisms(const Quandle& a, const Quandle& b);

PermGroup automorphism_group(const Quandle& q);

Quandle canonical_form(const Quandle& q);

/// Checks every triple without short-circuit ordering tricks.
bool satisfies_axioms(const QuandleMatrix& m);

/// Odometer over all (n-1)!^n column tuples, one thread.
std::vector<Quandle> enumerate_naive(std::size_t n);

/// Pairwise removal: keep M unless some earlier kept M' is p-equivalent.
std::vector<Quandle> dedup_pairwise(const std::vector<Quandle>& quandles);

}  // namespace quandle::reference
