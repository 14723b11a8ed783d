#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/permutation.hpp"
#include "quandle/quandle.hpp"

namespace quandle {

/// Z_m[t]/(poly) with poly monic, coefficients constant term first.
struct AlexanderPresentation {
  int modulus = 2;
  std::vector<int> poly;

  std::size_t degree() const noexcept { return poly.empty() ? 0 : poly.size() - 1; }
  std::string to_string() const;  // "Z_2[t]/(t^2+t+1)"
};

/// x▷y = x for all x.
Quandle trivial(std::size_t n);

/// a▷b = ta + (1-t)b on Z_m[t]/(poly). Ring elements are numbered by
/// their coefficient vectors read as base-m digits, constant coefficient
/// most significant, so 0 is element 1.
///
/// Throws std::invalid_argument if poly is not monic of degree ≥ 1, if the
/// ring is too large, or if t is not a unit.
Quandle alexander(const AlexanderPresentation& p);

/// a▷b = 2b - a mod n.
Quandle dihedral(std::size_t n);

/// a▷b = b^{-e} a b^{e} over `elements` in the given order, with the
/// product a*b = a∘b. Throws std::invalid_argument on duplicates, mixed
/// degrees, or when some product leaves the set (the message names the
/// escaping pair).
Quandle conjugation(const std::vector<Permutation>& elements, int exponent = 1);

/// Conjugacy class of `representative` in the group generated by
/// `generators`, listed in breadth-first discovery order.
std::vector<Permutation> conjugacy_class(const Permutation& representative,
                                         const std::vector<Permutation>& generators);

/// Builds a quandle from the textual constructor syntax:
///   trivial:<n>
///   dihedral:<n>
///   alexander:<m>:<c0,c1,...,1>
///   conj:<degree>:<cycles;cycles;...>[:<exponent>]
/// Throws std::invalid_argument on malformed specs.
Quandle make_quandle(std::string_view spec);

bool looks_like_constructor(std::string_view spec);

}  // namespace quandle
