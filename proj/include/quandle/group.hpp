#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandle/permutation.hpp"

namespace quandle {

/// A finite permutation group, elements sorted by image array.
class PermGroup {
 public:
  PermGroup() = default;

  /// Breadth-first closure of `generators` under composition. The identity
  /// is always included.
  static PermGroup generated_by(std::size_t degree, const std::vector<Permutation>& generators);

  /// Takes an explicit element list; throws std::invalid_argument if it is
  /// not a group (missing identity, not closed, mixed degree).
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements);

  /// Skips the closure check; `elements` must be sorted and closed.
  static PermGroup from_trusted(std::size_t degree, std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  bool contains(const Permutation& p) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

bool is_closed(const std::vector<Permutation>& elements);

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> element_orders;  // element order -> count
  bool abelian = false;
  std::size_t center_order = 0;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

enum class GroupFamily {
  trivial,
  cyclic,        // Z_k
  klein4,        // Z2 ⊕ Z2
  z3_z2,         // Z3 ⊕ Z2 (≅ Z6)
  symmetric,     // Σ_k
  alternating,   // A_k
  dihedral,      // D_{2k}, parameter is the group order
  s3_z2,         // Σ3 × Z2
  frobenius20,   // Z5 ⋊ Z4 = AGL(1,5)
  unidentified,
};

struct GroupId {
  GroupFamily family = GroupFamily::unidentified;
  int parameter = 0;
  GroupFingerprint fingerprint;

  /// Short ASCII label: "1", "Z2", "Z2+Z2", "Z3+Z2", "S3", "A4", "D8",
  /// "S3xZ2", "F20", or "?(order=...)" when unidentified.
  std::string label() const;
};

GroupFingerprint fingerprint(const PermGroup& g);

/// Matches the fingerprint against the built-in table.
GroupId identify_group(const PermGroup& g);

struct KnownGroup {
  GroupFamily family;
  int parameter;
  GroupFingerprint fingerprint;
};

const std::vector<KnownGroup>& known_groups();

}  // namespace quandle
