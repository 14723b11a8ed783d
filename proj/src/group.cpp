#include "quandle/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace quandle {

namespace {

using PermSet = std::unordered_set<Permutation, PermutationHash>;

PermSet closure(std::size_t degree, const std::vector<Permutation>& generators) {
  PermSet seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    auto g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : generators) {
      auto h = compose(s, g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return seen;
}

// Greedy generating set: each new generator lies outside the subgroup
// generated by the previous ones, so there are at most log2|G| of them.
std::vector<Permutation> small_generating_set(const PermGroup& g) {
  std::vector<Permutation> gens;
  PermSet span = closure(g.degree(), gens);
  for (const auto& x : g.elements()) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g.degree(), gens);
    if (span.size() == g.order()) break;
  }
  return gens;
}

}  // namespace

PermGroup PermGroup::generated_by(std::size_t degree, const std::vector<Permutation>& generators) {
  for (const auto& s : generators) {
    if (s.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  }
  auto set = closure(degree, generators);
  std::vector<Permutation> elements(set.begin(), set.end());
  std::sort(elements.begin(), elements.end());
  return from_trusted(degree, std::move(elements));
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Permutation> elements) {
  for (const auto& e : elements) {
    if (e.degree() != degree) throw std::invalid_argument("group element degree mismatch");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!std::binary_search(elements.begin(), elements.end(), Permutation::identity(degree)))
    throw std::invalid_argument("group is missing the identity");
  if (!is_closed(elements)) throw std::invalid_argument("element list is not closed under composition");
  return from_trusted(degree, std::move(elements));
}

PermGroup PermGroup::from_trusted(std::size_t degree, std::vector<Permutation> elements) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool is_closed(const std::vector<Permutation>& elements) {
  PermSet set(elements.begin(), elements.end());
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (!set.contains(compose(a, b))) return false;
    }
  }
  return true;
}

GroupFingerprint fingerprint(const PermGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  for (const auto& x : g.elements()) ++f.element_orders[x.order()];
  auto gens = small_generating_set(g);
  for (const auto& x : g.elements()) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](const Permutation& s) { return compose(s, x) == compose(x, s); });
    if (central) ++f.center_order;
  }
  f.abelian = f.center_order == f.order;
  return f;
}

const std::vector<KnownGroup>& known_groups() {
  using F = GroupFamily;
  static const std::vector<KnownGroup> table = {
      {F::trivial, 1, {1, {{1, 1}}, true, 1}},
      {F::cyclic, 2, {2, {{1, 1}, {2, 1}}, true, 2}},
      {F::cyclic, 3, {3, {{1, 1}, {3, 2}}, true, 3}},
      {F::cyclic, 4, {4, {{1, 1}, {2, 1}, {4, 2}}, true, 4}},
      {F::klein4, 4, {4, {{1, 1}, {2, 3}}, true, 4}},
      {F::cyclic, 5, {5, {{1, 1}, {5, 4}}, true, 5}},
      {F::z3_z2, 6, {6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, true, 6}},
      {F::symmetric, 3, {6, {{1, 1}, {2, 3}, {3, 2}}, false, 1}},
      {F::dihedral, 8, {8, {{1, 1}, {2, 5}, {4, 2}}, false, 2}},
      {F::alternating, 4, {12, {{1, 1}, {2, 3}, {3, 8}}, false, 1}},
      {F::s3_z2, 12, {12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, false, 2}},
      {F::dihedral, 20, {20, {{1, 1}, {2, 11}, {5, 4}, {10, 4}}, false, 2}},
      {F::frobenius20, 20, {20, {{1, 1}, {2, 5}, {4, 10}, {5, 4}}, false, 1}},
      {F::symmetric, 4, {24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, false, 1}},
      {F::symmetric, 5, {120, {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}}, false, 1}},
  };
  return table;
}

GroupId identify_group(const PermGroup& g) {
  GroupId id;
  id.fingerprint = fingerprint(g);
  for (const auto& k : known_groups()) {
    if (k.fingerprint == id.fingerprint) {
      id.family = k.family;
      id.parameter = k.parameter;
      return id;
    }
  }
  return id;
}

std::string GroupId::label() const {
  const auto p = std::to_string(parameter);
  switch (family) {
    case GroupFamily::trivial: return "1";
    case GroupFamily::cyclic: return "Z" + p;
    case GroupFamily::klein4: return "Z2+Z2";
    case GroupFamily::z3_z2: return "Z3+Z2";
    case GroupFamily::symmetric: return "S" + p;
    case GroupFamily::alternating: return "A" + p;
    case GroupFamily::dihedral: return "D" + p;
    case GroupFamily::s3_z2: return "S3xZ2";
    case GroupFamily::frobenius20: return "F20";
    case GroupFamily::unidentified: break;
  }
  return "?(order=" + std::to_string(fingerprint.order) + ")";
}

}  // namespace quandle
