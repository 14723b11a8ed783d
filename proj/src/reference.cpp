#include "quandle/reference.hpp"

#include <algorithm>

#include "quandle/enumeration.hpp"
#include "quandle/symmetry.hpp"

namespace quandle::reference {

namespace {

template <typename Fn>
void for_each_rho(std::size_t n, Fn&& fn) {
  for_each_permutation(n, -1, [&](std::span<const Element> images) {
    fn(Permutation::from_images({images.begin(), images.end()}));
  });
}

}  // namespace

std::vector<Permutation> isomorphisms(const Quandle& a, const Quandle& b) {
  std::vector<Permutation> out;
  if (a.order() != b.order()) return out;
  for_each_rho(a.order(), [&](Permutation rho) {
    if (permute(a, rho) == b) out.push_back(std::move(rho));
  });
  return out;
}

PermGroup automorphism_group(const Quandle& q) {
  return PermGroup::from_trusted(q.order(), reference::isomorphisms(q, q));
}

Quandle canonical_form(const Quandle& q) {
  Quandle best = q;
  for_each_rho(q.order(), [&](const Permutation& rho) {
    auto image = permute(q, rho);
    if (image.matrix() < best.matrix()) best = std::move(image);
  });
  return best;
}

bool satisfies_axioms(const QuandleMatrix& m) {
  const auto n = m.order();
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) ok = ok && m.at(i, i) == i;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && !seen[m.at(i, j)];
      seen[m.at(i, j)] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ok = ok && m.at(m.at(i, j), k) == m.at(m.at(i, k), m.at(j, k));
  return ok;
}

std::vector<Quandle> enumerate_naive(std::size_t n) {
  std::vector<std::vector<Permutation>> cands;
  for (std::size_t c = 1; c <= n; ++c) cands.push_back(column_candidates(n, static_cast<int>(c)));
  std::vector<std::size_t> idx(n, 0);
  std::vector<Quandle> out;
  while (true) {
    QuandleMatrix m(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i) m.at(i, c) = cands[c][idx[c]](static_cast<Element>(i));
    if (satisfies_axioms(m)) out.push_back(Quandle::from_trusted(std::move(m)));
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (++idx[c] < cands[c].size()) break;
      idx[c] = 0;
      if (c == 0) return out;
    }
  }
}

std::vector<Quandle> dedup_pairwise(const std::vector<Quandle>& quandles) {
  std::vector<Quandle> kept;
  for (const auto& q : quandles) {
    bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Quandle& k) {
      return !reference::isomorphisms(k, q).empty();
    });
    if (!duplicate) kept.push_back(q);
  }
  return kept;
}

}  // namespace quandle::reference
