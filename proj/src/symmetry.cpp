#include "quandle/symmetry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "parallel.hpp"

namespace quandle {

Quandle permute(const Quandle& q, const Permutation& rho) {
  const auto n = q.order();
  if (rho.degree() != n) throw std::invalid_argument("permutation degree does not match quandle order");
  QuandleMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.at(rho(Element(i)), rho(Element(j))) = rho(q(Element(i), Element(j)));
    }
  }
  return Quandle::from_trusted(std::move(out));
}

namespace {

// Depth-first search for ρ with permute(a, ρ) == b, assigning ρ(0), ρ(1), ...
// in increasing image order so witnesses come out lexicographically sorted.
// After ρ(k) is chosen, every pair (i, j) whose constraint
// b[ρ(i)][ρ(j)] == ρ(a[i][j]) has just become fully determined is checked.
class IsoSearch {
 public:
  IsoSearch(const QuandleMatrix& a, const QuandleMatrix& b, bool find_all)
      : n_(a.order()), a_(a), b_(b), find_all_(find_all), rho_(n_), used_(n_, false) {}

  std::vector<Permutation> run(Element first) {
    found_.clear();
    assign(0, first);
    return std::move(found_);
  }

 private:
  bool consistent(std::size_t k) const {
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j <= k; ++j) {
        const auto v = a_.at(i, j);
        if (v > k) continue;
        if (i != k && j != k && v != k) continue;
        if (b_.at(rho_[i], rho_[j]) != rho_[v]) return false;
      }
    }
    return true;
  }

  // Returns true when the search should stop.
  bool assign(std::size_t k, Element image) {
    rho_[k] = image;
    used_[image] = true;
    bool stop = false;
    if (consistent(k)) {
      if (k + 1 == n_) {
        found_.push_back(Permutation::from_images(rho_));
        stop = !find_all_;
      } else {
        for (std::size_t v = 0; v < n_ && !stop; ++v) {
          if (!used_[v]) stop = assign(k + 1, static_cast<Element>(v));
        }
      }
    }
    used_[image] = false;
    return stop;
  }

  std::size_t n_;
  const QuandleMatrix& a_;
  const QuandleMatrix& b_;
  bool find_all_;
  std::vector<Element> rho_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

std::vector<Permutation> search(const Quandle& a, const Quandle& b, bool find_all, int jobs) {
  const auto n = a.order();
  if (n == 0) return {};
  std::vector<std::vector<Permutation>> parts(n);
  detail::for_each_partition(n, jobs, [&](std::size_t first) {
    IsoSearch s(a.matrix(), b.matrix(), find_all);
    parts[first] = s.run(static_cast<Element>(first));
  });
  std::vector<Permutation> out;
  for (auto& p : parts) {
    for (auto& x : p) {
      out.push_back(std::move(x));
      if (!find_all) return out;
    }
  }
  return out;
}

}  // namespace

QuickInvariants quick_invariants(const Quandle& q) {
  QuickInvariants inv;
  for (std::size_t j = 1; j <= q.order(); ++j)
    inv.column_cycle_types.push_back(column_permutation(q, static_cast<int>(j)).cycle_type());
  std::sort(inv.column_cycle_types.begin(), inv.column_cycle_types.end());
  inv.latin = is_latin(q);
  for (const auto& block : orbits(q)) inv.orbit_sizes.push_back(block.size());
  std::sort(inv.orbit_sizes.begin(), inv.orbit_sizes.end());
  return inv;
}

std::optional<Permutation> are_isomorphic(const Quandle& a, const Quandle& b, int jobs) {
  if (a.order() != b.order()) return std::nullopt;
  if (a == b && a.order() > 0) {
    // The identity is the least image array of all.
    return Permutation::identity(a.order());
  }
  if (quick_invariants(a) != quick_invariants(b)) return std::nullopt;
  auto found = search(a, b, false, jobs);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<Permutation> isomorphisms(const Quandle& a, const Quandle& b, int jobs) {
  if (a.order() != b.order()) return {};
  if (quick_invariants(a) != quick_invariants(b)) return {};
  return search(a, b, true, jobs);
}

PermGroup automorphism_group(const Quandle& q, int jobs) {
  return PermGroup::from_trusted(q.order(), search(q, q, true, jobs));
}

std::uint64_t np_count(const Quandle& q, int jobs) {
  return factorial(q.order()) / automorphism_group(q, jobs).order();
}

std::uint64_t np_count_by_orbit(const Quandle& q) {
  std::unordered_set<QuandleMatrix, QuandleMatrixHash> seen;
  for_each_permutation(q.order(), -1, [&](std::span<const Element> images) {
    seen.insert(permute(q, Permutation::from_images({images.begin(), images.end()})).matrix());
  });
  return seen.size();
}

namespace {

// Lex-least permute(m, ρ) over the ρ with ρ(0) == first. Entries of a
// candidate are produced row-major as ρ(m[σr][σc]) with σ = ρ^{-1} and
// compared against the incumbent as they are produced.
QuandleMatrix least_image(const QuandleMatrix& m, Element first) {
  const auto n = m.order();
  QuandleMatrix best;
  std::vector<Element> candidate(n * n);
  std::vector<Element> sigma(n);
  bool have_best = false;
  for_each_permutation(n, first, [&](std::span<const Element> rho) {
    for (std::size_t i = 0; i < n; ++i) sigma[rho[i]] = static_cast<Element>(i);
    if (!have_best) {
      QuandleMatrix init(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) init.at(r, c) = rho[m.at(sigma[r], sigma[c])];
      best = std::move(init);
      have_best = true;
      return;
    }
    bool smaller = false;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const Element v = rho[m.at(sigma[r], sigma[c])];
        if (smaller) {
          candidate[r * n + c] = v;
          continue;
        }
        const Element w = best.at(r, c);
        if (v > w) return;
        candidate[r * n + c] = v;
        if (v < w) smaller = true;
      }
    }
    if (smaller) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) best.at(r, c) = candidate[r * n + c];
    }
  });
  return best;
}

}  // namespace

Quandle canonical_form(const Quandle& q, int jobs) {
  const auto n = q.order();
  if (n <= 1) return q;
  std::vector<QuandleMatrix> parts(n);
  detail::for_each_partition(n, jobs, [&](std::size_t first) {
    parts[first] = least_image(q.matrix(), static_cast<Element>(first));
  });
  return Quandle::from_trusted(*std::min_element(parts.begin(), parts.end()));
}

std::int64_t determinant(const QuandleMatrix& m) {
  const auto n = m.order();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = m.data()[i] + 1;
  auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * n + c]; };
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  const __int128 det = sign * at(n - 1, n - 1);
  if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant does not fit in 64 bits");
  return static_cast<std::int64_t>(det);
}

}  // namespace quandle
