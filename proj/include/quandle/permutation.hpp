#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quandle {

/// Internal element label. Elements are 0-based inside the library and
/// 1-based in every piece of text the library reads or writes.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxOrder = 255;

/// A bijection on {0..n-1}, stored as its image array.
///
/// Ordering is lexicographic on the image array, which is the order used
/// for witness tie-breaking and for listing group elements.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection.
  static Permutation from_images(std::vector<Element> images);

  /// 1-based image list, e.g. {2, 1, 3} for the transposition (1 2).
  static Permutation from_one_based(std::span<const int> images);

  /// Parses disjoint-cycle notation with 1-based symbols: "(1 4 3 2)",
  /// "(1,5,3)(2,4)", "()" or the compact "(153)(24)" when every symbol is a
  /// single digit. Cycles are read left to right as x -> next(x).
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const noexcept { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;

  /// Cycle lengths sorted ascending, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  /// "(1 5 3)(2 4)"; fixed points omitted; identity is "()".
  std::string to_cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Element> images) : images_(std::move(images)) {}

  std::vector<Element> images_;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
Permutation compose(const Permutation& outer, const Permutation& inner);

inline Permutation operator*(const Permutation& outer, const Permutation& inner) {
  return compose(outer, inner);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Calls `fn` with every permutation of {0..n-1} in lexicographic order of
/// image arrays whose first image is `first` (all of them if first < 0).
template <typename Fn>
void for_each_permutation(std::size_t n, int first, Fn&& fn) {
  std::vector<Element> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Element>(i);
  if (first >= 0) {
    if (static_cast<std::size_t>(first) >= n) return;
    std::rotate(images.begin(), images.begin() + first, images.begin() + first + 1);
    do {
      fn(std::span<const Element>(images));
    } while (std::next_permutation(images.begin() + 1, images.end()));
    return;
  }
  do {
    fn(std::span<const Element>(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::uint64_t factorial(std::size_t n);

}  // namespace quandle
