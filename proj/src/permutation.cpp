#include "quandle/permutation.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace quandle {

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxOrder) throw std::invalid_argument("permutation degree exceeds 255");
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Element> images) {
  if (images.size() > kMaxOrder) throw std::invalid_argument("permutation degree exceeds 255");
  std::vector<bool> seen(images.size(), false);
  for (Element x : images) {
    if (x >= images.size() || seen[x]) throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<Element> zero_based;
  zero_based.reserve(images.size());
  for (int x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > images.size())
      throw std::invalid_argument("image " + std::to_string(x) + " out of range");
    zero_based.push_back(static_cast<Element>(x - 1));
  }
  return from_images(std::move(zero_based));
}

namespace {

std::vector<int> parse_cycle_body(std::string_view body, std::size_t degree) {
  std::vector<int> symbols;
  bool has_separator = false;
  for (char c : body) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') has_separator = true;
  }
  if (!has_separator) {
    // Compact form such as "153": one digit per symbol.
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad character in cycle: " + std::string(body));
      symbols.push_back(c - '0');
    }
    if (symbols.size() > 1 && degree > 9)
      throw std::invalid_argument("compact cycle notation needs degree <= 9; separate symbols with spaces");
    return symbols;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad symbol in cycle: " + token);
    }
    symbols.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : body) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return symbols;
}

}  // namespace

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) return p;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle: " + std::string(text));
    auto symbols = parse_cycle_body(text.substr(pos + 1, close - pos - 1), degree);
    for (int s : symbols) {
      if (s < 1 || static_cast<std::size_t>(s) > degree)
        throw std::invalid_argument("cycle symbol " + std::to_string(s) + " out of range");
      if (used[s - 1]) throw std::invalid_argument("cycles are not disjoint: " + std::string(text));
      used[s - 1] = true;
    }
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      auto from = symbols[k] - 1;
      auto to = symbols[(k + 1) % symbols.size()] - 1;
      p.images_[from] = static_cast<Element>(to);
    }
    pos = close + 1;
    skip_space();
  }
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Element>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (auto len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      if (x != i) os << ' ';
      os << x + 1;
      seen[x] = true;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.degree() != inner.degree()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<Element> images(inner.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = outer(inner(static_cast<Element>(i)));
  return Permutation::from_images(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.degree();
  for (Element x : p.images()) h = h * 131 + x;
  return h;
}

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw std::overflow_error("factorial exceeds 64 bits");
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace quandle
