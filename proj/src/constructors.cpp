#include "quandle/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace quandle {

namespace {

int mod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

Permutation power(const Permutation& p, int e) {
  Permutation base = e < 0 ? p.inverse() : p;
  Permutation result = Permutation::identity(p.degree());
  for (long k = std::labs(static_cast<long>(e)); k > 0; --k) result = compose(result, base);
  return result;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int to_int(std::string_view s, std::string_view what) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

std::size_t to_order(std::string_view s) {
  int n = to_int(s, "order");
  if (n < 1) throw std::invalid_argument("order must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

std::string AlexanderPresentation::to_string() const {
  std::string poly_text;
  for (std::size_t k = poly.size(); k-- > 0;) {
    int c = mod(poly[k], modulus);
    if (c == 0) continue;
    if (!poly_text.empty()) poly_text += '+';
    if (k == 0 || c != 1) poly_text += std::to_string(c);
    if (k >= 1) poly_text += 't';
    if (k >= 2) poly_text += '^' + std::to_string(k);
  }
  return "Z_" + std::to_string(modulus) + "[t]/(" + poly_text + ")";
}

Quandle trivial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("trivial quandle needs n >= 1");
  QuandleMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = static_cast<Element>(i);
  return Quandle::from_trusted(std::move(m));
}

Quandle alexander(const AlexanderPresentation& p) {
  const int m = p.modulus;
  if (m < 2) throw std::invalid_argument("Alexander modulus must be >= 2");
  const std::size_t d = p.degree();
  if (d < 1) throw std::invalid_argument("Alexander polynomial must have degree >= 1");
  if (mod(p.poly.back(), m) != 1) throw std::invalid_argument("Alexander polynomial must be monic");

  std::size_t size = 1;
  for (std::size_t k = 0; k < d; ++k) {
    size *= static_cast<std::size_t>(m);
    if (size > kMaxOrder) throw std::invalid_argument("Alexander quandle has more than 255 elements");
  }

  // Element index <-> coefficient vector, constant coefficient most significant.
  auto decode = [&](std::size_t x) {
    std::vector<int> c(d);
    for (std::size_t k = d; k-- > 0;) {
      c[k] = static_cast<int>(x % m);
      x /= m;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    std::size_t x = 0;
    for (std::size_t k = 0; k < d; ++k) x = x * m + mod(c[k], m);
    return x;
  };
  auto times_t = [&](const std::vector<int>& c) {
    std::vector<int> r(d, 0);
    for (std::size_t k = 0; k + 1 < d; ++k) r[k + 1] = c[k];
    // t^d = -(p_0 + ... + p_{d-1} t^{d-1})
    for (std::size_t k = 0; k < d; ++k) r[k] = mod(r[k] - static_cast<long long>(c[d - 1]) * p.poly[k], m);
    return r;
  };

  std::vector<std::vector<int>> elems(size);
  std::vector<std::vector<int>> t_elems(size);
  std::vector<bool> hit(size, false);
  for (std::size_t x = 0; x < size; ++x) {
    elems[x] = decode(x);
    t_elems[x] = times_t(elems[x]);
    hit[encode(t_elems[x])] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw std::invalid_argument("t is not invertible in " + p.to_string());

  QuandleMatrix q(size);
  std::vector<int> c(d);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      for (std::size_t k = 0; k < d; ++k) c[k] = t_elems[a][k] + elems[b][k] - t_elems[b][k];
      q.at(a, b) = static_cast<Element>(encode(c));
    }
  }
  return Quandle::from_matrix(q);
}

Quandle dihedral(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral quandle needs n >= 1");
  if (n > kMaxOrder) throw std::invalid_argument("order exceeds 255");
  QuandleMatrix m(n);
  const long long nn = static_cast<long long>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = static_cast<Element>(mod(2 * static_cast<long long>(j) - static_cast<long long>(i), static_cast<int>(nn)));
  return Quandle::from_trusted(std::move(m));
}

Quandle conjugation(const std::vector<Permutation>& elements, int exponent) {
  if (elements.empty()) throw std::invalid_argument("conjugation quandle needs at least one element");
  if (elements.size() > kMaxOrder) throw std::invalid_argument("more than 255 elements");
  const auto degree = elements.front().degree();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k].degree() != degree) throw std::invalid_argument("elements have different degrees");
    if (!index.emplace(elements[k], k).second)
      throw std::invalid_argument("duplicate element " + elements[k].to_cycle_string());
  }
  const auto n = elements.size();
  QuandleMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto forward = power(elements[j], exponent);
    const auto backward = forward.inverse();
    for (std::size_t i = 0; i < n; ++i) {
      auto c = compose(compose(backward, elements[i]), forward);
      auto it = index.find(c);
      if (it == index.end())
        throw std::invalid_argument("set is not closed under conjugation: " + elements[i].to_cycle_string() +
                                    " by " + elements[j].to_cycle_string() + " gives " + c.to_cycle_string());
      m.at(i, j) = static_cast<Element>(it->second);
    }
  }
  return Quandle::from_matrix(m);
}

std::vector<Permutation> conjugacy_class(const Permutation& representative,
                                         const std::vector<Permutation>& generators) {
  std::vector<Permutation> cls{representative};
  std::unordered_set<Permutation, PermutationHash> seen{representative};
  for (std::size_t head = 0; head < cls.size(); ++head) {
    for (const auto& g : generators) {
      auto c = compose(compose(g.inverse(), cls[head]), g);
      if (seen.insert(c).second) cls.push_back(std::move(c));
    }
  }
  return cls;
}

bool looks_like_constructor(std::string_view spec) {
  for (std::string_view prefix : {"trivial:", "dihedral:", "alexander:", "conj:"}) {
    if (spec.starts_with(prefix)) return true;
  }
  return false;
}

Quandle make_quandle(std::string_view spec) {
  auto parts = split(spec, ':');
  const auto kind = parts.front();
  if (kind == "trivial" && parts.size() == 2) return trivial(to_order(parts[1]));
  if (kind == "dihedral" && parts.size() == 2) return dihedral(to_order(parts[1]));
  if (kind == "alexander" && parts.size() == 3) {
    AlexanderPresentation p;
    p.modulus = to_int(parts[1], "modulus");
    for (auto c : split(parts[2], ',')) p.poly.push_back(to_int(c, "coefficient"));
    return alexander(p);
  }
  if (kind == "conj" && (parts.size() == 3 || parts.size() == 4)) {
    const auto degree = to_order(parts[1]);
    std::vector<Permutation> elements;
    for (auto cycles : split(parts[2], ';')) elements.push_back(Permutation::from_cycles(cycles, degree));
    const int exponent = parts.size() == 4 ? to_int(parts[3], "exponent") : 1;
    return conjugation(elements, exponent);
  }
  throw std::invalid_argument("unrecognized constructor '" + std::string(spec) +
                              "'; expected trivial:<n>, dihedral:<n>, alexander:<m>:<coeffs>, "
                              "or conj:<degree>:<cycles;...>[:<exponent>]");
}

}  // namespace quandle
