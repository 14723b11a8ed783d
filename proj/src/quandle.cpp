#include "quandle/quandle.hpp"

#include <algorithm>
#include <numeric>

namespace quandle {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::diagonal: return "diagonal";
    case Condition::column: return "column";
    case Condition::distributivity: return "distributivity";
  }
  return "?";
}

std::string describe(const Failure& f) {
  const auto& w = f.witness;
  switch (f.condition) {
    case Condition::diagonal:
      return "diagonal: positions " + std::to_string(w[0]) + " and " + std::to_string(w[1]) +
             " carry the same diagonal entry";
    case Condition::column:
      return "column: column " + std::to_string(w[0]) + " repeats an entry in rows " + std::to_string(w[1]) +
             " and " + std::to_string(w[2]);
    case Condition::distributivity:
      return "distributivity: fails at (i,j,k) = (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
             std::to_string(w[2]) + ")";
  }
  return "?";
}

namespace {

// Position holding each diagonal label; empty when the diagonal is not a
// permutation.
std::vector<std::size_t> diagonal_positions(const QuandleMatrix& m) {
  const auto n = m.order();
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto d = m.at(i, i);
    if (pos[d] != n) return {};
    pos[d] = i;
  }
  return pos;
}

}  // namespace

VerificationReport verify_quandle(const QuandleMatrix& m) {
  VerificationReport report;
  const auto n = m.order();

  bool diagonal_ok = true;
  for (std::size_t i = 0; i < n && diagonal_ok; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.at(i, i) == m.at(j, j)) {
        report.failures.push_back({Condition::diagonal, {int(i + 1), int(j + 1)}});
        diagonal_ok = false;
        break;
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> row_of(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto v = m.at(i, j);
      if (row_of[v] != n) {
        report.failures.push_back({Condition::column, {int(j + 1), int(row_of[v] + 1), int(i + 1)}});
        break;
      }
      row_of[v] = i;
    }
  }

  if (!diagonal_ok) return report;

  const QuandleMatrix s = standardize(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (s.at(s.at(i, j), k) != s.at(s.at(i, k), s.at(j, k))) {
          report.failures.push_back({Condition::distributivity, {int(i + 1), int(j + 1), int(k + 1)}});
          return report;
        }
      }
    }
  }
  return report;
}

QuandleMatrix standardize(const QuandleMatrix& m) {
  auto pos = diagonal_positions(m);
  if (pos.empty() && m.order() > 0)
    throw std::invalid_argument("diagonal is not a permutation; no standard form exists");
  const auto n = m.order();
  QuandleMatrix s(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) s.at(x, y) = m.at(pos[x], pos[y]);
  }
  return s;
}

InvalidQuandle::InvalidQuandle(VerificationReport report)
    : std::invalid_argument("not a quandle matrix: " + describe(report.failures.front())),
      report_(std::move(report)) {}

Quandle Quandle::from_matrix(const QuandleMatrix& m) {
  auto report = verify_quandle(m);
  if (!report.valid()) throw InvalidQuandle(std::move(report));
  return Quandle(standardize(m));
}

int Quandle::apply(int i, int j) const {
  const int n = static_cast<int>(order());
  if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("element index out of range");
  return m_.at(i - 1, j - 1) + 1;
}

Permutation column_permutation(const Quandle& q, int j) {
  const int n = static_cast<int>(q.order());
  if (j < 1 || j > n) throw std::out_of_range("column index out of range");
  std::vector<Element> images(q.order());
  for (std::size_t i = 0; i < q.order(); ++i) images[i] = q(static_cast<Element>(i), static_cast<Element>(j - 1));
  return Permutation::from_images(std::move(images));
}

Quandle dual(const Quandle& q) {
  const auto n = q.order();
  QuandleMatrix d(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) d.at(q(Element(i), Element(j)), j) = static_cast<Element>(i);
  }
  return Quandle::from_trusted(std::move(d));
}

bool is_latin(const Quandle& q) {
  const auto n = q.order();
  std::vector<bool> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t j = 0; j < n; ++j) {
      auto v = q(Element(i), Element(j));
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

PermGroup inner_group(const Quandle& q) {
  std::vector<Permutation> generators;
  for (std::size_t j = 1; j <= q.order(); ++j) {
    auto f = column_permutation(q, static_cast<int>(j));
    generators.push_back(f.inverse());
    generators.push_back(std::move(f));
  }
  return PermGroup::generated_by(q.order(), generators);
}

std::vector<std::vector<int>> orbits(const Quandle& q) {
  const auto n = q.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Each generator f_j links i with i▷j; inverses give the same blocks.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i);
      auto b = find(q(Element(i), Element(j)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> block_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (block_of_root[r] == n) {
      block_of_root[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].push_back(static_cast<int>(i + 1));
  }
  return blocks;
}

bool is_connected(const Quandle& q) { return orbits(q).size() <= 1; }

std::int64_t trace(const Quandle& q) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < q.order(); ++i) t += q(Element(i), Element(i)) + 1;
  return t;
}

}  // namespace quandle
