#include "quandle/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

#include "parallel.hpp"
#include "quandle/symmetry.hpp"

namespace quandle {

std::string to_string(Strategy s) { return s == Strategy::naive ? "naive" : "backtracking"; }

std::vector<Permutation> column_candidates(std::size_t n, int i) {
  if (i < 1 || static_cast<std::size_t>(i) > n) throw std::out_of_range("column index out of range");
  std::vector<Permutation> out;
  for_each_permutation(n, -1, [&](std::span<const Element> images) {
    if (images[i - 1] == i - 1) out.push_back(Permutation::from_images({images.begin(), images.end()}));
  });
  return out;
}

namespace {

using Column = std::vector<Element>;
using Clock = std::chrono::steady_clock;

// Shared between partitions: the placement budget and the abort flag.
struct Budget {
  std::uint64_t cap;
  std::chrono::milliseconds time_limit;
  Clock::time_point start = Clock::now();
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> aborted{false};

  // Called with the placements a worker made since its last report.
  bool charge(std::uint64_t amount) {
    auto total = spent.fetch_add(amount, std::memory_order_relaxed) + amount;
    if (total > cap) aborted = true;
    if (time_limit.count() > 0 && Clock::now() - start > time_limit) aborted = true;
    return !aborted.load(std::memory_order_relaxed);
  }
};

constexpr std::uint64_t kChargeInterval = 4096;

// Column-major working table: at(i, k) == α(i, k) == table[k * n + i].
class Table {
 public:
  explicit Table(std::size_t n) : n_(n), cells_(n * n) {}

  Element at(std::size_t i, std::size_t k) const { return cells_[k * n_ + i]; }
  void set_column(std::size_t k, const Column& col) { std::copy(col.begin(), col.end(), cells_.begin() + k * n_); }

  // Self-distributivity for every (i, j, k) with j, k, α(j,k) <= c that was
  // not already determined before column c was placed.
  bool newly_determined_ok(std::size_t c) const {
    for (std::size_t k = 0; k <= c; ++k) {
      for (std::size_t j = 0; j <= c; ++j) {
        const auto jk = at(j, k);
        if (jk > c) continue;
        if (j != c && k != c && jk != c) continue;
        for (std::size_t i = 0; i < n_; ++i) {
          if (at(at(i, j), k) != at(at(i, k), jk)) return false;
        }
      }
    }
    return true;
  }

  // Every triple, lexicographic, first failure exits.
  bool all_triples_ok() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (at(at(i, j), k) != at(at(i, k), at(j, k))) return false;
    return true;
  }

  QuandleMatrix to_matrix() const {
    QuandleMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) m.at(i, k) = at(i, k);
    return m;
  }

 private:
  std::size_t n_;
  std::vector<Element> cells_;
};

std::vector<std::vector<Column>> all_candidates(std::size_t n) {
  std::vector<std::vector<Column>> cands(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& p : column_candidates(n, static_cast<int>(c + 1)))
      cands[c].emplace_back(p.images().begin(), p.images().end());
  }
  return cands;
}

class Worker {
 public:
  Worker(const std::vector<std::vector<Column>>& cands, Budget& budget)
      : n_(cands.size()), cands_(cands), budget_(budget), table_(n_) {}

  ~Worker() { budget_.charge(pending_); }

  std::vector<Quandle> backtrack_partition(std::size_t first) {
    out_.clear();
    if (tick()) {
      table_.set_column(0, cands_[0][first]);
      if (table_.newly_determined_ok(0)) {
        if (n_ == 1) {
          out_.push_back(Quandle::from_trusted(table_.to_matrix()));
        } else {
          place(1);
        }
      }
    }
    return std::move(out_);
  }

  std::vector<Quandle> naive_partition(std::size_t first) {
    out_.clear();
    std::vector<std::size_t> idx(n_, 0);
    idx[0] = first;
    for (std::size_t c = 0; c < n_; ++c) table_.set_column(c, cands_[c][idx[c]]);
    while (true) {
      if (!tick()) break;
      if (table_.all_triples_ok()) out_.push_back(Quandle::from_trusted(table_.to_matrix()));
      // Odometer over columns 1..n-1, last column fastest.
      std::size_t c = n_;
      while (c > 1) {
        --c;
        if (++idx[c] < cands_[c].size()) break;
        idx[c] = 0;
        table_.set_column(c, cands_[c][0]);
        if (c == 1) return std::move(out_);
      }
      if (n_ == 1) break;
      table_.set_column(c, cands_[c][idx[c]]);
    }
    return std::move(out_);
  }

 private:
  bool tick() {
    if (++pending_ >= kChargeInterval) {
      bool ok = budget_.charge(pending_);
      pending_ = 0;
      return ok;
    }
    return !budget_.aborted.load(std::memory_order_relaxed);
  }

  void place(std::size_t c) {
    for (const auto& col : cands_[c]) {
      if (!tick()) return;
      table_.set_column(c, col);
      if (!table_.newly_determined_ok(c)) continue;
      if (c + 1 == n_) {
        out_.push_back(Quandle::from_trusted(table_.to_matrix()));
      } else {
        place(c + 1);
      }
    }
  }

  std::size_t n_;
  const std::vector<std::vector<Column>>& cands_;
  Budget& budget_;
  Table table_;
  std::uint64_t pending_ = 0;
  std::vector<Quandle> out_;
};

}  // namespace

std::vector<Quandle> enumerate_all(std::size_t n, const EnumerationOptions& opts) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (opts.jobs < 1) throw std::invalid_argument("worker count must be at least 1");
  if (n > 20) throw std::invalid_argument("order too large to enumerate");

  if (opts.strategy == Strategy::naive) {
    // (n-1)!^n candidates, known up front.
    const double candidates = std::pow(static_cast<double>(factorial(n - 1)), static_cast<double>(n));
    if (candidates > static_cast<double>(opts.max_placements))
      throw ResourceLimitExceeded("naive enumeration of order " + std::to_string(n) + " needs " +
                                      std::to_string(candidates) + " candidates, cap is " +
                                      std::to_string(opts.max_placements),
                                  0, 0);
  }

  const auto cands = all_candidates(n);
  Budget budget{opts.max_placements, opts.time_limit};
  std::vector<std::vector<Quandle>> parts(cands[0].size());
  detail::for_each_partition(parts.size(), opts.jobs, [&](std::size_t p) {
    Worker w(cands, budget);
    parts[p] = opts.strategy == Strategy::naive ? w.naive_partition(p) : w.backtrack_partition(p);
  });

  std::vector<Quandle> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  if (budget.aborted)
    throw ResourceLimitExceeded("enumeration of order " + std::to_string(n) + " aborted after " +
                                    std::to_string(budget.spent.load()) + " placements (cap " +
                                    std::to_string(opts.max_placements) + ")",
                                budget.spent.load(), out.size());
  return out;
}

std::vector<ClassRecord> classify(const std::vector<Quandle>& quandles, int jobs) {
  std::vector<QuandleMatrix> canon(quandles.size());
  detail::for_each_partition(quandles.size(), jobs,
                             [&](std::size_t k) { canon[k] = canonical_form(quandles[k]).matrix(); });

  std::map<QuandleMatrix, std::uint64_t> members;
  for (auto& m : canon) ++members[m];

  std::vector<ClassRecord> classes;
  classes.reserve(members.size());
  for (auto& [m, count] : members) {
    classes.push_back(ClassRecord{Quandle::from_trusted(m), 0, GroupId{}, 0, count, false, false});
  }
  detail::for_each_partition(classes.size(), jobs, [&](std::size_t k) {
    auto& rec = classes[k];
    const auto& q = rec.representative;
    auto aut = automorphism_group(q);
    rec.aut_order = aut.order();
    rec.aut_id = identify_group(aut);
    rec.np = factorial(q.order()) / rec.aut_order;
    rec.latin = is_latin(q);
    rec.connected = is_connected(q);
  });
  return classes;
}

EnumerationReport enumerate_classes(std::size_t n, const EnumerationOptions& opts) {
  const auto start = Clock::now();
  EnumerationReport report;
  report.n = n;
  report.strategy = opts.strategy;
  auto all = enumerate_all(n, opts);
  report.total_valid_matrices = all.size();
  report.classes = classify(all, opts.jobs);
  report.elapsed = Clock::now() - start;
  return report;
}

std::string format_class_summary(const ClassRecord& c) {
  std::ostringstream os;
  os << "aut=" << c.aut_order << ':' << c.aut_id.label() << " np=" << c.np << " latin=" << (c.latin ? 1 : 0)
     << " connected=" << (c.connected ? 1 : 0);
  return os.str();
}

std::string format_report_machine(const EnumerationReport& r) {
  std::string out;
  for (const auto& c : r.classes) {
    out += format_matrix_line(c.representative.matrix());
    out += '\n';
    out += format_class_summary(c);
    out += '\n';
  }
  return out;
}

std::string format_report_table(const EnumerationReport& r) {
  std::ostringstream os;
  os << "Quandles of order " << r.n << ": " << r.classes.size() << " isomorphism classes, "
     << r.total_valid_matrices << " standard-form matrices (" << to_string(r.strategy) << ", "
     << r.elapsed.count() << " s)\n";
  std::size_t index = 0;
  for (const auto& c : r.classes) {
    os << "\n#" << ++index << "  Aut(Q) = " << c.aut_id.label() << " (order " << c.aut_order
       << ")  N_p = " << c.np << "  latin = " << (c.latin ? "yes" : "no")
       << "  connected = " << (c.connected ? "yes" : "no") << '\n';
    std::istringstream rows(format_matrix(c.representative.matrix()));
    std::string line;
    while (std::getline(rows, line)) os << "    " << line << '\n';
  }
  return os.str();
}

}  // namespace quandle
