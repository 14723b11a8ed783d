// Acceptance suite: one PASS/FAIL line per criterion, details underneath.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "known_tables.hpp"
#include "quandle/constructors.hpp"
#include "quandle/enumeration.hpp"
#include "quandle/symmetry.hpp"

using namespace quandle;
using testdata::quandle_of;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void expect(bool ok, const std::string& detail) {
    if (!ok) {
      passed_ = false;
      details_.push_back(detail);
    }
  }

  bool report() const {
    std::cout << (passed_ ? "PASS" : "FAIL") << "  [" << id_ << "] " << title_ << '\n';
    for (const auto& d : details_) std::cout << "        " << d << '\n';
    return passed_;
  }

 private:
  int id_;
  std::string title_;
  bool passed_ = true;
  std::vector<std::string> details_;
};

EnumerationOptions options(Strategy s, int jobs = 1) {
  EnumerationOptions o;
  o.strategy = s;
  o.jobs = jobs;
  return o;
}

template <typename Fn>
double seconds(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string write_temp(const std::string& name, const std::vector<std::vector<int>>& rows) {
  auto dir = std::filesystem::temp_directory_path() / "quandle_acceptance";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << format_matrix(QuandleMatrix::from_rows(rows));
  return path.string();
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::istringstream in;
  std::ostringstream out, err;
  int c = cli::run(args, in, out, err);
  if (code) *code = c;
  return out.str();
}

bool isomorphic(const Quandle& a, const Quandle& b) { return are_isomorphic(a, b).has_value(); }

}  // namespace

int main() {
  bool all_passed = true;

  // Shared runs.
  std::map<std::size_t, EnumerationReport> backtracking;
  std::map<std::size_t, double> backtracking_seconds;
  for (std::size_t n = 1; n <= 5; ++n) {
    backtracking_seconds[n] = seconds([&] { backtracking[n] = enumerate_classes(n, options(Strategy::backtracking)); });
  }
  std::map<std::size_t, EnumerationReport> naive;
  std::map<std::size_t, double> naive_seconds;
  for (std::size_t n = 1; n <= 5; ++n) {
    naive_seconds[n] = seconds([&] { naive[n] = enumerate_classes(n, options(Strategy::naive)); });
  }

  {
    Criterion c(1, "class counts 1, 1, 3, 7, 22 for n = 1..5 within the runtime budget");
    const std::size_t expected[] = {0, 1, 1, 3, 7, 22};
    for (std::size_t n = 1; n <= 5; ++n) {
      c.expect(backtracking[n].classes.size() == expected[n],
               "n=" + std::to_string(n) + ": backtracking found " + std::to_string(backtracking[n].classes.size()));
      c.expect(naive[n].classes.size() == expected[n],
               "n=" + std::to_string(n) + ": naive found " + std::to_string(naive[n].classes.size()));
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      c.expect(backtracking_seconds[n] < 1.0 && naive_seconds[n] < 1.0,
               "n=" + std::to_string(n) + " took more than 1 s");
    }
    c.expect(naive_seconds[5] < 300.0, "n=5 naive took " + std::to_string(naive_seconds[5]) + " s (limit 300)");
    c.expect(backtracking_seconds[5] < 10.0,
             "n=5 backtracking took " + std::to_string(backtracking_seconds[5]) + " s (limit 10)");
    std::cout << "        timings: n=5 naive " << naive_seconds[5] << " s, backtracking " << backtracking_seconds[5]
              << " s\n";
    all_passed &= c.report();
  }

  {
    Criterion c(2, "every table matrix matches exactly one class and its Aut(Q) label");
    for (std::size_t n = 3; n <= 5; ++n) {
      const auto& table = testdata::table_for(n);
      for (std::size_t row = 0; row < table.size(); ++row) {
        const auto& entry = table[row];
        const std::string where = "n=" + std::to_string(n) + " row " + std::to_string(row + 1);
        auto q = quandle_of(entry.rows);
        auto canon = canonical_form(q);
        std::size_t matches = 0;
        const ClassRecord* hit = nullptr;
        for (const auto& cls : backtracking[n].classes) {
          if (cls.representative == canon) {
            ++matches;
            hit = &cls;
          }
        }
        c.expect(matches == 1, where + ": matched " + std::to_string(matches) + " classes");
        if (!hit) continue;
        c.expect(hit->aut_id.label() == entry.aut_label,
                 where + ": Aut(Q) computed " + hit->aut_id.label() + " (order " + std::to_string(hit->aut_order) +
                     "), table says " + entry.aut_label);
      }
    }
    all_passed &= c.report();
  }

  {
    Criterion c(3, "np * |Aut| = n! and explicit orbit counts agree, every class n <= 5");
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const auto& cls : backtracking[n].classes) {
        const auto line = format_matrix_line(cls.representative.matrix());
        c.expect(cls.np * cls.aut_order == factorial(n), line + ": np * |Aut| != n!");
        c.expect(np_count_by_orbit(cls.representative) == factorial(n) / cls.aut_order,
                 line + ": orbit count disagrees");
      }
    }
    all_passed &= c.report();
  }

  {
    Criterion c(4, "N_p column for order 3: 1, 1, 3");
    c.expect(np_count(trivial(3)) == 1, "trivial(3)");
    c.expect(np_count(dihedral(3)) == 1, "dihedral(3)");
    c.expect(np_count(quandle_of({{1, 1, 1}, {3, 2, 2}, {2, 3, 3}})) == 3, "[[1,1,1],[3,2,2],[2,3,3]]");
    all_passed &= c.report();
  }

  {
    Criterion c(5, "worked example: permute by (1432)");
    auto m = quandle_of({{1, 1, 1, 1}, {2, 2, 2, 3}, {3, 3, 3, 2}, {4, 4, 4, 4}});
    auto image = permute(m, Permutation::from_cycles("(1432)", 4));
    c.expect(image.matrix().to_rows() == std::vector<std::vector<int>>{{1, 1, 2, 1}, {2, 2, 1, 2}, {3, 3, 3, 3}, {4, 4, 4, 4}},
             "got " + format_matrix_line(image.matrix()));
    all_passed &= c.report();
  }

  {
    Criterion c(6, "determinants -825 / -1875 and iso witness (1 5 3)(2 4)");
    auto det_a = determinant(QuandleMatrix::from_rows(testdata::kDeterminantA));
    auto det_b = determinant(QuandleMatrix::from_rows(testdata::kDeterminantB));
    c.expect(det_a == -825, "det A = " + std::to_string(det_a));
    c.expect(det_b == -1875, "det B = " + std::to_string(det_b));
    auto path_a = write_temp("detA.txt", testdata::kDeterminantA);
    auto path_b = write_temp("detB.txt", testdata::kDeterminantB);
    int code = -1;
    auto lex_least = run_cli({"iso", path_a, path_b}, &code);
    c.expect(code == 0, "iso A B exit code " + std::to_string(code));
    auto w = Permutation::from_cycles(lex_least.substr(0, lex_least.find('\n')), 5);
    c.expect(permute(quandle_of(testdata::kDeterminantA), w) == quandle_of(testdata::kDeterminantB),
             "iso A B witness " + lex_least + " does not map A to B");
    auto witnesses = run_cli({"iso", "--all", path_b, path_a}, &code);
    c.expect(code == 0 && witnesses.find("(1 5 3)(2 4)\n") != std::string::npos,
             "(1 5 3)(2 4) not among the witnesses listed by iso --all B A");
    std::cout << "        iso A B -> " << lex_least.substr(0, lex_least.find('\n'))
              << " (lex-least); (1 5 3)(2 4) listed by iso --all B A\n";
    all_passed &= c.report();
  }

  {
    Criterion c(7, "transposition quandle: valid, connected, not latin, built by conjugation");
    auto report = verify_quandle(QuandleMatrix::from_rows(testdata::kTranspositionRows));
    c.expect(report.valid(), "published 6x6 matrix does not verify");
    if (report.valid()) {
      auto q = quandle_of(testdata::kTranspositionRows);
      c.expect(is_connected(q), "not connected");
      c.expect(!is_latin(q), "latin");
      std::vector<Permutation> transpositions;
      for (auto t : {"(1 2)", "(1 3)", "(1 4)", "(2 3)", "(2 4)", "(3 4)"})
        transpositions.push_back(Permutation::from_cycles(t, 4));
      auto built = conjugation(transpositions);
      c.expect(isomorphic(built, q), "conjugation quandle is not p-equivalent to the published matrix");
      c.expect(is_connected(built) && !is_latin(built), "conjugation quandle connected/latin flags differ");
    }
    all_passed &= c.report();
  }

  {
    Criterion c(8, "Alexander presentations are isomorphic to their table rows");
    struct Check {
      AlexanderPresentation p;
      Quandle target;
    };
    std::vector<Check> checks = {
        {{3, {2, 1}}, trivial(3)},
        {{3, {1, 1}}, dihedral(3)},
        {{4, {3, 1}}, trivial(4)},
        {{2, {1, 0, 1}}, quandle_of(testdata::kOrder4Table[5].rows)},
        {{2, {1, 1, 1}}, quandle_of(testdata::kOrder4Table[6].rows)},
        {{5, {1, 1}}, quandle_of(testdata::kOrder5Table[19].rows)},
        {{5, {2, 1}}, quandle_of(testdata::kOrder5Table[17].rows)},
        {{5, {3, 1}}, quandle_of(testdata::kOrder5Table[21].rows)},
        {{5, {4, 1}}, trivial(5)},
    };
    for (const auto& ch : checks) c.expect(isomorphic(alexander(ch.p), ch.target), ch.p.to_string());
    all_passed &= c.report();
  }

  {
    Criterion c(9, "property suites over all matrices n <= 5 plus 200 random permutes");
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      auto all = enumerate_all(n);
      for (const auto& q : all) {
        const auto line = format_matrix_line(q.matrix());
        ++checked;
        c.expect(verify_quandle(q.matrix()).valid(), line + ": invalid");
        c.expect(trace(q) == static_cast<std::int64_t>(n * (n + 1) / 2), line + ": trace");
        c.expect(dual(dual(q)) == q, line + ": dual∘dual");
        c.expect(!is_latin(q) || is_connected(q), line + ": latin but not connected");
      }
      if (n <= 4) {
        c.expect(enumerate_all(n, options(Strategy::naive)) == all, "n=" + std::to_string(n) + ": naive stream differs");
      }
      c.expect(naive[n].total_valid_matrices == backtracking[n].total_valid_matrices &&
                   format_report_machine(naive[n]) == format_report_machine(backtracking[n]),
               "n=" + std::to_string(n) + ": naive and backtracking classes differ");
      for (int jobs : {2, 4}) {
        auto par = enumerate_classes(n, options(Strategy::backtracking, jobs));
        c.expect(format_report_machine(par) == format_report_machine(backtracking[n]),
                 "n=" + std::to_string(n) + ": jobs=" + std::to_string(jobs) + " output differs");
        c.expect(enumerate_all(n, options(Strategy::backtracking, jobs)) == all,
                 "n=" + std::to_string(n) + ": parallel stream differs");
      }
    }
    std::mt19937 rng(20051107);
    std::vector<Quandle> reps;
    for (std::size_t n = 1; n <= 5; ++n)
      for (const auto& cls : backtracking[n].classes) reps.push_back(cls.representative);
    for (int trial = 0; trial < 200; ++trial) {
      const auto& q = reps[rng() % reps.size()];
      std::vector<Element> images(q.order());
      for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Element>(i);
      std::shuffle(images.begin(), images.end(), rng);
      auto image = permute(q, Permutation::from_images(images));
      c.expect(verify_quandle(image.matrix()).valid(), format_matrix_line(image.matrix()) + ": permute broke validity");
    }
    std::cout << "        checked " << checked << " matrices\n";
    all_passed &= c.report();
  }

  {
    Criterion c(10, "complete result set for n <= 5 reproduced: classes and table rows in bijection");
    for (std::size_t n = 3; n <= 5; ++n) {
      std::set<QuandleMatrix> table_canon;
      for (const auto& e : testdata::table_for(n)) table_canon.insert(canonical_form(quandle_of(e.rows)).matrix());
      std::set<QuandleMatrix> enumerated;
      for (const auto& cls : backtracking[n].classes) enumerated.insert(cls.representative.matrix());
      c.expect(table_canon.size() == testdata::table_for(n).size(), "n=" + std::to_string(n) + ": table rows collide");
      c.expect(table_canon == enumerated, "n=" + std::to_string(n) + ": enumerated classes differ from the table");
    }
    all_passed &= c.report();
  }

  std::cout << (all_passed ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
  return all_passed ? 0 : 1;
}
