#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "quandle/constructors.hpp"
#include "quandle/enumeration.hpp"
#include "quandle/group.hpp"
#include "quandle/quandle.hpp"
#include "quandle/symmetry.hpp"

namespace quandle::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A positional input is a file path, "-" for stdin, or constructor syntax.
QuandleMatrix load_matrix(const std::string& source, std::istream& in) {
  if (source == "-") return parse_matrix(in);
  if (std::filesystem::exists(source)) {
    std::ifstream file(source);
    if (!file) throw UsageError("cannot open " + source);
    return parse_matrix(file);
  }
  if (looks_like_constructor(source)) return make_quandle(source).matrix();
  throw UsageError("no such file: " + source);
}

Quandle load_quandle(const std::string& source, std::istream& in) {
  return Quandle::from_matrix(load_matrix(source, in));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_orbits(const std::vector<std::vector<int>>& blocks) {
  std::string s;
  for (const auto& b : blocks) {
    s += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(b[k]);
    }
    s += '}';
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quandle toolkit: verification, isomorphism, automorphisms and classification", "quandle"};
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  bool all_witnesses = false;

  auto* verify = app.add_subcommand("verify", "Check the quandle matrix conditions");
  verify->add_option("matrix", file_a, "Matrix file, '-' or constructor spec")->required();

  auto* props = app.add_subcommand("props", "Print structural properties");
  props->add_option("matrix", file_a)->required();

  auto* iso = app.add_subcommand("iso", "Find an isomorphism (p-equivalence witness)");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();
  iso->add_flag("--all", all_witnesses, "List every witness");

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("matrix", file_a)->required();

  auto* canon = app.add_subcommand("canon", "Canonical (lex-least) representative");
  canon->add_option("matrix", file_a)->required();

  auto* np = app.add_subcommand("np", "Number of standard-form matrices in the class");
  np->add_option("matrix", file_a)->required();

  auto* dual_cmd = app.add_subcommand("dual", "Dual quandle");
  dual_cmd->add_option("matrix", file_a)->required();

  auto* det = app.add_subcommand("det", "Integer determinant of the matrix");
  det->add_option("matrix", file_a)->required();

  std::string spec;
  auto* make = app.add_subcommand("make", "Build a quandle from a constructor spec");
  make->add_option("spec", spec, "trivial:<n> | dihedral:<n> | alexander:<m>:<coeffs> | conj:<deg>:<cycles;...>[:<e>]")
      ->required();

  std::size_t order = 0;
  std::string strategy = "backtracking";
  int jobs = 1;
  bool emit_all = false;
  bool machine = false;
  std::uint64_t max_placements = EnumerationOptions{}.max_placements;
  double time_limit = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Classify all quandles of order n");
  enumerate->add_option("n", order)->required()->check(CLI::Range(1, 20));
  enumerate->add_option("--strategy", strategy)->check(CLI::IsMember({"naive", "backtracking"}));
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enumerate->add_flag("--all", emit_all, "Emit every standard-form matrix instead of classes");
  enumerate->add_flag("--machine", machine, "Line-oriented output");
  enumerate->add_option("--max-placements", max_placements, "Abort after this many candidate placements");
  enumerate->add_option("--time-limit", time_limit, "Abort after this many seconds (0 = none)");

  std::vector<std::string> argv_storage{"quandle"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*verify) {
      auto report = verify_quandle(load_matrix(file_a, in));
      if (report.valid()) {
        out << "valid\n";
        return kOk;
      }
      for (const auto& f : report.failures) out << describe(f) << '\n';
      return kFailure;
    }
    if (*props) {
      auto q = load_quandle(file_a, in);
      auto group = automorphism_group(q);
      out << "n = " << q.order() << '\n'
          << "trace = " << trace(q) << '\n'
          << "latin = " << yes_no(is_latin(q)) << '\n'
          << "connected = " << yes_no(is_connected(q)) << '\n'
          << "orbits = " << format_orbits(orbits(q)) << '\n'
          << "aut_order = " << group.order() << '\n'
          << "aut_group = " << identify_group(group).label() << '\n'
          << "np = " << factorial(q.order()) / group.order() << '\n';
      return kOk;
    }
    if (*iso) {
      auto a = load_quandle(file_a, in);
      auto b = load_quandle(file_b, in);
      if (all_witnesses) {
        auto found = isomorphisms(a, b);
        if (found.empty()) {
          out << "not isomorphic\n";
          return kFailure;
        }
        for (const auto& w : found) out << w << '\n';
        return kOk;
      }
      auto w = are_isomorphic(a, b);
      if (!w) {
        out << "not isomorphic\n";
        return kFailure;
      }
      out << *w << '\n';
      return kOk;
    }
    if (*aut) {
      auto group = automorphism_group(load_quandle(file_a, in));
      out << "order " << group.order() << '\n' << "group " << identify_group(group).label() << '\n';
      for (const auto& g : group.elements()) out << g << '\n';
      return kOk;
    }
    if (*canon) {
      out << format_matrix(canonical_form(load_quandle(file_a, in)).matrix());
      return kOk;
    }
    if (*np) {
      out << np_count(load_quandle(file_a, in)) << '\n';
      return kOk;
    }
    if (*dual_cmd) {
      out << format_matrix(dual(load_quandle(file_a, in)).matrix());
      return kOk;
    }
    if (*det) {
      out << determinant(load_quandle(file_a, in).matrix()) << '\n';
      return kOk;
    }
    if (*make) {
      out << format_matrix(make_quandle(spec).matrix());
      return kOk;
    }
    if (*enumerate) {
      EnumerationOptions opts;
      opts.strategy = strategy == "naive" ? Strategy::naive : Strategy::backtracking;
      opts.jobs = jobs;
      opts.max_placements = max_placements;
      opts.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit * 1000));
      if (emit_all) {
        auto all = enumerate_all(order, opts);
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (machine) {
            out << format_matrix_line(all[k].matrix()) << '\n';
          } else {
            if (k) out << '\n';
            out << format_matrix(all[k].matrix());
          }
        }
        return kOk;
      }
      auto report = enumerate_classes(order, opts);
      out << (machine ? format_report_machine(report) : format_report_table(report));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidQuandle& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace quandle::cli
