#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "known_tables.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = quandle::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = fs::temp_directory_path() / "quandle_cli_test";
  fs::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string to_text(const std::vector<std::vector<int>>& rows) {
  return quandle::format_matrix(quandle::QuandleMatrix::from_rows(rows));
}

}  // namespace

TEST_CASE("make and verify") {
  auto r = run({"make", "dihedral:3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 3 2\n3 2 1\n2 1 3\n");

  CHECK(run({"verify", "-"}, r.out).out == "valid\n");
  auto bad = run({"verify", "-"}, "1 2 3\n3 1 2\n2 3 1\n");
  CHECK(bad.code == 1);
  CHECK(bad.out.starts_with("diagonal"));
  auto parse = run({"verify", "-"}, "1 2\n2\n");
  CHECK(parse.code == 1);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("props") {
  auto path = write_temp("s6.txt", to_text(quandle::testdata::kTranspositionRows));
  auto r = run({"props", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("n = 6\n") != std::string::npos);
  CHECK(r.out.find("trace = 21\n") != std::string::npos);
  CHECK(r.out.find("latin = no\n") != std::string::npos);
  CHECK(r.out.find("connected = yes\n") != std::string::npos);
  CHECK(r.out.find("orbits = {1,2,3,4,5,6}\n") != std::string::npos);
  CHECK(r.out.find("aut_order = 24\n") != std::string::npos);
  CHECK(r.out.find("aut_group = S4\n") != std::string::npos);
  CHECK(r.out.find("np = 30\n") != std::string::npos);
}

TEST_CASE("iso") {
  auto a = write_temp("detA.txt", to_text(quandle::testdata::kDeterminantA));
  auto b = write_temp("detB.txt", to_text(quandle::testdata::kDeterminantB));
  auto r = run({"iso", a, b});
  CHECK(r.code == 0);
  CHECK(r.out == "(4 5)\n");
  auto all = run({"iso", "--all", b, a});
  CHECK(all.code == 0);
  CHECK(all.out.find("(1 5 3)(2 4)\n") != std::string::npos);
  auto no = run({"iso", "trivial:3", "dihedral:3"});
  CHECK(no.code == 1);
  CHECK(no.out == "not isomorphic\n");
}

TEST_CASE("aut, np, dual, det, canon") {
  auto aut = run({"aut", "-"}, "1 1 1\n3 2 2\n2 3 3\n");
  CHECK(aut.out == "order 2\ngroup Z2\n()\n(2 3)\n");
  CHECK(run({"np", "-"}, "1 1 1\n3 2 2\n2 3 3\n").out == "3\n");
  CHECK(run({"dual", "-"}, "1 1 1 2\n2 2 2 3\n3 3 3 1\n4 4 4 4\n").out == "1 1 1 3\n2 2 2 1\n3 3 3 2\n4 4 4 4\n");
  CHECK(run({"det", "-"}, to_text(quandle::testdata::kDeterminantA)).out == "-825\n");

  auto canon = run({"canon", "-"}, to_text(quandle::testdata::kDeterminantB));
  CHECK(canon.code == 0);
  CHECK(run({"verify", "-"}, canon.out).out == "valid\n");
  CHECK(run({"canon", "-"}, canon.out).out == canon.out);
  CHECK(run({"canon", "-"}, to_text(quandle::testdata::kDeterminantA)).out == canon.out);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "4", "--machine"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 14);
  CHECK(run({"enumerate", "4", "--machine", "--jobs", "3"}).out == r.out);
  CHECK(run({"enumerate", "4", "--machine", "--strategy", "naive"}).out == r.out);

  auto all = run({"enumerate", "3", "--all", "--machine"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 5);

  auto table = run({"enumerate", "3"});
  CHECK(table.out.find("3 isomorphism classes") != std::string::npos);
  CHECK(table.out.find("Aut(Q) = Z2 (order 2)  N_p = 3") != std::string::npos);

  auto capped = run({"enumerate", "5", "--max-placements", "100"});
  CHECK(capped.code == 3);
  CHECK(run({"enumerate", "6", "--strategy", "naive"}).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"enumerate", "3", "--strategy", "greedy"}).code == 2);
  CHECK(run({"verify", "/nonexistent/file.txt"}).code == 2);
  CHECK(run({"verify", "-"}, "2 1\n1 2\n").code == 1);
  CHECK(run({"props", "-"}, "2 1\n1 2\n").code == 1);
}
