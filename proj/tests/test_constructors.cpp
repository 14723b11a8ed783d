#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "known_tables.hpp"
#include "quandle/constructors.hpp"
#include "quandle/symmetry.hpp"

using namespace quandle;
using testdata::quandle_of;
using Rows = std::vector<std::vector<int>>;

namespace {

bool isomorphic(const Quandle& a, const Quandle& b) { return are_isomorphic(a, b).has_value(); }

std::vector<Permutation> cycles(std::size_t degree, std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (auto t : texts) out.push_back(Permutation::from_cycles(t, degree));
  return out;
}

}  // namespace

TEST_CASE("trivial") {
  CHECK(trivial(3).matrix().to_rows() == Rows{{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  CHECK(trivial(1).matrix().to_rows() == Rows{{1}});
  CHECK(trivial(4) == quandle_of(testdata::kOrder4Table[0].rows));
  CHECK_THROWS_AS(trivial(0), std::invalid_argument);
}

TEST_CASE("dihedral") {
  CHECK(dihedral(3).matrix().to_rows() == Rows{{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
  CHECK(dihedral(1).matrix().to_rows() == Rows{{1}});
  CHECK(isomorphic(dihedral(5), quandle_of(testdata::kOrder5Table[19].rows)));
  CHECK_THROWS_AS(dihedral(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(verify_quandle(dihedral(n).matrix()).valid());
    CHECK(is_latin(dihedral(n)) == (n % 2 == 1));
  }
}

TEST_CASE("alexander") {
  CHECK(isomorphic(alexander({3, {2, 1}}), trivial(3)));
  CHECK(alexander({3, {2, 1}}) == trivial(3));
  CHECK(isomorphic(alexander({3, {1, 1}}), quandle_of({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}})));
  CHECK(isomorphic(alexander({2, {1, 1, 1}}), quandle_of({{1, 4, 2, 3}, {3, 2, 4, 1}, {4, 1, 3, 2}, {2, 3, 1, 4}})));

  SUBCASE("ring order: constant coefficient most significant") {
    // Z_2[t]/(t^2+1): elements 0, t, 1, 1+t. t▷0 = t·t = t^2 = 1 → element 3.
    auto q = alexander({2, {1, 0, 1}});
    CHECK(q.apply(2, 1) == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(alexander({4, {2, 1}}), std::invalid_argument);      // t = 2 not a unit mod 4
    CHECK_THROWS_AS(alexander({3, {1, 2}}), std::invalid_argument);      // not monic
    CHECK_THROWS_AS(alexander({3, {1}}), std::invalid_argument);         // degree 0
    CHECK_THROWS_AS(alexander({1, {0, 1}}), std::invalid_argument);      // modulus
    CHECK_THROWS_AS(alexander({2, {0, 1}}), std::invalid_argument);      // t = 0
    CHECK_THROWS_AS(alexander({2, std::vector<int>(10, 1)}), std::invalid_argument);  // 512 elements
  }
  CHECK(AlexanderPresentation{2, {1, 1, 1}}.to_string() == "Z_2[t]/(t^2+t+1)");
}

TEST_CASE("alexander(m, t+1) matches dihedral(m)") {
  for (int m = 2; m <= 7; ++m) {
    CAPTURE(m);
    CHECK(isomorphic(alexander({m, {1, 1}}), dihedral(static_cast<std::size_t>(m))));
  }
}

TEST_CASE("alexander latin iff 1-t invertible") {
  CHECK_FALSE(is_latin(alexander({2, {1, 0, 1}})));
  CHECK(is_latin(alexander({2, {1, 1, 1}})));
  // Z_5 with t = 4, 3, 2 (1-t a unit) versus t = 1.
  CHECK(is_latin(alexander({5, {1, 1}})));
  CHECK(is_latin(alexander({5, {2, 1}})));
  CHECK_FALSE(is_latin(alexander({5, {4, 1}})));
}

TEST_CASE("every listed Alexander presentation matches its table row") {
  for (const auto& row : testdata::kAlexanderRows) {
    CAPTURE(row.presentation.to_string());
    auto q = alexander(row.presentation);
    CHECK(verify_quandle(q.matrix()).valid());
    CHECK(isomorphic(q, quandle_of(testdata::table_for(row.order)[row.table_index].rows)));
  }
}

TEST_CASE("conjugation") {
  auto transpositions = cycles(4, {"(1 2)", "(1 3)", "(1 4)", "(2 3)", "(2 4)", "(3 4)"});
  auto q = conjugation(transpositions);
  CHECK(q.order() == 6);
  CHECK(is_connected(q));
  CHECK_FALSE(is_latin(q));
  CHECK(q == quandle_of(testdata::kTranspositionRows));
  CHECK(isomorphic(q, quandle_of(testdata::kTranspositionRows)));

  CHECK(conjugation(cycles(3, {"(1 2 3)"})).matrix().to_rows() == Rows{{1}});

  // Z_4 = <(1 2 3 4)> is abelian.
  auto z4 = cycles(4, {"()", "(1 2 3 4)", "(1 3)(2 4)", "(1 4 3 2)"});
  CHECK(conjugation(z4) == trivial(4));
  CHECK(conjugation(z4, -3) == trivial(4));

  CHECK_THROWS_AS(conjugation(cycles(3, {"(1 2)", "(1 3)"})), std::invalid_argument);
  CHECK_THROWS_AS(conjugation(cycles(3, {"(1 2)", "(1 2)"})), std::invalid_argument);
  CHECK_THROWS_AS(conjugation({}), std::invalid_argument);
}

TEST_CASE("conjugation with exponent") {
  // 3-cycles of A4 under a▷b = b^{-2} a b^{2}.
  auto cls = conjugacy_class(Permutation::from_cycles("(1 2 3)", 4), cycles(4, {"(1 2)(3 4)", "(1 2 3)"}));
  CHECK(cls.size() == 4);
  for (int e : {1, 2, -1}) CHECK(verify_quandle(conjugation(cls, e).matrix()).valid());
}

TEST_CASE("conjugacy_class closes a representative") {
  auto s6 = cycles(6, {"(1 2)", "(1 2 3 4 5 6)"});
  CHECK(conjugacy_class(Permutation::from_cycles("(1 2)", 6), s6).size() == 15);
  auto s4 = cycles(4, {"(1 2)", "(1 2 3 4)"});
  auto cls = conjugacy_class(Permutation::from_cycles("(1 2)", 4), s4);
  CHECK(cls.size() == 6);
  CHECK(isomorphic(conjugation(cls), quandle_of(testdata::kTranspositionRows)));
}

TEST_CASE("make_quandle syntax") {
  CHECK(make_quandle("trivial:3") == trivial(3));
  CHECK(make_quandle("dihedral:5") == dihedral(5));
  CHECK(make_quandle("alexander:2:1,1,1") == alexander({2, {1, 1, 1}}));
  CHECK(make_quandle("conj:4:(12);(13);(14);(23);(24);(34)") == quandle_of(testdata::kTranspositionRows));
  CHECK(make_quandle("conj:4:(1 2);(1 3);(1 4);(2 3);(2 4);(3 4):1") == quandle_of(testdata::kTranspositionRows));
  CHECK_THROWS_AS(make_quandle("trivial"), std::invalid_argument);
  CHECK_THROWS_AS(make_quandle("trivial:x"), std::invalid_argument);
  CHECK_THROWS_AS(make_quandle("cube:3"), std::invalid_argument);
  CHECK(looks_like_constructor("dihedral:3"));
  CHECK_FALSE(looks_like_constructor("matrix.txt"));
}
