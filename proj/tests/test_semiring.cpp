#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "trop/errors.hpp"
#include "trop/rational.hpp"
#include "trop/semiring.hpp"

using namespace trop;
using troptest::mat;
using troptest::q;

namespace {

Permutation perm(std::vector<int> one_based) {
  for (int& x : one_based) --x;
  return Permutation(one_based);
}

std::set<Permutation> optima_set(const TropicalMatrix& m) {
  const auto det = tropical_det(m);
  return {det.optima.begin(), det.optima.end()};
}

}  // namespace

TEST_CASE("rational parsing accepts p/q and rejects float tokens") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4/2") == q(-2));
  CHECK(parse_rational("17") == q(17));
  CHECK(rational_str(q(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("NaN"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("permutation basics") {
  const auto p = perm({2, 1, 3});
  CHECK(p.sign() == -1);
  CHECK(p.cycle_str() == "(1 2)");
  CHECK(Permutation::identity(4).sign() == 1);
  CHECK(Permutation::parse("(1 2)(3 4)", 4) == perm({2, 1, 4, 3}));
  CHECK(Permutation::parse("id", 3) == Permutation::identity(3));
  CHECK(Permutation::parse("2 1 3", 3) == perm({2, 1, 3}));
  CHECK(Permutation::parse("[3,1,2]", 3) == perm({3, 1, 2}));
  CHECK_THROWS_AS(Permutation::parse("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::parse("4 1 2", 3), ParseError);
}

TEST_CASE("birkhoff edges") {
  const auto id4 = Permutation::identity(4);
  CHECK_FALSE(is_birkhoff_edge(id4, Permutation::parse("(1 2)(3 4)", 4)));
  CHECK(is_birkhoff_edge(Permutation::parse("(1 2)", 4), id4));
  CHECK(is_birkhoff_edge(Permutation::parse("(1 2 3 4)", 4), id4));
  CHECK_FALSE(is_birkhoff_edge(id4, id4));
  CHECK(birkhoff_cycle_length(Permutation::parse("(1 2 3)", 4), id4) == 3);
}

TEST_CASE("tropical_det examples") {
  SUBCASE("all-zero 2x2: every permutation optimal") {
    const auto det = tropical_det(mat({{0, 0}, {0, 0}}));
    CHECK(det.value == 0);
    CHECK(optima_set(mat({{0, 0}, {0, 0}})) ==
          std::set<Permutation>{Permutation::identity(2), perm({2, 1})});
  }
  SUBCASE("3x3 with optimum at id and a transposition") {
    const auto m = mat({{0, 0, 2}, {0, 0, 1}, {3, 1, 0}});
    const auto det = tropical_det(m);
    CHECK(det.value == 0);
    CHECK(optima_set(m) == std::set<Permutation>{Permutation::identity(3), perm({2, 1, 3})});
  }
  SUBCASE("identity pattern: both 3-cycles") {
    const auto m = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto det = tropical_det(m);
    CHECK(det.value == 0);
    CHECK(optima_set(m) == std::set<Permutation>{perm({2, 3, 1}), perm({3, 1, 2})});
  }
  SUBCASE("non-square input is rejected") {
    CHECK_THROWS_AS(tropical_det(mat({{0, 1, 2}, {3, 4, 5}})), DimensionError);
  }
}

TEST_CASE("tropical singularity") {
  CHECK_FALSE(is_tropically_singular(mat({{1, 0}, {0, 1}})));
  CHECK(is_tropically_singular(mat({{0, 0}, {0, 0}})));
  CHECK(is_tropically_singular(mat({{0, 0, 2}, {0, 0, 1}, {3, 1, 0}})));
}

TEST_CASE("assignment path agrees with exhaustive enumeration") {
  // force the assignment route by shrinking the budget
  troptest::Rng rng(20240801);
  Budget tiny;
  tiny.perm_budget = 40320;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 5 + static_cast<int>(trial % 3);
    TropicalMatrix a = rng.matrix(m, m, -3, 3, 2);
    // plant extra ties so the argmin set is rarely a singleton
    for (int i = 0; i < m; ++i) a(i, (i + 1) % m) = a(i, i);
    Budget forced = tiny;
    forced.perm_budget = 120;  // m! exceeds this, assignment path kicks in
    if (m > 5) {
      const auto exhaustive = tropical_det(a, tiny);
      const auto assignment = tropical_det(a, forced);
      CHECK(exhaustive.value == assignment.value);
      CHECK(exhaustive.optima == assignment.optima);
    }
  }
}

TEST_CASE("budget exhaustion is an explicit error") {
  Budget b;
  b.perm_budget = 2;
  CHECK_THROWS_AS(tropical_det(mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), b), BudgetError);
}

TEST_CASE("submatrix") {
  const auto idp = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(submatrix(idp, MinorIndex({0, 1}, {0, 1})) == mat({{1, 0}, {0, 1}}));
  CHECK(submatrix(idp, MinorIndex::full(3)) == idp);
  const auto starship = mat({{2, 2, 0, 0, 0},
                             {0, 2, 2, 0, 1},
                             {0, 0, 2, 2, 0},
                             {0, 0, 0, 2, 2},
                             {2, 0, 0, 0, 2}});
  CHECK(submatrix(starship, MinorIndex({0, 1, 2, 3}, {0, 1, 2, 4})) ==
        mat({{2, 2, 0, 0}, {0, 2, 2, 1}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
  CHECK_THROWS_AS(submatrix(idp, MinorIndex({0, 3}, {0, 1})), DimensionError);
}

TEST_CASE("canonicalize_mod_lineality") {
  CHECK(canonicalize_mod_lineality(mat({{0, 0, 2}, {0, 0, 1}, {3, 1, 0}})) ==
        mat({{0, 0, 0}, {0, 0, -1}, {0, -2, -5}}));
  CHECK(canonicalize_mod_lineality(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        mat({{0, 0, 0}, {0, 2, 1}, {0, 1, 2}}));
  SUBCASE("idempotent on arbitrary matrices") {
    troptest::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = rng.matrix(rng.integer(1, 4), rng.integer(1, 4));
      const auto c = canonicalize_mod_lineality(a);
      CHECK(is_canonicalized(c));
      CHECK(canonicalize_mod_lineality(c) == c);
    }
  }
}

TEST_CASE("det value shifts by row/column constants, argmin set is invariant") {
  troptest::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng.integer(2, 4));
    const auto a = rng.matrix(m, m);
    const auto base = tropical_det(a);
    const Rational c = rng.rational(-5, 5);
    const int row = static_cast<int>(rng.integer(0, m - 1));
    const int col = static_cast<int>(rng.integer(0, m - 1));
    TropicalMatrix shifted_row = a, shifted_col = a;
    for (int j = 0; j < m; ++j) shifted_row(row, j) += c;
    for (int i = 0; i < m; ++i) shifted_col(i, col) += c;
    for (const auto& shifted : {shifted_row, shifted_col}) {
      const auto det = tropical_det(shifted);
      CHECK(det.value == base.value + c);
      CHECK(det.optima == base.optima);
    }
  }
}

TEST_CASE("canonicalization preserves submatrix argmin sets") {
  troptest::Rng rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = static_cast<int>(rng.integer(2, 4));
    const int n = static_cast<int>(rng.integer(2, 4));
    const auto a = rng.matrix(d, n);
    const auto c = canonicalize_mod_lineality(a);
    const int size = static_cast<int>(rng.integer(1, std::min(d, n)));
    std::set<int> rows, cols;
    while (static_cast<int>(rows.size()) < size) rows.insert(static_cast<int>(rng.integer(0, d - 1)));
    while (static_cast<int>(cols.size()) < size) cols.insert(static_cast<int>(rng.integer(0, n - 1)));
    const MinorIndex ij({rows.begin(), rows.end()}, {cols.begin(), cols.end()});
    CHECK(tropical_det(submatrix(a, ij)).optima == tropical_det(submatrix(c, ij)).optima);
  }
}

TEST_CASE("perm_sign is multiplicative and symmetric under inversion") {
  troptest::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 7));
    const auto a = rng.permutation(m);
    const auto b = rng.permutation(m);
    CHECK(a.sign() * a.inverse().sign() == 1);
    CHECK(a.compose(b).sign() == a.sign() * b.sign());
  }
}

TEST_CASE("singularity matches the argmin-set definition") {
  troptest::Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 4));
    const auto a = rng.matrix(m, m, -2, 2, 1);
    CHECK(is_tropically_singular(a) == (tropical_det(a).optima.size() >= 2));
  }
}

TEST_CASE("min_plus_product") {
  CHECK(min_plus_product(mat({{0}, {2}}), mat({{0, 1}})) == mat({{0, 1}, {2, 3}}));
  CHECK(min_plus_product(TropicalMatrix(3, 1, q(0)), TropicalMatrix(1, 4, q(0))) ==
        TropicalMatrix(3, 4, q(0)));
  SUBCASE("random products verified against the definition") {
    troptest::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
      const auto x = rng.matrix(3, 2);
      const auto y = rng.matrix(2, 4);
      const auto p = min_plus_product(x, y);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
          CHECK(p(i, j) == std::min(x(i, 0) + y(0, j), x(i, 1) + y(1, j)));
    }
  }
  CHECK_THROWS_AS(min_plus_product(mat({{0, 1}}), mat({{0, 1}})), DimensionError);
}
