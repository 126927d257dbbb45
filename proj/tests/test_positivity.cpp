#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "trop/cartoon.hpp"
#include "trop/errors.hpp"
#include "trop/orthants.hpp"
#include "trop/positivity.hpp"
#include "trop/rank.hpp"

using namespace trop;
using troptest::mat;
using troptest::q;

namespace {

const TropicalMatrix kCaterpillar = mat({{0, 0, 2}, {0, 0, 1}, {3, 1, 0}});
const TropicalMatrix kSnowflake = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

Permutation cyc(const std::string& s, int n) { return Permutation::parse(s, n); }

}  // namespace

TEST_CASE("minor_positivity examples") {
  SUBCASE("optimum attained on both signs") {
    const auto v = minor_positivity(kCaterpillar, MinorIndex::full(3));
    CHECK(v.min_value == 0);
    CHECK(v.on_hypersurface);
    CHECK(v.even_attained);
    CHECK(v.odd_attained);
    CHECK(v.passes());
  }
  SUBCASE("two odd optima only") {
    const auto m = mat({{2, 2, 0, 0}, {0, 2, 2, 1}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    const auto v = minor_positivity(m, MinorIndex::full(4));
    CHECK(v.min_value == 0);
    CHECK(v.on_hypersurface);
    CHECK(v.odd_attained);
    CHECK_FALSE(v.even_attained);
    CHECK_FALSE(v.passes());
  }
  SUBCASE("unique optimum is off the hypersurface") {
    const auto v = minor_positivity(mat({{1, 0}, {0, 1}}), MinorIndex::full(2));
    CHECK_FALSE(v.on_hypersurface);
    CHECK(v.passes());
  }
}

TEST_CASE("positive_prevariety_member examples") {
  CHECK(positive_prevariety_member(kCaterpillar, 2).positive());
  SUBCASE("snowflake fails with the full minor as witness") {
    const auto cert = positive_prevariety_member(kSnowflake, 2);
    CHECK_FALSE(cert.positive());
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->index.rows == std::vector<int>{0, 1, 2});
    CHECK(cert.witness->index.cols == std::vector<int>{0, 1, 2});
  }
  SUBCASE("not in the prevariety is a precondition error") {
    CHECK_THROWS_AS(positive_prevariety_member(mat({{1, 0}, {0, 1}}), 1), PreconditionError);
  }
}

TEST_CASE("signed prevariety membership") {
  SUBCASE("all-plus pattern reproduces the unsigned verdict") {
    troptest::Rng rng(404);
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = min_plus_product(rng.matrix(3, 2, -3, 3, 2), rng.matrix(2, 4, -3, 3, 2));
      const auto plain = positive_prevariety_member(a, 2);
      const auto twisted = signed_prevariety_member(a, all_plus_signs(3, 4), 2);
      CHECK(plain.positive() == twisted.positive());
    }
  }
  SUBCASE("2x2 zero matrix with one flipped sign is not signed-positive") {
    SignPattern s(2, 2, 1);
    s(0, 0) = -1;
    const auto cert = signed_prevariety_member(mat({{0, 0}, {0, 0}}), s, 1);
    CHECK_FALSE(cert.positive());
  }
}

TEST_CASE("birkhoff_edge_positive examples") {
  CHECK(birkhoff_edge_positive(Permutation::identity(3), cyc("(1 2)", 3)));
  CHECK_FALSE(birkhoff_edge_positive(Permutation::identity(3), cyc("(1 2 3)", 3)));
  CHECK(birkhoff_edge_positive(Permutation::identity(4), cyc("(1 2 3 4)", 4)));
  CHECK_THROWS_AS(birkhoff_edge_positive(Permutation::identity(4), cyc("(1 2)(3 4)", 4)),
                  PreconditionError);
}

TEST_CASE("cartoon construction") {
  SUBCASE("transposition at n=3: double edge mark plus node mark") {
    const auto c = cartoon_of_edge(cyc("(1 2)", 3), Permutation::identity(3));
    CHECK(c.edge_marks == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}});
    CHECK(c.node_marks == std::vector<int>{2});
  }
  SUBCASE("3-cycle marks the full triangle") {
    const auto c = cartoon_of_edge(cyc("(1 2 3)", 3), Permutation::identity(3));
    CHECK(c.edge_marks == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(c.node_marks.empty());
  }
  SUBCASE("transposition (4 5) at n=5") {
    const auto c = cartoon_of_edge(cyc("(4 5)", 5), Permutation::identity(5));
    CHECK(c.edge_marks == std::vector<std::pair<int, int>>{{3, 4}, {3, 4}});
    CHECK(c.node_marks == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("marked triangle detection") {
  const auto id3 = Permutation::identity(3);
  const auto id5 = Permutation::identity(5);
  CHECK_FALSE(cartoon_has_marked_triangle(cartoon_of_edge(cyc("(1 2)", 3), id3)));
  CHECK(cartoon_has_marked_triangle(cartoon_of_edge(cyc("(1 2 3)", 3), id3)));
  // one failure direction at n=5: positive edge whose cartoon has a triangle
  const auto c = cartoon_of_edge(cyc("(4 5)", 5), id5);
  CHECK(birkhoff_edge_positive(cyc("(4 5)", 5), id5));
  CHECK(cartoon_has_marked_triangle(c));
  // and the other direction: a 5-cycle quotient is non-positive (both
  // permutations even) while its marks form a chordless 5-cycle
  const auto c5 = cyc("(1 2 3 4 5)", 5);
  CHECK_FALSE(birkhoff_edge_positive(c5, id5));
  CHECK_FALSE(cartoon_has_marked_triangle(cartoon_of_edge(c5, id5)));
}

TEST_CASE("triangle criterion is exact at n=3 and n=4") {
  for (int n : {3, 4}) {
    const auto perms = all_permutations(n);
    int edges = 0;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = i + 1; j < perms.size(); ++j) {
        if (!is_birkhoff_edge(perms[i], perms[j])) continue;
        ++edges;
        const bool positive = birkhoff_edge_positive(perms[i], perms[j]);
        const bool triangle = cartoon_has_marked_triangle(cartoon_of_edge(perms[i], perms[j]));
        CHECK(triangle == !positive);
      }
    }
    CHECK(edges == (n == 3 ? 15 : 240));
  }
}

TEST_CASE("orthant coloring at n=3 with the all-plus pattern") {
  const auto oc = orthant_coloring(3, all_plus_signs(3, 3));
  CHECK(oc.green_edges.size() == 9);
  CHECK(oc.red_edges.size() == 6);
  const auto cut = verify_cut_property(oc);
  CHECK(cut.holds);
  REQUIRE(cut.components.size() == 2);
  // components are the even and odd permutations
  for (const auto& component : cut.components) {
    std::set<int> signs;
    for (int v : component) signs.insert(oc.vertices[v].sign());
    CHECK(signs.size() == 1);
  }
  CHECK(cut.components[0].size() == 3);
  CHECK(cut.components[1].size() == 3);
}

TEST_CASE("single sign flip keeps the cut property and flips the right edges") {
  troptest::Rng rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    SignPattern s(n, n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = rng.integer(0, 1) ? 1 : -1;
    const auto base = orthant_coloring(n, s);
    CHECK(verify_cut_property(base).holds);

    const int k = static_cast<int>(rng.integer(0, n - 1));
    const int l = static_cast<int>(rng.integer(0, n - 1));
    SignPattern flipped = s;
    flipped(k, l) = -flipped(k, l);
    const auto after = orthant_coloring(n, flipped);
    CHECK(verify_cut_property(after).holds);

    // an edge changes color iff exactly one endpoint matches sigma(k) = l
    const std::set<std::pair<int, int>> green_before(base.green_edges.begin(),
                                                     base.green_edges.end());
    const std::set<std::pair<int, int>> green_after(after.green_edges.begin(),
                                                    after.green_edges.end());
    auto all_edges = base.green_edges;
    all_edges.insert(all_edges.end(), base.red_edges.begin(), base.red_edges.end());
    for (const auto& e : all_edges) {
      const bool changed = green_before.count(e) != green_after.count(e);
      const bool affected =
          (base.vertices[e.first](k) == l) != (base.vertices[e.second](k) == l);
      CHECK(changed == affected);
    }
  }
}

TEST_CASE("a cut side can fall apart into several red components") {
  // regression: this pattern leaves four 3-cycles red-isolated, so the red
  // subgraph has 5 components while the green edges still form a cut
  SignPattern s(4, 4, 1);
  const int grid[4][4] = {{1, -1, 1, -1}, {-1, -1, 1, 1}, {-1, 1, 1, -1}, {1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s(i, j) = grid[i][j];
  const auto oc = orthant_coloring(4, s);
  const auto cut = verify_cut_property(oc);
  CHECK(cut.holds);
  CHECK(cut.components.size() == 5);
}

TEST_CASE("n=2 orthant graphs always satisfy the cut property") {
  for (int mask = 0; mask < 16; ++mask) {
    SignPattern s(2, 2, 1);
    s(0, 0) = (mask & 1) ? 1 : -1;
    s(0, 1) = (mask & 2) ? 1 : -1;
    s(1, 0) = (mask & 4) ? 1 : -1;
    s(1, 1) = (mask & 8) ? 1 : -1;
    const auto oc = orthant_coloring(2, s);
    CHECK(oc.green_edges.size() + oc.red_edges.size() == 1);
    CHECK(verify_cut_property(oc).holds);
  }
}

TEST_CASE("orthant budget") {
  Budget b;
  b.birkhoff_max_n = 4;
  CHECK_THROWS_AS(orthant_coloring(5, all_plus_signs(5, 5), b), BudgetError);
}

TEST_CASE("corank-1 square inputs: prevariety positivity equals the full-minor test") {
  troptest::Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 4));
    const auto a = min_plus_product(rng.matrix(n, n - 1, -3, 3, 2), rng.matrix(n - 1, n, -3, 3, 2));
    REQUIRE(prevariety_member(a, n - 1).member);
    const auto cert = positive_prevariety_member(a, n - 1);
    const auto direct = minor_positivity(a, MinorIndex::full(n));
    CHECK(cert.positive() == direct.passes());
  }
}

TEST_CASE("flipping one sign entry flips exactly the predicted minor verdict terms") {
  // on the full minor of a square matrix, twisting entry (k,l) changes the
  // twisted sign of exactly the optima with sigma(k) = l
  troptest::Rng rng(909);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3;
    const auto a = min_plus_product(rng.matrix(n, n - 1, -2, 2, 1), rng.matrix(n - 1, n, -2, 2, 1));
    SignPattern s(n, n, 1);
    const int k = static_cast<int>(rng.integer(0, n - 1));
    const int l = static_cast<int>(rng.integer(0, n - 1));
    s(k, l) = -1;
    const auto det = tropical_det(a);
    bool even = false, odd = false;
    for (const auto& p : det.optima) {
      const int twisted = p.sign() * (p(k) == l ? -1 : 1);
      (twisted > 0 ? even : odd) = true;
    }
    const auto v = minor_positivity_signed(a, s, MinorIndex::full(n));
    CHECK(v.even_attained == even);
    CHECK(v.odd_attained == odd);
  }
}
