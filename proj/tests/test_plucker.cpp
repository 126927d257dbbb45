#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "trop/errors.hpp"
#include "trop/plucker.hpp"
#include "trop/tree.hpp"

using namespace trop;
using troptest::q;

namespace {

// the displayed split vector for (12|345) on five leaves, coordinates in the
// order 12,13,14,15,23,24,25,34,35,45
PlueckerVector split_vector_12_345() {
  PlueckerVector p = zero_plucker(5);
  for (int i : {0, 1})
    for (int j : {2, 3, 4}) p.at(i, j) = q(-1);
  return p;
}

PhyloTree five_leaf_caterpillar() {
  PhyloTree t;
  t.m = 5;
  t.splits.emplace(Split({0, 1}, 5), q(1));
  t.splits.emplace(Split({3, 4}, 5), q(1));
  t.leaf_lengths.assign(5, q(0));
  return t;
}

}  // namespace

TEST_CASE("four_point_check examples") {
  CHECK(four_point_check(zero_plucker(5)));
  CHECK(four_point_check(split_vector_12_345()));
  SUBCASE("breaking a tie breaks the condition") {
    auto p = split_vector_12_345();
    p.at(2, 3) = q(-1);  // pairing p15+p34 now uniquely minimal on {1,3,4,5}
    CHECK_FALSE(four_point_check(p));
  }
}

TEST_CASE("plucker_from_tree") {
  SUBCASE("single split reproduces the displayed vector") {
    PhyloTree t;
    t.m = 5;
    t.splits.emplace(Split({0, 1}, 5), q(1));
    CHECK(plucker_from_tree(t).coords == split_vector_12_345().coords);
  }
  SUBCASE("no splits: the lineality element of leaf lengths") {
    PhyloTree t;
    t.m = 4;
    t.leaf_lengths = {q(1), q(0), q(-2), q(1, 2)};
    const auto p = plucker_from_tree(t);
    CHECK(p.at(0, 2) == q(1));        // -(1 + -2)
    CHECK(p.at(2, 3) == q(3, 2));     // -(-2 + 1/2)
    CHECK(four_point_check(p));
  }
  SUBCASE("incompatible splits are rejected") {
    PhyloTree t;
    t.m = 5;
    t.splits.emplace(Split({0, 1}, 5), q(1));
    t.splits.emplace(Split({1, 2}, 5), q(1));
    CHECK_THROWS_AS(plucker_from_tree(t), PreconditionError);
  }
  SUBCASE("nonpositive weights are rejected") {
    PhyloTree t;
    t.m = 5;
    t.splits.emplace(Split({0, 1}, 5), q(0));
    CHECK_THROWS_AS(plucker_from_tree(t), PreconditionError);
  }
}

TEST_CASE("tree_from_plucker inverts plucker_from_tree exactly") {
  troptest::Rng rng(777);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = static_cast<int>(rng.integer(4, 7));
    PhyloTree t;
    t.m = m;
    auto splits = troptest::random_maximal_tree_splits(rng, m);
    // sometimes drop splits to cover non-maximal trees
    const int keep = static_cast<int>(rng.integer(0, static_cast<long>(splits.size())));
    for (int k = 0; k < keep; ++k) t.splits.emplace(splits[k], rng.rational(1, 4, 8));
    for (int leaf = 0; leaf < m; ++leaf) t.leaf_lengths.push_back(rng.rational(-3, 3, 8));
    const auto p = plucker_from_tree(t);
    CHECK(four_point_check(p));
    const auto back = tree_from_plucker(p);
    CHECK(back.splits == t.splits);
    CHECK(back.leaf_lengths == t.leaf_lengths);
  }
}

TEST_CASE("four-point failure is rejected by tree_from_plucker") {
  auto p = split_vector_12_345();
  p.at(2, 3) = q(-1);
  CHECK_THROWS_AS(tree_from_plucker(p), PreconditionError);
}

TEST_CASE("elementary splits and bicoloring counts") {
  SUBCASE("five-leaf caterpillar: counts 4 and 0") {
    const auto t = five_leaf_caterpillar();
    REQUIRE(t.maximal());
    CHECK(elementary_splits(t.split_list()).size() == 2);
    CHECK(count_bicolorings(t, 2, 3) == 4);
    CHECK(count_bicolorings(t, 1, 4) == 0);
  }
  SUBCASE("non-maximal trees are rejected") {
    PhyloTree t;
    t.m = 5;
    t.splits.emplace(Split({0, 1}, 5), q(1));
    CHECK_THROWS_AS(count_bicolorings(t, 2, 3), PreconditionError);
  }
  SUBCASE("counts match brute force on random maximal trees") {
    troptest::Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
      const int m = static_cast<int>(rng.integer(4, 8));
      PhyloTree t;
      t.m = m;
      for (const auto& s : troptest::random_maximal_tree_splits(rng, m))
        t.splits.emplace(s, q(1));
      const int k = static_cast<int>(elementary_splits(t.split_list()).size());
      CHECK((2 * k <= m || m == 4));
      for (int d = 1; d < m; ++d) {
        long long brute = 0;
        for (long mask = 0; mask < (1L << m); ++mask) {
          if (__builtin_popcountl(mask) != d) continue;
          std::vector<int> red, green;
          for (int leaf = 0; leaf < m; ++leaf)
            (mask & (1L << leaf) ? red : green).push_back(leaf);
          if (admissible_bicoloring(t, Bicoloring{red, green})) ++brute;
        }
        CHECK(count_bicolorings(t, d, m - d) == brute);
      }
    }
  }
}

TEST_CASE("admissible_bicoloring examples") {
  const auto t = five_leaf_caterpillar();
  CHECK(admissible_bicoloring(t, make_bicoloring({0, 3}, {1, 2, 4}, 5)));
  CHECK_FALSE(admissible_bicoloring(t, make_bicoloring({0}, {1, 2, 3, 4}, 5)));
  SUBCASE("star trees accept everything") {
    PhyloTree star;
    star.m = 5;
    CHECK(admissible_bicoloring(star, make_bicoloring({0}, {1, 2, 3, 4}, 5)));
  }
}

TEST_CASE("project_plucker") {
  SUBCASE("split vector on four leaves projects to the displayed matrix") {
    PhyloTree t;
    t.m = 4;
    t.splits.emplace(Split({0, 1}, 4), q(1));
    const auto p = plucker_from_tree(t);
    const auto a = project_plucker(p, make_bicoloring({0, 2}, {1, 3}, 4));
    CHECK(a == troptest::mat({{0, -1}, {-1, 0}}));
  }
  SUBCASE("inadmissible colorings are rejected") {
    PhyloTree t;
    t.m = 4;
    t.splits.emplace(Split({0, 1}, 4), q(1));
    CHECK_THROWS_AS(project_plucker(plucker_from_tree(t), make_bicoloring({0, 1}, {2, 3}, 4)),
                    PreconditionError);
  }
  SUBCASE("round trip: tree -> vector -> matrix -> bicolored tree") {
    troptest::Rng rng(5150);
    for (int trial = 0; trial < 80; ++trial) {
      const int m = static_cast<int>(rng.integer(4, 7));
      PhyloTree t;
      t.m = m;
      for (const auto& s : troptest::random_maximal_tree_splits(rng, m))
        t.splits.emplace(s, rng.rational(1, 3, 8));
      for (int leaf = 0; leaf < m; ++leaf) t.leaf_lengths.push_back(rng.rational(-2, 2, 8));
      // find an admissible coloring by rejection sampling
      std::vector<int> red, green;
      do {
        red.clear();
        green.clear();
        for (int leaf = 0; leaf < m; ++leaf) (rng.integer(0, 1) ? red : green).push_back(leaf);
      } while (red.empty() || green.empty() ||
               !admissible_bicoloring(t, Bicoloring{red, green}));
      const Bicoloring coloring{red, green};
      const auto a = project_plucker(plucker_from_tree(t), coloring);
      const auto back = bicolored_tree_from_matrix(a);
      // translate the tree's splits into row/column leaf numbering
      std::map<Split, Rational> expected;
      const int d = static_cast<int>(red.size());
      std::map<int, int> new_id;
      for (std::size_t i = 0; i < coloring.red.size(); ++i) new_id[coloring.red[i]] = static_cast<int>(i);
      for (std::size_t j = 0; j < coloring.green.size(); ++j)
        new_id[coloring.green[j]] = d + static_cast<int>(j);
      for (const auto& [s, w] : t.splits) {
        std::vector<int> part;
        for (int leaf : s.part()) part.push_back(new_id[leaf]);
        expected.emplace(Split(std::move(part), m), w);
      }
      CHECK(back.splits == expected);
    }
  }
}

TEST_CASE("elementary split extremes: caterpillars have 2, snowflakes hit the bound") {
  for (int k = 3; k <= 5; ++k) {
    const int m = 2 * k;
    // snowflake: k cherries around one hub
    std::vector<Split> snowflake;
    for (int c = 0; c < k; ++c) snowflake.push_back(Split({2 * c, 2 * c + 1}, m));
    CHECK(static_cast<int>(elementary_splits(snowflake).size()) == k);
    // caterpillar: prefixes of a row of leaves
    std::vector<Split> caterpillar;
    for (int cut = 2; cut <= m - 2; ++cut) {
      std::vector<int> part(cut);
      for (int leaf = 0; leaf < cut; ++leaf) part[leaf] = leaf;
      caterpillar.push_back(Split(std::move(part), m));
    }
    CHECK(static_cast<int>(caterpillar.size()) == m - 3);
    CHECK(elementary_splits(caterpillar).size() == 2);
  }
}

TEST_CASE("a coloring admissible for one tree can fail for the adjacent tree") {
  // splits {1,2} and {1,2,3} vs splits {2,3} and {1,2,3} (1-based labels)
  PhyloTree p, p_adjacent;
  p.m = p_adjacent.m = 5;
  p.splits.emplace(Split({0, 1}, 5), q(1));
  p.splits.emplace(Split({0, 1, 2}, 5), q(1));
  p_adjacent.splits.emplace(Split({1, 2}, 5), q(1));
  p_adjacent.splits.emplace(Split({0, 1, 2}, 5), q(1));
  const auto coloring = make_bicoloring({0, 3}, {1, 2, 4}, 5);
  CHECK(admissible_bicoloring(p, coloring));
  CHECK_FALSE(admissible_bicoloring(p_adjacent, coloring));
}
