#pragma once

#include <map>
#include <utility>
#include <vector>

#include "trop/matrix.hpp"
#include "trop/splits.hpp"

namespace trop {

// Point of the tropical Grassmannian of lines: one coordinate per 2-subset
// of {0..m-1}. -p_ij is the path length between leaves i and j of the
// corresponding metric tree (internal edge weights plus leaf lengths).
struct PlueckerVector {
  int m = 0;
  std::map<std::pair<int, int>, Rational> coords;  // keys (i, j) with i < j

  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);
};

PlueckerVector zero_plucker(int m);

// Uncolored metric tree: compatible splits with positive weights plus
// (possibly negative) leaf lengths, the lineality component.
struct PhyloTree {
  int m = 0;
  std::map<Split, Rational> splits;
  std::vector<Rational> leaf_lengths;

  std::vector<Split> split_list() const;
  bool maximal() const { return static_cast<int>(splits.size()) == m - 3; }
};

// For every 4-subset, the minimum of the three pairings is attained at
// least twice.
bool four_point_check(const PlueckerVector& p);

// -p_ij = sum of weights of splits separating i and j, plus the two leaf
// lengths. Requires pairwise compatible splits with positive weights.
PlueckerVector plucker_from_tree(const PhyloTree& tree);

// Inverse via the quartet index on the full metric; exact round trip.
// Validates the four-point condition first.
PhyloTree tree_from_plucker(const PlueckerVector& p);

// Partition of {0..m-1} into red and green classes.
struct Bicoloring {
  std::vector<int> red;
  std::vector<int> green;
};

Bicoloring make_bicoloring(std::vector<int> red, std::vector<int> green, int m);

// No split of the tree has a monochromatic part.
bool admissible_bicoloring(const PhyloTree& tree, const Bicoloring& coloring);

// Number of (d,n)-bicolorings of a maximal tree: 0 when the elementary
// split count k exceeds min(d,n), else 2^k * C(d+n-2k, d-k); the 4-leaf
// tree is the special case where only d = n = 2 admits colorings.
long long count_bicolorings(const PhyloTree& tree, int d, int n);

// Keep only the red-green coordinates: M[i][j] = p_{red_i, green_j} with
// both classes sorted. Requires the coloring to be admissible for the tree
// of p.
TropicalMatrix project_plucker(const PlueckerVector& p, const Bicoloring& coloring);

}  // namespace trop
