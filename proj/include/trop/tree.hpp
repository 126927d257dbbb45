#pragma once

#include <map>
#include <string>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/splits.hpp"

namespace trop {

// Leaf numbering for bicolored split systems: red leaf i (a matrix row) is
// leaf i, green leaf j (a matrix column) is leaf d + j.
inline int red_leaf(int i) { return i; }
inline int green_leaf(int d, int j) { return d + j; }

bool split_is_bicolored(const Split& s, int d, int n);

// Weighted compatible system of bicolored splits on d red and n green
// leaves; the combinatorial shadow of a matrix of tropical rank <= 2.
struct BicoloredTree {
  int d = 0;
  int n = 0;
  std::map<Split, Rational> splits;  // weights are > 0

  std::vector<Split> split_list() const;
  bool maximal() const { return static_cast<int>(splits.size()) == d + n - 3; }
};

// Quartet index of a bicolored split against a canonicalized matrix:
//   1/2 * min over red i, green j in U and red k, green l outside U of
//         A[i][j] + A[k][l] - A[i][l] - A[k][j].
// Positive exactly for the splits of the tree, in which case it is the
// split's weight in the tree metric induced by -A.
Rational split_weight(const TropicalMatrix& canonical_a, const Split& s);

// Reconstructs the bicolored tree of a matrix of tropical rank <= 2 by
// scoring every bicolored split. Verifies pairwise compatibility and that
// cross path-lengths reproduce the matrix modulo lineality; failures of
// either check raise InternalError.
BicoloredTree bicolored_tree_from_matrix(const TropicalMatrix& a, const Budget& budget = {});

// Every vertex is incident to at most two internal edges.
bool is_caterpillar(const BicoloredTree& t);

// Membership in the positive rank-2 prevariety, decided through the tree.
bool positivity_rank2(const TropicalMatrix& a, const Budget& budget = {});

// The matrix of the split tree with weight lambda: columns on one side get
// -lambda on the rows of the other side.
TropicalMatrix split_matrix(const Split& s, const Rational& lambda, int d, int n);

// Cross path-length matrix -sum of separating weights; inverse of the
// reconstruction up to lineality.
TropicalMatrix matrix_from_bicolored_tree(const BicoloredTree& t);

std::string tree_dot(const BicoloredTree& t);

}  // namespace trop
