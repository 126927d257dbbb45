#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/permutation.hpp"

namespace trop {

// 2-coloring of the Birkhoff graph on all n! permutations induced by a sign
// pattern: an edge (sigma, pi) is green iff the twisted signs
// sgn(sigma) * prod_i s[i][sigma(i)] and sgn(pi) * prod_i s[i][pi(i)] differ.
struct OrthantColoring {
  int n = 0;
  SignPattern signs;
  std::vector<Permutation> vertices;             // lexicographic
  std::vector<int> twisted_sign;                 // per vertex, +-1
  std::vector<std::pair<int, int>> green_edges;  // vertex index pairs, i < j
  std::vector<std::pair<int, int>> red_edges;
};

OrthantColoring orthant_coloring(int n, const SignPattern& s, const Budget& budget = {});

struct CutCheck {
  bool holds;
  // Connected components of the red subgraph, each a sorted vertex index
  // list, ordered by smallest vertex.
  std::vector<std::vector<int>> components;
};

// Green edges form the edge set of a cut: no green edge inside a red
// component, and the quotient graph of red components under green edges is
// bipartite. The red components often number exactly two (all-plus patterns
// give the even permutations and their coset) but can be more: a side of
// the cut need not be red-connected.
CutCheck verify_cut_property(const OrthantColoring& oc);

std::string orthant_dot(const OrthantColoring& oc);

}  // namespace trop
