#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/permutation.hpp"
#include "trop/semiring.hpp"

namespace trop {

// Bipartite graph on row vertices r_1..r_d and column vertices g_1..g_n,
// edges stored as 0-based (row, col) pairs.
struct BipartiteLabel {
  int d = 0;
  int n = 0;
  std::set<std::pair<int, int>> edges;

  int row_degree(int i) const;
  int col_degree(int j) const;

  friend bool operator==(const BipartiteLabel& a, const BipartiteLabel& b) {
    return a.d == b.d && a.n == b.n && a.edges == b.edges;
  }
};

// A permutation of a square index selection, read as the map i_k -> j_{sigma(k)}.
struct EmbeddedPermutation {
  MinorIndex index;
  Permutation sigma;
};

// All embedded permutations attaining the minor's assignment optimum.
std::vector<EmbeddedPermutation> minor_argmin_face(const TropicalMatrix& a, const MinorIndex& ij,
                                                   const Budget& budget = {});

// Union over every (r+1)-sized row/column selection of the edges used by the
// optimum face. Requires membership in the rank-r prevariety.
BipartiteLabel label_graph(const TropicalMatrix& a, int r, const Budget& budget = {});

BipartiteLabel bipartite_complement(const BipartiteLabel& g);

// Degree bound satisfied by every label of a prevariety cone: row degrees at
// least n - r and column degrees at least d - r.
bool label_degree_check(const BipartiteLabel& g, int r);

struct ParityCheckResult {
  bool ok;
  std::optional<MinorIndex> violating;  // first (I, J) without an even-cycle witness
};

// Necessary condition for positivity: every induced (r+1)+(r+1) subgraph
// contains a cycle of length 2l with l even plus a perfect matching of the
// remaining vertices.
ParityCheckResult label_positivity_necessary(const BipartiteLabel& g, int r);

// Classification of labels of maximal rank-2 cones: positive iff the
// complement is two vertex-disjoint 2-edge paths plus isolated vertices.
bool rank2_label_is_positive(const BipartiteLabel& g);

std::string label_dot(const BipartiteLabel& g);

}  // namespace trop
