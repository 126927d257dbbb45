#include "trop/tree.hpp"

#include <optional>
#include <sstream>

#include "trop/errors.hpp"
#include "trop/rank.hpp"
#include "trop/semiring.hpp"

namespace trop {

bool split_is_bicolored(const Split& s, int d, int n) {
  if (s.universe() != d + n) throw DimensionError("split universe is not d+n");
  bool red_in = false, green_in = false, red_out = false, green_out = false;
  for (int i = 0; i < d; ++i) (s.contains(red_leaf(i)) ? red_in : red_out) = true;
  for (int j = 0; j < n; ++j) (s.contains(green_leaf(d, j)) ? green_in : green_out) = true;
  return red_in && green_in && red_out && green_out;
}

std::vector<Split> BicoloredTree::split_list() const {
  std::vector<Split> out;
  out.reserve(splits.size());
  for (const auto& [s, w] : splits) out.push_back(s);
  return out;
}

namespace {

// Quartet minimum; with early_exit the scan stops at the first nonpositive
// value (enough to reject a non-split), returning that value.
Rational split_index(const TropicalMatrix& a, const Split& s, bool early_exit) {
  const int d = a.rows(), n = a.cols();
  std::vector<int> red_in, red_out, green_in, green_out;
  for (int i = 0; i < d; ++i) (s.contains(red_leaf(i)) ? red_in : red_out).push_back(i);
  for (int j = 0; j < n; ++j) (s.contains(green_leaf(d, j)) ? green_in : green_out).push_back(j);
  std::optional<Rational> best;
  for (int i : red_in)
    for (int j : green_in)
      for (int k : red_out)
        for (int l : green_out) {
          const Rational v = a(i, j) + a(k, l) - a(i, l) - a(k, j);
          if (!best || v < *best) {
            best = v;
            if (early_exit && *best <= 0) return *best / 2;
          }
        }
  return *best / 2;
}

}  // namespace

Rational split_weight(const TropicalMatrix& a, const Split& s) {
  if (!is_canonicalized(a)) throw PreconditionError("split_weight expects a canonicalized matrix");
  if (!split_is_bicolored(s, a.rows(), a.cols()))
    throw PreconditionError("split is not bicolored");
  return split_index(a, s, false);
}

BicoloredTree bicolored_tree_from_matrix(const TropicalMatrix& a, const Budget& budget) {
  const int d = a.rows(), n = a.cols();
  if (tropical_rank(a, budget) > 2)
    throw PreconditionError("matrix has tropical rank > 2, no tree is defined");
  const TropicalMatrix canon = canonicalize_mod_lineality(a);

  BicoloredTree tree;
  tree.d = d;
  tree.n = n;
  const int m = d + n;
  // Enumerate each bipartition once by keeping leaf 0 on the complement side.
  for (long long mask = 1; mask < (1LL << (m - 1)); ++mask) {
    std::vector<int> part;
    for (int leaf = 1; leaf < m; ++leaf)
      if (mask & (1LL << (leaf - 1))) part.push_back(leaf);
    Split s(std::move(part), m);
    if (!split_is_bicolored(s, d, n)) continue;
    const Rational w = split_index(canon, s, true);
    if (w > 0) tree.splits.emplace(s, w);
  }

  if (!splits_pairwise_compatible(tree.split_list()))
    throw InternalError("reconstructed splits are not pairwise compatible");
  if (canonicalize_mod_lineality(matrix_from_bicolored_tree(tree)) != canon)
    throw InternalError("reconstructed tree does not reproduce the matrix");
  return tree;
}

bool is_caterpillar(const BicoloredTree& t) {
  const auto shape = tree_shape_from_splits(t.split_list(), t.d + t.n);
  for (int deg : shape.internal_degree)
    if (deg > 2) return false;
  return true;
}

bool positivity_rank2(const TropicalMatrix& a, const Budget& budget) {
  return is_caterpillar(bicolored_tree_from_matrix(a, budget));
}

TropicalMatrix split_matrix(const Split& s, const Rational& lambda, int d, int n) {
  if (!split_is_bicolored(s, d, n)) throw PreconditionError("split is not bicolored");
  TropicalMatrix out(d, n, Rational(0));
  for (int j = 0; j < n; ++j) {
    const bool green_side = s.contains(green_leaf(d, j));
    for (int i = 0; i < d; ++i)
      if (s.contains(red_leaf(i)) != green_side) out(i, j) = -lambda;
  }
  return out;
}

TropicalMatrix matrix_from_bicolored_tree(const BicoloredTree& t) {
  TropicalMatrix out(t.d, t.n, Rational(0));
  for (const auto& [s, w] : t.splits) {
    for (int i = 0; i < t.d; ++i)
      for (int j = 0; j < t.n; ++j)
        if (s.separates(red_leaf(i), green_leaf(t.d, j))) out(i, j) -= w;
  }
  return out;
}

std::string tree_dot(const BicoloredTree& t) {
  const auto shape = tree_shape_from_splits(t.split_list(), t.d + t.n);
  std::ostringstream os;
  os << "graph bicolored_tree {\n  node [shape=circle];\n";
  for (int i = 0; i < t.d; ++i)
    os << "  v" << red_leaf(i) << " [label=\"r" << i + 1 << "\", color=red, fontcolor=red];\n";
  for (int j = 0; j < t.n; ++j)
    os << "  v" << green_leaf(t.d, j) << " [label=\"g" << j + 1
       << "\", color=green, fontcolor=green];\n";
  for (int v = t.d + t.n; v < static_cast<int>(shape.adjacency.size()); ++v)
    os << "  v" << v << " [shape=point, label=\"\"];\n";
  for (int v = 0; v < static_cast<int>(shape.adjacency.size()); ++v)
    for (int w : shape.adjacency[v])
      if (v < w) os << "  v" << v << " -- v" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace trop
