#pragma once

#include <vector>

#include "trop/rational.hpp"

namespace trop {

// A bipartition of the leaf set {0..universe-1}, stored canonically: the
// kept part is the smaller one, ties broken by lexicographically smaller
// element list. Split sets then compare by plain equality.
class Split {
 public:
  Split(std::vector<int> part, int universe);

  const std::vector<int>& part() const { return part_; }
  std::vector<int> complement() const;
  int universe() const { return universe_; }
  int part_size() const { return static_cast<int>(part_.size()); }

  bool contains(int leaf) const;
  bool separates(int a, int b) const { return contains(a) != contains(b); }

  friend bool operator==(const Split& a, const Split& b) {
    return a.universe_ == b.universe_ && a.part_ == b.part_;
  }
  friend bool operator!=(const Split& a, const Split& b) { return !(a == b); }
  friend bool operator<(const Split& a, const Split& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    if (a.part_.size() != b.part_.size()) return a.part_.size() < b.part_.size();
    return a.part_ < b.part_;
  }

 private:
  std::vector<int> part_;
  int universe_;
};

// One of the four containments holds, equivalently one of the four
// part-intersections is empty.
bool splits_compatible(const Split& s1, const Split& s2);

bool splits_pairwise_compatible(const std::vector<Split>& splits);

// Splits whose smaller part has exactly two leaves.
std::vector<Split> elementary_splits(const std::vector<Split>& splits);

// Unrooted tree realizing a pairwise compatible split system: node 0..m-1
// are leaves, higher ids internal. Exposed for caterpillar tests and DOT.
struct TreeShape {
  int leaves;
  std::vector<std::vector<int>> adjacency;        // node -> sorted neighbors
  std::vector<int> internal_degree;               // per node: incident internal edges
};

TreeShape tree_shape_from_splits(const std::vector<Split>& splits, int leaves);

}  // namespace trop
