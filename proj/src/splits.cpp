#include "trop/splits.hpp"

#include <algorithm>

#include "trop/errors.hpp"

namespace trop {

Split::Split(std::vector<int> part, int universe) : part_(std::move(part)), universe_(universe) {
  if (universe_ < 2) throw DimensionError("split universe too small");
  std::sort(part_.begin(), part_.end());
  part_.erase(std::unique(part_.begin(), part_.end()), part_.end());
  if (part_.empty()) throw DimensionError("split part is empty");
  if (part_.front() < 0 || part_.back() >= universe_) throw DimensionError("split leaf out of range");
  if (static_cast<int>(part_.size()) == universe_) throw DimensionError("split complement is empty");
  const int other = universe_ - static_cast<int>(part_.size());
  if (other < static_cast<int>(part_.size())) {
    part_ = complement();
  } else if (other == static_cast<int>(part_.size())) {
    auto comp = complement();
    if (comp < part_) part_ = std::move(comp);
  }
}

std::vector<int> Split::complement() const {
  std::vector<int> out;
  out.reserve(universe_ - part_.size());
  std::size_t k = 0;
  for (int leaf = 0; leaf < universe_; ++leaf) {
    if (k < part_.size() && part_[k] == leaf) {
      ++k;
    } else {
      out.push_back(leaf);
    }
  }
  return out;
}

bool Split::contains(int leaf) const {
  return std::binary_search(part_.begin(), part_.end(), leaf);
}

bool splits_compatible(const Split& s1, const Split& s2) {
  if (s1.universe() != s2.universe()) throw DimensionError("splits on different leaf sets");
  bool meet[2][2] = {{false, false}, {false, false}};
  for (int leaf = 0; leaf < s1.universe(); ++leaf)
    meet[s1.contains(leaf) ? 1 : 0][s2.contains(leaf) ? 1 : 0] = true;
  return !meet[0][0] || !meet[0][1] || !meet[1][0] || !meet[1][1];
}

bool splits_pairwise_compatible(const std::vector<Split>& splits) {
  for (std::size_t i = 0; i < splits.size(); ++i)
    for (std::size_t j = i + 1; j < splits.size(); ++j)
      if (!splits_compatible(splits[i], splits[j])) return false;
  return true;
}

std::vector<Split> elementary_splits(const std::vector<Split>& splits) {
  std::vector<Split> out;
  for (const auto& s : splits)
    if (s.part_size() == 2) out.push_back(s);
  return out;
}

TreeShape tree_shape_from_splits(const std::vector<Split>& splits, int leaves) {
  if (leaves < 2) throw DimensionError("a tree needs at least two leaves");
  for (const auto& s : splits)
    if (s.universe() != leaves) throw DimensionError("split universe does not match leaf count");
  if (!splits_pairwise_compatible(splits))
    throw PreconditionError("split system is not pairwise compatible");

  // The sides avoiding leaf 0 form a laminar family; build bottom-up.
  std::vector<std::vector<int>> sides;
  for (const auto& s : splits) sides.push_back(s.contains(0) ? s.complement() : s.part());
  std::sort(sides.begin(), sides.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

  TreeShape shape;
  shape.leaves = leaves;
  std::vector<std::vector<int>> adj(leaves);

  struct Unit {
    int root;
    std::vector<int> leafset;
  };
  std::vector<Unit> units;
  for (int leaf = 0; leaf < leaves; ++leaf) units.push_back({leaf, {leaf}});

  auto new_node = [&]() {
    adj.emplace_back();
    return static_cast<int>(adj.size()) - 1;
  };
  auto connect = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  for (const auto& side : sides) {
    const int node = new_node();
    std::vector<int> merged;
    std::vector<Unit> rest;
    for (auto& unit : units) {
      if (std::includes(side.begin(), side.end(), unit.leafset.begin(), unit.leafset.end())) {
        connect(node, unit.root);
        merged.insert(merged.end(), unit.leafset.begin(), unit.leafset.end());
      } else {
        rest.push_back(std::move(unit));
      }
    }
    std::sort(merged.begin(), merged.end());
    if (merged != side) throw InternalError("laminar assembly failed for split system");
    rest.push_back({node, std::move(merged)});
    units = std::move(rest);
  }

  const int center = new_node();
  for (const auto& unit : units) connect(center, unit.root);

  for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());
  shape.adjacency = adj;
  shape.internal_degree.assign(adj.size(), 0);
  // An edge is internal iff both endpoints are non-leaf nodes; there is one
  // such edge per split.
  for (int node = 0; node < static_cast<int>(adj.size()); ++node)
    for (int other : adj[node])
      if (node < other && node >= leaves && other >= leaves) {
        ++shape.internal_degree[node];
        ++shape.internal_degree[other];
      }
  return shape;
}

}  // namespace trop
