#include "trop/plucker.hpp"

#include <algorithm>
#include <optional>

#include "trop/errors.hpp"

namespace trop {

namespace {

std::pair<int, int> key(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

void validate_plucker(const PlueckerVector& p) {
  if (p.m < 3) throw DimensionError("Pluecker vector needs at least 3 leaves");
  if (static_cast<int>(p.coords.size()) != p.m * (p.m - 1) / 2)
    throw DimensionError("Pluecker vector is missing coordinates");
  for (const auto& [ij, v] : p.coords)
    if (ij.first < 0 || ij.first >= ij.second || ij.second >= p.m)
      throw DimensionError("Pluecker coordinate index out of range");
}

}  // namespace

const Rational& PlueckerVector::at(int i, int j) const {
  const auto it = coords.find(key(i, j));
  if (it == coords.end()) throw DimensionError("missing Pluecker coordinate");
  return it->second;
}

Rational& PlueckerVector::at(int i, int j) { return coords[key(i, j)]; }

PlueckerVector zero_plucker(int m) {
  if (m < 3) throw DimensionError("Pluecker vector needs at least 3 leaves");
  PlueckerVector p;
  p.m = m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) p.coords[{i, j}] = 0;
  return p;
}

std::vector<Split> PhyloTree::split_list() const {
  std::vector<Split> out;
  out.reserve(splits.size());
  for (const auto& [s, w] : splits) out.push_back(s);
  return out;
}

bool four_point_check(const PlueckerVector& p) {
  validate_plucker(p);
  for (int i = 0; i < p.m; ++i) {
    for (int j = i + 1; j < p.m; ++j) {
      for (int k = j + 1; k < p.m; ++k) {
        for (int l = k + 1; l < p.m; ++l) {
          const Rational a = p.at(i, j) + p.at(k, l);
          const Rational b = p.at(i, k) + p.at(j, l);
          const Rational c = p.at(i, l) + p.at(j, k);
          const Rational lowest = std::min({a, b, c});
          const int hits = (a == lowest) + (b == lowest) + (c == lowest);
          if (hits < 2) return false;
        }
      }
    }
  }
  return true;
}

PlueckerVector plucker_from_tree(const PhyloTree& tree) {
  if (tree.m < 3) throw DimensionError("tree needs at least 3 leaves");
  if (!tree.leaf_lengths.empty() && static_cast<int>(tree.leaf_lengths.size()) != tree.m)
    throw DimensionError("leaf length vector has wrong size");
  const auto splits = tree.split_list();
  if (!splits_pairwise_compatible(splits))
    throw PreconditionError("split system is not pairwise compatible");
  for (const auto& [s, w] : tree.splits) {
    if (s.universe() != tree.m) throw DimensionError("split universe does not match leaf count");
    if (w <= 0) throw PreconditionError("split weights must be positive");
  }
  PlueckerVector p = zero_plucker(tree.m);
  for (int i = 0; i < tree.m; ++i) {
    for (int j = i + 1; j < tree.m; ++j) {
      Rational len = 0;
      for (const auto& [s, w] : tree.splits)
        if (s.separates(i, j)) len += w;
      if (!tree.leaf_lengths.empty()) len += tree.leaf_lengths[i] + tree.leaf_lengths[j];
      p.coords[{i, j}] = -len;
    }
  }
  return p;
}

PhyloTree tree_from_plucker(const PlueckerVector& p) {
  validate_plucker(p);
  if (!four_point_check(p)) throw PreconditionError("four-point condition fails");
  const int m = p.m;
  auto dist = [&](int i, int j) { return i == j ? Rational(0) : -p.at(i, j); };

  PhyloTree tree;
  tree.m = m;
  // Quartet index over each bipartition with both parts of size >= 2; leaf
  // lengths cancel, so only internal edges are seen.
  for (long long mask = 1; mask < (1LL << (m - 1)); ++mask) {
    std::vector<int> part;
    for (int leaf = 1; leaf < m; ++leaf)
      if (mask & (1LL << (leaf - 1))) part.push_back(leaf);
    if (part.size() < 2 || part.size() > static_cast<std::size_t>(m - 2)) continue;
    Split s(part, m);
    const auto& inside = s.part();
    const auto outside = s.complement();
    // Distinct pairs on both sides: every leaf then appears once positively
    // and once negatively, so leaf lengths cancel. A nonpositive value
    // already rejects the bipartition, so the scan stops there.
    std::optional<Rational> best;
    bool rejected = false;
    for (std::size_t ii = 0; ii < inside.size() && !rejected; ++ii)
      for (std::size_t jj = 0; jj < inside.size() && !rejected; ++jj) {
        if (ii == jj) continue;
        const int i = inside[ii], j = inside[jj];
        for (std::size_t kk = 0; kk < outside.size() && !rejected; ++kk)
          for (std::size_t ll = 0; ll < outside.size(); ++ll) {
            if (kk == ll) continue;
            const int k = outside[kk], l = outside[ll];
            const Rational v = dist(i, k) + dist(j, l) - dist(i, j) - dist(k, l);
            if (!best || v < *best) {
              best = v;
              if (*best <= 0) {
                rejected = true;
                break;
              }
            }
          }
      }
    if (!rejected && *best > 0) tree.splits.emplace(s, *best / 2);
  }
  if (!splits_pairwise_compatible(tree.split_list()))
    throw InternalError("splits recovered from Pluecker vector are incompatible");

  // Remaining metric is leaf lengths: residual R_ij = D_ij - (split part)
  // must equal l_i + l_j for every pair.
  auto residual = [&](int i, int j) {
    Rational r = dist(i, j);
    for (const auto& [s, w] : tree.splits)
      if (s.separates(i, j)) r -= w;
    return r;
  };
  tree.leaf_lengths.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    int j = (i == 0) ? 1 : 0;
    int k = (i <= 1) ? 2 : 1;
    tree.leaf_lengths[i] = (residual(i, j) + residual(i, k) - residual(j, k)) / 2;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (residual(i, j) != tree.leaf_lengths[i] + tree.leaf_lengths[j])
        throw InternalError("metric does not decompose into splits and leaf lengths");
  return tree;
}

Bicoloring make_bicoloring(std::vector<int> red, std::vector<int> green, int m) {
  std::sort(red.begin(), red.end());
  std::sort(green.begin(), green.end());
  std::vector<bool> seen(m, false);
  for (int x : red) {
    if (x < 0 || x >= m || seen[x]) throw DimensionError("coloring is not a partition");
    seen[x] = true;
  }
  for (int x : green) {
    if (x < 0 || x >= m || seen[x]) throw DimensionError("coloring is not a partition");
    seen[x] = true;
  }
  if (red.empty() || green.empty()) throw DimensionError("both color classes must be nonempty");
  for (bool b : seen)
    if (!b) throw DimensionError("coloring does not cover all leaves");
  return Bicoloring{std::move(red), std::move(green)};
}

bool admissible_bicoloring(const PhyloTree& tree, const Bicoloring& coloring) {
  std::vector<bool> is_red(tree.m, false);
  for (int x : coloring.red) is_red[x] = true;
  for (const auto& [s, w] : tree.splits) {
    bool red_in = false, green_in = false, red_out = false, green_out = false;
    for (int leaf = 0; leaf < tree.m; ++leaf) {
      const bool in = s.contains(leaf);
      if (is_red[leaf])
        (in ? red_in : red_out) = true;
      else
        (in ? green_in : green_out) = true;
    }
    if (!(red_in && green_in) || !(red_out && green_out)) return false;
  }
  return true;
}

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int t = 0; t < k; ++t) out = out * (n - t) / (t + 1);
  return out;
}

}  // namespace

long long count_bicolorings(const PhyloTree& tree, int d, int n) {
  if (d < 1 || n < 1 || d + n != tree.m) throw DimensionError("d + n must equal the leaf count");
  if (!tree.maximal()) throw PreconditionError("bicoloring count requires a maximal tree");
  if (tree.m == 4) return (d == 2 && n == 2) ? 4 : 0;
  const int k = static_cast<int>(elementary_splits(tree.split_list()).size());
  if (k > std::min(d, n)) return 0;
  return (1LL << k) * binomial(d + n - 2 * k, d - k);
}

TropicalMatrix project_plucker(const PlueckerVector& p, const Bicoloring& coloring) {
  const PhyloTree tree = tree_from_plucker(p);
  if (static_cast<int>(coloring.red.size() + coloring.green.size()) != p.m)
    throw DimensionError("coloring size does not match the Pluecker vector");
  make_bicoloring(coloring.red, coloring.green, p.m);  // validates the partition
  if (!admissible_bicoloring(tree, coloring))
    throw PreconditionError("coloring is not admissible for the tree");
  TropicalMatrix out(static_cast<int>(coloring.red.size()),
                     static_cast<int>(coloring.green.size()));
  for (std::size_t i = 0; i < coloring.red.size(); ++i)
    for (std::size_t j = 0; j < coloring.green.size(); ++j)
      out(static_cast<int>(i), static_cast<int>(j)) = p.at(coloring.red[i], coloring.green[j]);
  return out;
}

}  // namespace trop
