#pragma once

#include <random>
#include <vector>

#include "trop/matrix.hpp"
#include "trop/permutation.hpp"
#include "trop/rational.hpp"
#include "trop/splits.hpp"

namespace troptest {

using trop::Rational;
using trop::TropicalMatrix;

inline TropicalMatrix mat(const std::vector<std::vector<long>>& grid) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : grid) {
    std::vector<Rational> row;
    for (long x : r) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  return TropicalMatrix(rows);
}

inline Rational q(long num, long den = 1) { return trop::make_rational(num, den); }

// Deterministic random rationals with small denominators.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Rational rational(long lo, long hi, long max_den = 4) {
    return trop::make_rational(integer(lo * max_den, hi * max_den), max_den);
  }

  TropicalMatrix matrix(int rows, int cols, long lo = -6, long hi = 6, long max_den = 4) {
    TropicalMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a(i, j) = rational(lo, hi, max_den);
    return a;
  }

  trop::Permutation permutation(int m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), gen_);
    return trop::Permutation(img);
  }

  std::mt19937& gen() { return gen_; }

 private:
  std::mt19937 gen_;
};

// Random maximal (binary) tree on m leaves via sequential edge insertion;
// returns the m-3 splits induced by the internal edges.
inline std::vector<trop::Split> random_maximal_tree_splits(Rng& rng, int m) {
  struct Edge {
    int u, v;
  };
  // nodes: 0..m-1 leaves; internal nodes from m upward
  std::vector<Edge> edges;
  int next_node = m;
  {
    const int hub = next_node++;
    edges.push_back({0, hub});
    edges.push_back({1, hub});
    edges.push_back({2, hub});
  }
  for (int leaf = 3; leaf < m; ++leaf) {
    const int pick = static_cast<int>(rng.integer(0, static_cast<long>(edges.size()) - 1));
    const Edge old = edges[pick];
    const int mid = next_node++;
    edges[pick] = {old.u, mid};
    edges.push_back({mid, old.v});
    edges.push_back({leaf, mid});
  }
  std::vector<std::vector<int>> adj(next_node);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<trop::Split> splits;
  for (const auto& e : edges) {
    if (e.u < m || e.v < m) continue;  // leaf edge
    // leaves on the u-side of the cut edge
    std::vector<int> side;
    std::vector<bool> seen(next_node, false);
    seen[e.v] = true;
    std::vector<int> stack{e.u};
    seen[e.u] = true;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      if (cur < m) side.push_back(cur);
      for (int nb : adj[cur])
        if (!seen[nb]) {
          seen[nb] = true;
          stack.push_back(nb);
        }
    }
    splits.emplace_back(side, m);
  }
  return splits;
}

}  // namespace troptest
