#include "trop/labels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "trop/errors.hpp"
#include "trop/rank.hpp"

namespace trop {

int BipartiteLabel::row_degree(int i) const {
  int deg = 0;
  for (const auto& [r, g] : edges) deg += (r == i);
  return deg;
}

int BipartiteLabel::col_degree(int j) const {
  int deg = 0;
  for (const auto& [r, g] : edges) deg += (g == j);
  return deg;
}

std::vector<EmbeddedPermutation> minor_argmin_face(const TropicalMatrix& a, const MinorIndex& ij,
                                                   const Budget& budget) {
  check_minor_in_range(ij, a.rows(), a.cols());
  const auto det = tropical_det(submatrix(a, ij), budget);
  std::vector<EmbeddedPermutation> out;
  out.reserve(det.optima.size());
  for (const auto& p : det.optima) out.push_back(EmbeddedPermutation{ij, p});
  return out;
}

namespace {

void for_each_selection(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (int x = from; x <= n - (k - pos); ++x) {
      idx[pos] = x;
      rec(pos + 1, x + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

BipartiteLabel label_graph(const TropicalMatrix& a, int r, const Budget& budget) {
  const int d = a.rows(), n = a.cols();
  if (r < 1 || r > std::min(d, n)) throw DimensionError("label rank out of range");
  if (!prevariety_member(a, r, budget).member)
    throw PreconditionError("matrix is not in the rank-" + std::to_string(r) + " prevariety");
  BipartiteLabel out;
  out.d = d;
  out.n = n;
  if (r == std::min(d, n)) {
    // no (r+1)-minors: the label is the complete bipartite graph
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) out.edges.emplace(i, j);
    return out;
  }
  for_each_selection(d, r + 1, [&](const std::vector<int>& rows) {
    for_each_selection(n, r + 1, [&](const std::vector<int>& cols) {
      for (const auto& emb : minor_argmin_face(a, MinorIndex(rows, cols), budget))
        for (int k = 0; k <= r; ++k) out.edges.emplace(rows[k], cols[emb.sigma(k)]);
    });
  });
  return out;
}

BipartiteLabel bipartite_complement(const BipartiteLabel& g) {
  BipartiteLabel out;
  out.d = g.d;
  out.n = g.n;
  for (int i = 0; i < g.d; ++i)
    for (int j = 0; j < g.n; ++j)
      if (!g.edges.count({i, j})) out.edges.emplace(i, j);
  return out;
}

bool label_degree_check(const BipartiteLabel& g, int r) {
  for (int i = 0; i < g.d; ++i)
    if (g.row_degree(i) < g.n - r) return false;
  for (int j = 0; j < g.n; ++j)
    if (g.col_degree(j) < g.d - r) return false;
  return true;
}

namespace {

// Perfect matchings of the induced (r+1)+(r+1) subgraph, as permutations of
// the selection.
std::vector<Permutation> induced_matchings(const BipartiteLabel& g, const std::vector<int>& rows,
                                           const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& p) {
    for (int t = 0; t < k; ++t)
      if (!g.edges.count({rows[t], cols[p(t)]})) return;
    out.push_back(p);
  });
  return out;
}

bool has_even_cycle_witness(const BipartiteLabel& g, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  const auto matchings = induced_matchings(g, rows, cols);
  for (std::size_t x = 0; x < matchings.size(); ++x) {
    for (std::size_t y = x + 1; y < matchings.size(); ++y) {
      const auto cyc = matchings[x].compose(matchings[y].inverse()).cycles(false);
      // union of the two matchings = one cycle of length 2l plus a perfect
      // matching of the fixed points; the criterion wants l even
      if (cyc.size() == 1 && cyc.front().size() % 2 == 0) return true;
    }
  }
  return false;
}

}  // namespace

ParityCheckResult label_positivity_necessary(const BipartiteLabel& g, int r) {
  if (r < 1 || r + 1 > std::min(g.d, g.n)) throw DimensionError("label rank out of range");
  ParityCheckResult res{true, std::nullopt};
  for_each_selection(g.d, r + 1, [&](const std::vector<int>& rows) {
    if (!res.ok) return;
    for_each_selection(g.n, r + 1, [&](const std::vector<int>& cols) {
      if (!res.ok) return;
      if (!has_even_cycle_witness(g, rows, cols)) {
        res.ok = false;
        res.violating = MinorIndex(rows, cols);
      }
    });
  });
  return res;
}

bool rank2_label_is_positive(const BipartiteLabel& g) {
  const auto comp = bipartite_complement(g);
  if (comp.edges.size() != 4) return false;
  // vertices: rows 0..d-1, columns d..d+n-1
  std::map<int, std::vector<int>> adj;
  for (const auto& [i, j] : comp.edges) {
    adj[i].push_back(g.d + j);
    adj[g.d + j].push_back(i);
  }
  // two components, each a path with 2 edges: degree sequence 1,2,1
  std::map<int, int> comp_id;
  int next_id = 0;
  for (const auto& [v, _] : adj) {
    if (comp_id.count(v)) continue;
    std::vector<int> stack{v};
    comp_id[v] = next_id;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (int w : adj[cur]) {
        if (!comp_id.count(w)) {
          comp_id[w] = next_id;
          stack.push_back(w);
        }
      }
    }
    ++next_id;
  }
  if (next_id != 2) return false;
  std::vector<int> sizes(2, 0), deg2(2, 0), deg1(2, 0);
  for (const auto& [v, neighbors] : adj) {
    ++sizes[comp_id[v]];
    if (neighbors.size() == 2) ++deg2[comp_id[v]];
    if (neighbors.size() == 1) ++deg1[comp_id[v]];
    if (neighbors.size() > 2) return false;
  }
  for (int c = 0; c < 2; ++c)
    if (sizes[c] != 3 || deg2[c] != 1 || deg1[c] != 2) return false;
  return true;
}

std::string label_dot(const BipartiteLabel& g) {
  std::ostringstream os;
  os << "graph label {\n  rankdir=LR;\n";
  for (int i = 0; i < g.d; ++i)
    os << "  r" << i + 1 << " [shape=circle, color=red, fontcolor=red];\n";
  for (int j = 0; j < g.n; ++j)
    os << "  g" << j + 1 << " [shape=circle, color=green, fontcolor=green];\n";
  for (const auto& [i, j] : g.edges) os << "  r" << i + 1 << " -- g" << j + 1 << ";\n";
  for (const auto& [i, j] : bipartite_complement(g).edges)
    os << "  r" << i + 1 << " -- g" << j + 1 << " [color=red, style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace trop
