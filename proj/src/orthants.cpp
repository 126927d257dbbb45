#include "trop/orthants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

OrthantColoring orthant_coloring(int n, const SignPattern& s, const Budget& budget) {
  if (n < 2) throw DimensionError("orthant coloring needs n >= 2");
  if (n > budget.birkhoff_max_n)
    throw BudgetError("Birkhoff graph on " + std::to_string(n) + "! vertices exceeds the budget");
  if (s.rows() != n || s.cols() != n) throw DimensionError("sign pattern must be n x n");
  validate_sign_pattern(s);

  OrthantColoring oc;
  oc.n = n;
  oc.signs = s;
  oc.vertices = all_permutations(n);
  oc.twisted_sign.reserve(oc.vertices.size());
  for (const auto& p : oc.vertices) {
    int sign = p.sign();
    for (int i = 0; i < n; ++i) sign *= s(i, p(i));
    oc.twisted_sign.push_back(sign);
  }
  const int count = static_cast<int>(oc.vertices.size());
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (!is_birkhoff_edge(oc.vertices[i], oc.vertices[j])) continue;
      if (oc.twisted_sign[i] != oc.twisted_sign[j])
        oc.green_edges.emplace_back(i, j);
      else
        oc.red_edges.emplace_back(i, j);
    }
  }
  return oc;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CutCheck verify_cut_property(const OrthantColoring& oc) {
  const int count = static_cast<int>(oc.vertices.size());
  UnionFind uf(count);
  for (const auto& [a, b] : oc.red_edges) uf.unite(a, b);

  std::map<int, int> component_id;
  CutCheck check;
  std::vector<int> comp_of(count);
  for (int v = 0; v < count; ++v) {
    const int root = uf.find(v);
    const auto it = component_id.find(root);
    if (it == component_id.end()) {
      component_id[root] = static_cast<int>(check.components.size());
      check.components.emplace_back();
    }
    comp_of[v] = component_id[root];
    check.components[comp_of[v]].push_back(v);
  }

  // Green edges form a cut iff no green edge stays inside a red component
  // and the component quotient graph is bipartite: then one side of the
  // bipartition collects the red pieces of each part.
  check.holds = true;
  const int k = static_cast<int>(check.components.size());
  std::vector<std::vector<int>> quotient(k);
  for (const auto& [a, b] : oc.green_edges) {
    if (comp_of[a] == comp_of[b]) {
      check.holds = false;
      return check;
    }
    quotient[comp_of[a]].push_back(comp_of[b]);
    quotient[comp_of[b]].push_back(comp_of[a]);
  }
  std::vector<int> side(k, -1);
  for (int start = 0; start < k && check.holds; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty() && check.holds) {
      const int cur = stack.back();
      stack.pop_back();
      for (int nb : quotient[cur]) {
        if (side[nb] < 0) {
          side[nb] = 1 - side[cur];
          stack.push_back(nb);
        } else if (side[nb] == side[cur]) {
          check.holds = false;
        }
      }
    }
  }
  return check;
}

std::string orthant_dot(const OrthantColoring& oc) {
  std::ostringstream os;
  os << "graph orthant_coloring {\n";
  for (std::size_t v = 0; v < oc.vertices.size(); ++v)
    os << "  p" << v << " [label=\"" << oc.vertices[v].cycle_str() << "\"];\n";
  for (const auto& [a, b] : oc.red_edges)
    os << "  p" << a << " -- p" << b << " [color=red];\n";
  for (const auto& [a, b] : oc.green_edges)
    os << "  p" << a << " -- p" << b << " [color=green];\n";
  os << "}\n";
  return os.str();
}

}  // namespace trop
