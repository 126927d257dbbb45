#include "trop/cartoon.hpp"

#include <algorithm>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

Cartoon cartoon_of_edge(const Permutation& sigma, const Permutation& pi) {
  if (!is_birkhoff_edge(sigma, pi))
    throw PreconditionError("permutations do not form a Birkhoff edge");
  const Permutation si = sigma.inverse(), pin = pi.inverse();
  Cartoon c;
  c.n = sigma.size();
  for (int j = 0; j < c.n; ++j) {
    const int a = si(j), b = pin(j);
    if (a == b)
      c.node_marks.push_back(a);
    else
      c.edge_marks.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(c.edge_marks.begin(), c.edge_marks.end());
  std::sort(c.node_marks.begin(), c.node_marks.end());
  return c;
}

namespace {

struct Mark {
  bool on_edge;
  int a, b;  // edge endpoints, or node in a

  // Lies on the closed edge {x, y}: interior for its own edge, endpoint
  // incidence for node marks.
  bool lies_on(int x, int y) const {
    if (on_edge) return (a == x && b == y) || (a == y && b == x);
    return a == x || a == y;
  }
};

}  // namespace

bool cartoon_has_marked_triangle(const Cartoon& c) {
  std::vector<Mark> marks;
  for (const auto& [a, b] : c.edge_marks) marks.push_back({true, a, b});
  for (int v : c.node_marks) marks.push_back({false, v, v});
  const int total = static_cast<int>(marks.size());
  if (total < 3) return false;
  for (int x = 0; x < c.n; ++x) {
    for (int y = x + 1; y < c.n; ++y) {
      for (int z = y + 1; z < c.n; ++z) {
        // triangle edges xy, yz, xz; try all injective mark assignments
        for (int m1 = 0; m1 < total; ++m1) {
          if (!marks[m1].lies_on(x, y)) continue;
          for (int m2 = 0; m2 < total; ++m2) {
            if (m2 == m1 || !marks[m2].lies_on(y, z)) continue;
            for (int m3 = 0; m3 < total; ++m3) {
              if (m3 == m1 || m3 == m2) continue;
              if (marks[m3].lies_on(x, z)) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

std::string cartoon_dot(const Cartoon& c) {
  std::ostringstream os;
  os << "graph cartoon {\n  layout=circo;\n";
  for (int v = 0; v < c.n; ++v) {
    const long hits = std::count(c.node_marks.begin(), c.node_marks.end(), v);
    os << "  v" << v + 1 << " [label=\"v" << v + 1 << (hits ? "*" : "") << "\""
       << (hits ? ", style=filled, fillcolor=black, fontcolor=white" : "") << "];\n";
  }
  // marks drawn as labeled midpoints on their edge
  int mid = 0;
  std::vector<std::pair<int, int>> marked;
  for (const auto& [a, b] : c.edge_marks) {
    os << "  m" << mid << " [shape=point, width=0.12];\n";
    os << "  v" << a + 1 << " -- m" << mid << " -- v" << b + 1 << ";\n";
    marked.emplace_back(a, b);
    ++mid;
  }
  for (int a = 0; a < c.n; ++a)
    for (int b = a + 1; b < c.n; ++b)
      if (std::find(marked.begin(), marked.end(), std::make_pair(a, b)) == marked.end())
        os << "  v" << a + 1 << " -- v" << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace trop
