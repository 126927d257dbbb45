#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trop/permutation.hpp"

namespace trop {

// Decorated complete graph K_n recording, per column j, which pair of rows
// attains the minimum on a Birkhoff edge: a mark on edge {a, b} when the two
// rows differ, a mark on node a when they coincide. Multisets, 0-based.
struct Cartoon {
  int n = 0;
  std::vector<std::pair<int, int>> edge_marks;  // each pair sorted, list sorted
  std::vector<int> node_marks;                  // sorted
};

// The cartoon of the cone dual to the Birkhoff edge (sigma, pi):
// for each j, mark edge {sigma^-1(j), pi^-1(j)} or node sigma^-1(j).
Cartoon cartoon_of_edge(const Permutation& sigma, const Permutation& pi);

// Three distinct nodes and an injective assignment of three distinct marks to
// the triangle's edges, each assigned mark lying on its edge's interior or on
// one of that edge's endpoints.
bool cartoon_has_marked_triangle(const Cartoon& c);

std::string cartoon_dot(const Cartoon& c);

}  // namespace trop
