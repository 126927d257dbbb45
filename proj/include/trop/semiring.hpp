#pragma once

#include <vector>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/permutation.hpp"

namespace trop {

// A square index selection: sorted row subset I of [d], column subset J of
// [n], |I| = |J|. Stored 0-based.
struct MinorIndex {
  MinorIndex(std::vector<int> rows, std::vector<int> cols);
  static MinorIndex full(int m) { return full(m, m); }
  static MinorIndex full(int rows, int cols);

  int size() const { return static_cast<int>(rows.size()); }

  std::vector<int> rows;
  std::vector<int> cols;

  friend bool operator==(const MinorIndex& a, const MinorIndex& b) {
    return a.rows == b.rows && a.cols == b.cols;
  }
  friend bool operator<(const MinorIndex& a, const MinorIndex& b) {
    return a.rows != b.rows ? a.rows < b.rows : a.cols < b.cols;
  }
};

void check_minor_in_range(const MinorIndex& ij, int rows, int cols);

struct DetResult {
  Rational value;
  // The complete argmin set, sorted lexicographically by image vectors.
  std::vector<Permutation> optima;
};

// min over sigma of sum_i M[i][sigma(i)], together with every optimal
// permutation. Exhaustive when m! fits the budget; otherwise an exact
// assignment solve plus enumeration of all matchings in the tight-edge
// subgraph (still the complete set, or BudgetError).
DetResult tropical_det(const TropicalMatrix& m, const Budget& budget = {});

// True iff the optimum above is attained by at least two permutations.
bool is_tropically_singular(const TropicalMatrix& m, const Budget& budget = {});

TropicalMatrix submatrix(const TropicalMatrix& a, const MinorIndex& ij);

// Representative modulo row- and column-constant additions, normalized so
// the first row and first column are identically zero. Idempotent, and
// preserves the argmin set of every square submatrix.
TropicalMatrix canonicalize_mod_lineality(const TropicalMatrix& a);

bool is_canonicalized(const TropicalMatrix& a);

TropicalMatrix min_plus_product(const TropicalMatrix& x, const TropicalMatrix& y);

}  // namespace trop
