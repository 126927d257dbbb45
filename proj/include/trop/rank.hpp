#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/semiring.hpp"

namespace trop {

// Largest r such that some r x r submatrix is tropically nonsingular.
// Exhaustive scan, largest sizes first with early exit.
int tropical_rank(const TropicalMatrix& a, const Budget& budget = {});

struct PrevarietyResult {
  bool member;
  // Lexicographically first nonsingular (r+1)-minor when member is false.
  std::optional<MinorIndex> witness;
};

// True iff every (r+1) x (r+1) submatrix is tropically singular.
PrevarietyResult prevariety_member(const TropicalMatrix& a, int r, const Budget& budget = {});

struct BarvinokFactors {
  TropicalMatrix x;  // d x r
  TropicalMatrix y;  // r x n
};

struct BarvinokResult {
  bool ok;
  std::optional<BarvinokFactors> factors;  // present when ok
};

// Can A be written as the min-plus product of a (d x r) and an (r x n)
// matrix? Witnesses are found by residuation against candidate generator
// sets; any returned factorization is verified, so "true" is always sound.
// Exhausting the search budget raises BudgetError rather than answering.
BarvinokResult barvinok_rank_le(const TropicalMatrix& a, int r, const Budget& budget = {});

int barvinok_rank(const TropicalMatrix& a, const Budget& budget = {});

enum class KapranovStatus { member, non_member, undecidable_by_minors };

// Decides membership in the rank-r tropical determinantal variety where the
// (r+1)-minors are known to cut it out; elsewhere a passing minor test is
// reported as undecidable (a failing one is always conclusive).
KapranovStatus kapranov_status(const TropicalMatrix& a, int r, const Budget& budget = {});

// True iff (r+1)-minors decide variety membership for d x n matrices.
bool kapranov_decidable_by_minors(int r, int d, int n);

struct RankReport {
  int tropical_rank = 0;
  int kapranov_lower = 0;
  int kapranov_upper = 0;
  bool kapranov_exact = false;
  int barvinok_rank = 0;
  std::optional<BarvinokFactors> barvinok_factors;
};

RankReport rank_report(const TropicalMatrix& a, const Budget& budget = {});

// The canonical co-factor of residuation: y[k][j] = max_i (a[i][j] - x[i][k]).
// x (.) y is the best approximation of a from above with column space
// generated by the columns of x, so x (.) y == a iff such a factorization
// exists.
TropicalMatrix residuation_cofactor(const TropicalMatrix& a, const TropicalMatrix& x);

}  // namespace trop
