#pragma once

namespace trop {

// Budgets for the enumerative parts of the library. The criteria implemented
// here need *complete* argmin sets; silent truncation would corrupt verdicts,
// so running out of budget raises BudgetError instead.
struct Budget {
  // Cap on permutations examined per tropical determinant. The default allows
  // exhaustive enumeration up to 8x8 minors; above that the assignment-based
  // path is used and the full optimum set is still enumerated, as long as it
  // fits the budget.
  long long perm_budget = 40320;

  // Cap on candidate generator subsets tried by the Barvinok rank search.
  long long search_budget = 1000000;

  // Largest n for which the Birkhoff graph on n! vertices is built.
  int birkhoff_max_n = 6;
};

}  // namespace trop
