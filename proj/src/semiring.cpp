#include "trop/semiring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "trop/errors.hpp"

namespace trop {

MinorIndex::MinorIndex(std::vector<int> rows_in, std::vector<int> cols_in)
    : rows(std::move(rows_in)), cols(std::move(cols_in)) {
  if (rows.size() != cols.size()) throw DimensionError("minor index sets differ in size");
  if (rows.empty()) throw DimensionError("empty minor index");
  for (std::size_t k = 0; k + 1 < rows.size(); ++k)
    if (rows[k] >= rows[k + 1]) throw DimensionError("minor row set not strictly increasing");
  for (std::size_t k = 0; k + 1 < cols.size(); ++k)
    if (cols[k] >= cols[k + 1]) throw DimensionError("minor column set not strictly increasing");
  if (rows.front() < 0 || cols.front() < 0) throw DimensionError("minor index negative");
}

MinorIndex MinorIndex::full(int rows, int cols) {
  if (rows != cols) throw DimensionError("full minor of a non-square matrix");
  std::vector<int> idx(rows);
  std::iota(idx.begin(), idx.end(), 0);
  return MinorIndex(idx, idx);
}

void check_minor_in_range(const MinorIndex& ij, int rows, int cols) {
  if (ij.rows.back() >= rows || ij.cols.back() >= cols)
    throw DimensionError("minor index out of range");
}

TropicalMatrix submatrix(const TropicalMatrix& a, const MinorIndex& ij) {
  check_minor_in_range(ij, a.rows(), a.cols());
  TropicalMatrix out(ij.size(), ij.size());
  for (int k = 0; k < ij.size(); ++k)
    for (int l = 0; l < ij.size(); ++l) out(k, l) = a(ij.rows[k], ij.cols[l]);
  return out;
}

namespace {

long long factorial_capped(int m, long long cap) {
  long long f = 1;
  for (int k = 2; k <= m; ++k) {
    if (f > cap / k) return cap + 1;
    f *= k;
  }
  return f;
}

DetResult det_exhaustive(const TropicalMatrix& m) {
  const int n = m.rows();
  std::optional<Rational> best;
  std::vector<Permutation> optima;
  for_each_permutation(n, [&](const Permutation& p) {
    Rational sum = 0;
    for (int i = 0; i < n; ++i) sum += m(i, p(i));
    if (!best || sum < *best) {
      best = sum;
      optima.clear();
      optima.push_back(p);
    } else if (sum == *best) {
      optima.push_back(p);
    }
  });
  return DetResult{*best, std::move(optima)};
}

// Exact assignment solve via shortest augmenting paths over potentials.
// Produces duals with u_i + v_j <= M_ij everywhere and a perfect matching
// that is tight, so the optimum value is sum(u) + sum(v). Both facts are
// re-verified exactly before use.
void hungarian_duals(const TropicalMatrix& m, std::vector<Rational>& u, std::vector<Rational>& v) {
  const int n = m.rows();
  // 1-based with a virtual column 0 holding the row being inserted.
  std::vector<Rational> pu(n + 1, Rational(0)), pv(n + 1, Rational(0));
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<Rational> minv(n + 1, Rational(0));
    std::vector<bool> has_minv(n + 1, false);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      int j1 = -1;
      std::optional<Rational> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Rational cur = m(i0 - 1, j - 1) - pu[i0] - pv[j];
        if (!has_minv[j] || cur < minv[j]) {
          minv[j] = cur;
          has_minv[j] = true;
          way[j] = j0;
        }
        if (!delta || minv[j] < *delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          pu[match[j]] += *delta;
          pv[j] -= *delta;
        } else if (has_minv[j]) {
          minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  u.assign(n, Rational(0));
  v.assign(n, Rational(0));
  for (int i = 1; i <= n; ++i) u[i - 1] = pu[i];
  for (int j = 1; j <= n; ++j) v[j - 1] = pv[j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u[i] + v[j] > m(i, j)) throw InternalError("assignment duals infeasible");
  std::vector<bool> row_tight(n, false);
  for (int j = 1; j <= n; ++j) {
    const int i = match[j] - 1;
    if (i < 0 || row_tight[i] || u[i] + v[j - 1] != m(i, j - 1))
      throw InternalError("assignment matching not tight");
    row_tight[i] = true;
  }
}

void enumerate_tight_matchings(const std::vector<std::vector<int>>& admissible, int n,
                               long long cap, std::vector<Permutation>& out) {
  std::vector<int> assign(n, -1);
  std::vector<bool> col_used(n, false);
  long long produced = 0;
  std::function<void(int)> rec = [&](int row) {
    if (row == n) {
      if (++produced > cap) throw BudgetError("argmin set exceeds permutation budget");
      out.emplace_back(assign);
      return;
    }
    for (int j : admissible[row]) {
      if (col_used[j]) continue;
      col_used[j] = true;
      assign[row] = j;
      rec(row + 1);
      col_used[j] = false;
    }
    assign[row] = -1;
  };
  rec(0);
}

}  // namespace

DetResult tropical_det(const TropicalMatrix& m, const Budget& budget) {
  if (!m.square()) throw DimensionError("tropical determinant of a non-square matrix");
  const int n = m.rows();
  if (factorial_capped(n, budget.perm_budget) <= budget.perm_budget) return det_exhaustive(m);

  std::vector<Rational> u, v;
  hungarian_duals(m, u, v);
  Rational value = 0;
  for (const auto& x : u) value += x;
  for (const auto& x : v) value += x;
  // Every optimal permutation uses tight entries only, and every perfect
  // matching of tight entries attains the optimum.
  std::vector<std::vector<int>> admissible(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) == u[i] + v[j]) admissible[i].push_back(j);
  std::vector<Permutation> optima;
  enumerate_tight_matchings(admissible, n, budget.perm_budget, optima);
  std::sort(optima.begin(), optima.end());
  return DetResult{value, std::move(optima)};
}

bool is_tropically_singular(const TropicalMatrix& m, const Budget& budget) {
  return tropical_det(m, budget).optima.size() >= 2;
}

TropicalMatrix canonicalize_mod_lineality(const TropicalMatrix& a) {
  TropicalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - a(i, 0) - a(0, j) + a(0, 0);
  return out;
}

bool is_canonicalized(const TropicalMatrix& a) {
  for (int i = 0; i < a.rows(); ++i)
    if (a(i, 0) != 0) return false;
  for (int j = 0; j < a.cols(); ++j)
    if (a(0, j) != 0) return false;
  return true;
}

TropicalMatrix min_plus_product(const TropicalMatrix& x, const TropicalMatrix& y) {
  if (x.cols() != y.rows()) throw DimensionError("inner dimensions do not match");
  TropicalMatrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < y.cols(); ++j) {
      Rational best = x(i, 0) + y(0, j);
      for (int k = 1; k < x.cols(); ++k) best = std::min(best, Rational(x(i, k) + y(k, j)));
      out(i, j) = best;
    }
  }
  return out;
}

}  // namespace trop
