#include "trop/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "trop/errors.hpp"
#include "trop/tree.hpp"

namespace trop {

namespace {

// Calls fn with every size-k subset of {0..n-1} in lexicographic order;
// stops early when fn returns false.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

std::optional<MinorIndex> find_nonsingular_minor(const TropicalMatrix& a, int size,
                                                 const Budget& budget) {
  std::optional<MinorIndex> found;
  for_each_subset(a.rows(), size, [&](const std::vector<int>& rows) {
    return for_each_subset(a.cols(), size, [&](const std::vector<int>& cols) {
      MinorIndex ij(rows, cols);
      if (!is_tropically_singular(submatrix(a, ij), budget)) {
        found = ij;
        return false;
      }
      return true;
    });
  });
  return found;
}

}  // namespace

int tropical_rank(const TropicalMatrix& a, const Budget& budget) {
  for (int size = std::min(a.rows(), a.cols()); size >= 2; --size)
    if (find_nonsingular_minor(a, size, budget)) return size;
  return 1;  // every single entry is a nonsingular 1x1 minor
}

PrevarietyResult prevariety_member(const TropicalMatrix& a, int r, const Budget& budget) {
  const int bound = std::min(a.rows(), a.cols());
  if (r < 1 || r > bound) throw DimensionError("prevariety rank out of range");
  if (r == bound) return PrevarietyResult{true, std::nullopt};
  if (auto witness = find_nonsingular_minor(a, r + 1, budget))
    return PrevarietyResult{false, witness};
  return PrevarietyResult{true, std::nullopt};
}

TropicalMatrix residuation_cofactor(const TropicalMatrix& a, const TropicalMatrix& x) {
  if (x.rows() != a.rows()) throw DimensionError("generator rows do not match");
  TropicalMatrix y(x.cols(), a.cols());
  for (int k = 0; k < x.cols(); ++k) {
    for (int j = 0; j < a.cols(); ++j) {
      Rational best = a(0, j) - x(0, k);
      for (int i = 1; i < a.rows(); ++i) best = std::max(best, Rational(a(i, j) - x(i, k)));
      y(k, j) = best;
    }
  }
  return y;
}

namespace {

std::vector<Rational> normalized(std::vector<Rational> v) {
  const Rational shift = v.front();
  for (auto& x : v) x -= shift;
  return v;
}

// Columns of A together with the breakpoints of every pairwise tropical
// segment between columns, normalized modulo tropical scaling. A generating
// set of the needed size lives in this pool at desk scale, and residuation
// makes any hit sound regardless. For r = 2 the columns alone are complete:
// all columns on a tropical segment lie between two extreme columns.
std::vector<std::vector<Rational>> generator_pool(const TropicalMatrix& a,
                                                  bool columns_only) {
  std::set<std::vector<Rational>> pool;
  const int d = a.rows();
  for (int j = 0; j < a.cols(); ++j) pool.insert(normalized(a.column(j)));
  if (columns_only) return {pool.begin(), pool.end()};
  for (int j1 = 0; j1 < a.cols(); ++j1) {
    for (int j2 = 0; j2 < a.cols(); ++j2) {
      if (j1 == j2) continue;
      const auto u = a.column(j1);
      const auto v = a.column(j2);
      for (int i = 0; i < d; ++i) {
        const Rational lambda = v[i] - u[i];
        std::vector<Rational> w(d);
        for (int t = 0; t < d; ++t) w[t] = std::min(Rational(lambda + u[t]), v[t]);
        pool.insert(normalized(std::move(w)));
      }
    }
  }
  return {pool.begin(), pool.end()};
}

bool accepts(const TropicalMatrix& a, const TropicalMatrix& x, BarvinokResult& out) {
  TropicalMatrix y = residuation_cofactor(a, x);
  if (min_plus_product(x, y) == a) {
    out = BarvinokResult{true, BarvinokFactors{x, y}};
    return true;
  }
  return false;
}

// Vertices of the arrangement of walls x_i - x_k = A_ij - A_kj. Tight sets
// only grow when a generator moves to the closure of its arrangement cell,
// and the arrangement is essential, so whenever any generating set of size r
// exists there is one supported on these vertices: searching them is a
// complete decision procedure. Every vertex pins its coordinates by d-1
// independent wall equations, i.e. by a coordinate spanning tree with column
// labels.
std::vector<std::vector<Rational>> arrangement_vertex_pool(const TropicalMatrix& a) {
  const int d = a.rows(), n = a.cols();
  std::set<std::vector<Rational>> pool;
  for (int j = 0; j < n; ++j) pool.insert(normalized(a.column(j)));
  if (d >= 2) {
    // spanning trees on coordinates via Pruefer sequences
    std::vector<int> pruefer(std::max(0, d - 2), 0);
    const long long tree_count = [&] {
      long long t = 1;
      for (int k = 0; k < d - 2; ++k) t *= d;
      return t;
    }();
    for (long long tree_id = 0; tree_id < tree_count; ++tree_id) {
      long long code = tree_id;
      for (int k = 0; k < d - 2; ++k) {
        pruefer[k] = static_cast<int>(code % d);
        code /= d;
      }
      // decode the Pruefer sequence into an edge list
      std::vector<int> degree(d, 1);
      for (int v : pruefer) ++degree[v];
      std::vector<std::pair<int, int>> edges;
      std::vector<bool> used(d, false);
      std::vector<int> deg = degree;
      for (int v : pruefer) {
        int leaf = -1;
        for (int u = 0; u < d; ++u)
          if (deg[u] == 1 && !used[u]) {
            leaf = u;
            break;
          }
        used[leaf] = true;
        edges.emplace_back(leaf, v);
        --deg[v];
      }
      std::vector<int> rest;
      for (int u = 0; u < d; ++u)
        if (!used[u]) rest.push_back(u);
      edges.emplace_back(rest[0], rest.back());

      // label each tree edge with a column and propagate differences
      const int edge_count = d - 1;
      std::vector<int> label(edge_count, 0);
      while (true) {
        std::vector<Rational> x(d, Rational(0));
        std::vector<bool> known(d, false);
        known[0] = true;
        bool progress = true;
        int fixed = 1;
        while (progress && fixed < d) {
          progress = false;
          for (int e = 0; e < edge_count; ++e) {
            const auto [u, v] = edges[e];
            const int j = label[e];
            if (known[u] && !known[v]) {
              x[v] = x[u] - a(u, j) + a(v, j);
              known[v] = true;
              ++fixed;
              progress = true;
            } else if (known[v] && !known[u]) {
              x[u] = x[v] - a(v, j) + a(u, j);
              known[u] = true;
              ++fixed;
              progress = true;
            }
          }
        }
        if (fixed == d) pool.insert(normalized(std::move(x)));
        int pos = 0;
        while (pos < edge_count && label[pos] == n - 1) label[pos++] = 0;
        if (pos == edge_count) break;
        ++label[pos];
      }
    }
  }
  return {pool.begin(), pool.end()};
}

BarvinokResult trivial_factorization(const TropicalMatrix& a, int r) {
  const int d = a.rows(), n = a.cols();
  TropicalMatrix x(d, r);
  if (n <= d) {
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < d; ++i) x(i, k) = a(i, std::min(k, n - 1));
  } else {
    // generators from rows: x[i][k] = max_j (a[i][j] - a[k][j])
    for (int k = 0; k < r; ++k) {
      const int row = std::min(k, d - 1);
      for (int i = 0; i < d; ++i) {
        Rational best = a(i, 0) - a(row, 0);
        for (int j = 1; j < n; ++j) best = std::max(best, Rational(a(i, j) - a(row, j)));
        x(i, k) = best;
      }
    }
  }
  BarvinokResult res{false, std::nullopt};
  if (!accepts(a, x, res)) throw InternalError("trivial factorization rejected");
  return res;
}

// A set of generators reproduces column j exactly when their tight-row sets
// at j cover every row: residuation always gives X (.) Y >= A entrywise, and
// entry (i, j) is met iff some generator is tight there. So the search is an
// exact set-cover problem over per-candidate tightness masks.
class CoverSearch {
 public:
  CoverSearch(const TropicalMatrix& a, std::vector<std::vector<Rational>> pool, int r,
              long long& nodes, long long cap)
      : a_(a), pool_(std::move(pool)), r_(r), nodes_(nodes), cap_(cap) {
    const int d = a.rows(), n = a.cols();
    tight_.resize(pool_.size());
    for (std::size_t q = 0; q < pool_.size(); ++q) {
      tight_[q].assign(n, 0);
      for (int j = 0; j < n; ++j) {
        Rational lambda = a(0, j) - pool_[q][0];
        for (int i = 1; i < d; ++i) lambda = std::max(lambda, Rational(a(i, j) - pool_[q][i]));
        for (int i = 0; i < d; ++i)
          if (pool_[q][i] + lambda == a(i, j)) tight_[q][j] |= (1u << i);
      }
    }
    // candidates whose tightness masks are contained in another candidate's
    // can never be required
    std::vector<bool> dominated(pool_.size(), false);
    for (std::size_t q1 = 0; q1 < pool_.size(); ++q1) {
      for (std::size_t q2 = 0; q2 < pool_.size(); ++q2) {
        if (q1 == q2 || dominated[q1] || dominated[q2]) continue;
        bool subset = true, equal = true;
        for (int j = 0; j < n && subset; ++j) {
          subset = (tight_[q1][j] & ~tight_[q2][j]) == 0;
          equal = equal && tight_[q1][j] == tight_[q2][j];
        }
        if (subset && (!equal || q2 < q1)) dominated[q1] = true;
      }
    }
    std::vector<std::vector<Rational>> kept_pool;
    std::vector<std::vector<std::uint32_t>> kept_tight;
    for (std::size_t q = 0; q < pool_.size(); ++q) {
      if (dominated[q]) continue;
      kept_pool.push_back(std::move(pool_[q]));
      kept_tight.push_back(std::move(tight_[q]));
    }
    pool_ = std::move(kept_pool);
    tight_ = std::move(kept_tight);
  }

  BarvinokResult run() {
    const int n = a_.cols();
    covered_.assign(n, 0);
    chosen_.clear();
    banned_.assign(pool_.size(), false);
    BarvinokResult res{false, std::nullopt};
    if (dfs(res)) return res;
    return BarvinokResult{false, std::nullopt};
  }

 private:
  bool dfs(BarvinokResult& out) {
    if (++nodes_ > cap_) throw BudgetError("generator search undecided at budget");
    const int d = a_.rows(), n = a_.cols();
    const std::uint32_t full = (1u << d) - 1;
    // pick the uncovered cell with the fewest available coverers
    int best_j = -1, best_i = -1;
    int best_count = -1;
    for (int j = 0; j < n; ++j) {
      const std::uint32_t missing = full & ~covered_[j];
      if (!missing) continue;
      for (int i = 0; i < d; ++i) {
        if (!(missing & (1u << i))) continue;
        int count = 0;
        for (std::size_t q = 0; q < pool_.size(); ++q)
          if (!banned_[q] && (tight_[q][j] & (1u << i))) ++count;
        if (best_count < 0 || count < best_count) {
          best_count = count;
          best_j = j;
          best_i = i;
        }
      }
    }
    if (best_j < 0) {  // everything covered
      TropicalMatrix x(d, r_);
      for (int k = 0; k < r_; ++k) {
        const auto& gen = pool_[chosen_[std::min<std::size_t>(k, chosen_.size() - 1)]];
        for (int i = 0; i < d; ++i) x(i, k) = gen[i];
      }
      if (!accepts(a_, x, out)) throw InternalError("set-cover witness rejected by residuation");
      return true;
    }
    if (static_cast<int>(chosen_.size()) == r_ || best_count == 0) return false;
    std::vector<std::size_t> branch;
    for (std::size_t q = 0; q < pool_.size(); ++q)
      if (!banned_[q] && (tight_[q][best_j] & (1u << best_i))) branch.push_back(q);
    std::vector<std::uint32_t> saved = covered_;
    for (std::size_t t = 0; t < branch.size(); ++t) {
      const std::size_t q = branch[t];
      chosen_.push_back(q);
      for (int j = 0; j < n; ++j) covered_[j] |= tight_[q][j];
      if (dfs(out)) return true;
      covered_ = saved;
      chosen_.pop_back();
      banned_[q] = true;  // earlier branches own the solutions containing it
    }
    for (std::size_t q : branch) banned_[q] = false;
    return false;
  }

  const TropicalMatrix& a_;
  std::vector<std::vector<Rational>> pool_;
  int r_;
  long long& nodes_;
  long long cap_;
  std::vector<std::vector<std::uint32_t>> tight_;
  std::vector<std::uint32_t> covered_;
  std::vector<std::size_t> chosen_;
  std::vector<bool> banned_;
};

BarvinokResult search_generators(const TropicalMatrix& a, int r, const Budget& budget) {
  if (a.rows() > 31) throw BudgetError("generator search limited to 31 rows");
  long long nodes = 0;
  // columns plus pairwise breakpoints find most witnesses quickly; the full
  // cell-vertex pool is the completeness fallback for r >= 3
  BarvinokResult res =
      CoverSearch(a, generator_pool(a, r <= 2), r, nodes, budget.search_budget).run();
  if (res.ok || r <= 2) return res;
  return CoverSearch(a, arrangement_vertex_pool(a), r, nodes, budget.search_budget).run();
}

}  // namespace

BarvinokResult barvinok_rank_le(const TropicalMatrix& a, int r, const Budget& budget) {
  if (r < 1) throw DimensionError("rank bound must be >= 1");
  if (r >= std::min(a.rows(), a.cols())) return trivial_factorization(a, r);

  if (r == 1) {
    // If a rank-1 factorization exists, the first column is a generator.
    TropicalMatrix x(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) x(i, 0) = a(i, 0);
    BarvinokResult res{false, std::nullopt};
    accepts(a, x, res);
    return res;
  }

  BarvinokResult res = search_generators(a, r, budget);
  if (r == 2) {
    // Independent route: rank-2 factorizations exist exactly for matrices of
    // tropical rank <= 2 whose bicolored tree is a caterpillar.
    const bool via_tree =
        tropical_rank(a, budget) <= 2 && is_caterpillar(bicolored_tree_from_matrix(a, budget));
    if (via_tree != res.ok)
      throw InternalError("rank-2 factorization search disagrees with the caterpillar test");
  }
  return res;
}

namespace {

std::pair<int, BarvinokResult> barvinok_rank_with_factors(const TropicalMatrix& a,
                                                          const Budget& budget) {
  const int bound = std::min(a.rows(), a.cols());
  // ranks below the tropical rank are impossible by the rank chain
  for (int r = std::max(1, tropical_rank(a, budget)); r < bound; ++r) {
    auto res = barvinok_rank_le(a, r, budget);
    if (res.ok) return {r, std::move(res)};
  }
  return {bound, trivial_factorization(a, bound)};
}

}  // namespace

int barvinok_rank(const TropicalMatrix& a, const Budget& budget) {
  return barvinok_rank_with_factors(a, budget).first;
}

bool kapranov_decidable_by_minors(int r, int d, int n) {
  const int bound = std::min(d, n);
  if (r >= bound) return true;  // every matrix has Kapranov rank <= min(d,n)
  const int k = r + 1;
  return k <= 3 || k == bound || (k == 4 && bound <= 6);
}

KapranovStatus kapranov_status(const TropicalMatrix& a, int r, const Budget& budget) {
  const auto pm = prevariety_member(a, r, budget);
  if (!pm.member) return KapranovStatus::non_member;
  if (kapranov_decidable_by_minors(r, a.rows(), a.cols())) return KapranovStatus::member;
  return KapranovStatus::undecidable_by_minors;
}

RankReport rank_report(const TropicalMatrix& a, const Budget& budget) {
  RankReport report;
  report.tropical_rank = tropical_rank(a, budget);
  auto [bar, bar_res] = barvinok_rank_with_factors(a, budget);
  report.barvinok_rank = bar;
  report.barvinok_factors = std::move(bar_res.factors);
  report.kapranov_lower = report.tropical_rank;
  int upper = report.barvinok_rank;
  for (int r = report.tropical_rank; r < upper; ++r) {
    // Minors of size r+1 all vanish tropically from tropical_rank on; in a
    // decidable regime that settles Kapranov rank <= r.
    if (kapranov_decidable_by_minors(r, a.rows(), a.cols())) {
      upper = r;
      break;
    }
  }
  report.kapranov_upper = upper;
  report.kapranov_exact = report.kapranov_lower == report.kapranov_upper;
  return report;
}

}  // namespace trop
