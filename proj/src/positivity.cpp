#include "trop/positivity.hpp"

#include <functional>

#include "trop/errors.hpp"
#include "trop/rank.hpp"

namespace trop {

namespace {

MinorVerdict classify_minor(const TropicalMatrix& a, const MinorIndex& ij, const Budget& budget,
                            const std::function<int(const Permutation&)>& term_sign) {
  const auto det = tropical_det(submatrix(a, ij), budget);
  MinorVerdict verdict{ij, det.value, false, false, det.optima.size() >= 2};
  for (const auto& p : det.optima) {
    if (term_sign(p) > 0)
      verdict.even_attained = true;
    else
      verdict.odd_attained = true;
  }
  return verdict;
}

PositivityCertificate scan_minors(const TropicalMatrix& a, int r, const Budget& budget,
                                  const std::function<MinorVerdict(const MinorIndex&)>& judge) {
  const int bound = std::min(a.rows(), a.cols());
  if (r < 1 || r > bound) throw DimensionError("prevariety rank out of range");
  if (!prevariety_member(a, r, budget).member)
    throw PreconditionError("matrix is not in the rank-" + std::to_string(r) + " prevariety");
  if (r == bound)
    return PositivityCertificate{PositivityCertificate::Verdict::positive_prevariety, std::nullopt};

  std::optional<MinorVerdict> failing;
  std::vector<int> rows(r + 1), cols(r + 1);
  std::function<bool(int, int)> choose_cols = [&](int pos, int from) {
    if (pos == r + 1) {
      const auto verdict = judge(MinorIndex(rows, cols));
      if (!verdict.passes()) {
        failing = verdict;
        return false;
      }
      return true;
    }
    for (int c = from; c < a.cols(); ++c) {
      cols[pos] = c;
      if (!choose_cols(pos + 1, c + 1)) return false;
    }
    return true;
  };
  std::function<bool(int, int)> choose_rows = [&](int pos, int from) {
    if (pos == r + 1) return choose_cols(0, 0);
    for (int x = from; x < a.rows(); ++x) {
      rows[pos] = x;
      if (!choose_rows(pos + 1, x + 1)) return false;
    }
    return true;
  };
  choose_rows(0, 0);
  if (failing)
    return PositivityCertificate{PositivityCertificate::Verdict::not_positive, failing};
  return PositivityCertificate{PositivityCertificate::Verdict::positive_prevariety, std::nullopt};
}

}  // namespace

MinorVerdict minor_positivity(const TropicalMatrix& a, const MinorIndex& ij,
                              const Budget& budget) {
  check_minor_in_range(ij, a.rows(), a.cols());
  return classify_minor(a, ij, budget, [](const Permutation& p) { return p.sign(); });
}

MinorVerdict minor_positivity_signed(const TropicalMatrix& a, const SignPattern& s,
                                     const MinorIndex& ij, const Budget& budget) {
  check_minor_in_range(ij, a.rows(), a.cols());
  if (s.rows() != a.rows() || s.cols() != a.cols())
    throw DimensionError("sign pattern shape does not match the matrix");
  validate_sign_pattern(s);
  return classify_minor(a, ij, budget, [&](const Permutation& p) {
    int sign = p.sign();
    for (int k = 0; k < p.size(); ++k) sign *= s(ij.rows[k], ij.cols[p(k)]);
    return sign;
  });
}

PositivityCertificate positive_prevariety_member(const TropicalMatrix& a, int r,
                                                 const Budget& budget) {
  return scan_minors(a, r, budget,
                     [&](const MinorIndex& ij) { return minor_positivity(a, ij, budget); });
}

PositivityCertificate signed_prevariety_member(const TropicalMatrix& a, const SignPattern& s,
                                               int r, const Budget& budget) {
  if (s.rows() != a.rows() || s.cols() != a.cols())
    throw DimensionError("sign pattern shape does not match the matrix");
  validate_sign_pattern(s);
  return scan_minors(
      a, r, budget, [&](const MinorIndex& ij) { return minor_positivity_signed(a, s, ij, budget); });
}

bool birkhoff_edge_positive(const Permutation& sigma, const Permutation& pi) {
  if (!is_birkhoff_edge(sigma, pi))
    throw PreconditionError("permutations do not form a Birkhoff edge");
  return sigma.sign() != pi.sign();
}

}  // namespace trop
