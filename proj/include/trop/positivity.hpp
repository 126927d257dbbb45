#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/permutation.hpp"
#include "trop/semiring.hpp"

namespace trop {

// Sign data of the optimal permutations of one minor. The minor passes the
// positivity test iff the optimum is attained on both signs, or the point is
// not on the minor's hypersurface at all (unique optimum).
struct MinorVerdict {
  MinorIndex index;
  Rational min_value;
  bool even_attained = false;
  bool odd_attained = false;
  bool on_hypersurface = false;  // optimum attained at least twice

  bool passes() const { return !on_hypersurface || (even_attained && odd_attained); }
};

MinorVerdict minor_positivity(const TropicalMatrix& a, const MinorIndex& ij,
                              const Budget& budget = {});

// Same test with every permutation's sign twisted by the sign pattern:
// sgn(sigma) * prod_k s[i_k][j_{sigma(k)}].
MinorVerdict minor_positivity_signed(const TropicalMatrix& a, const SignPattern& s,
                                     const MinorIndex& ij, const Budget& budget = {});

struct PositivityCertificate {
  enum class Verdict { positive_prevariety, not_positive };
  Verdict verdict;
  std::optional<MinorVerdict> witness;  // lexicographically first failing minor

  bool positive() const { return verdict == Verdict::positive_prevariety; }
};

// Scans all (r+1)-minors of a matrix known to lie in the rank-r prevariety
// (PreconditionError otherwise).
PositivityCertificate positive_prevariety_member(const TropicalMatrix& a, int r,
                                                 const Budget& budget = {});

PositivityCertificate signed_prevariety_member(const TropicalMatrix& a, const SignPattern& s,
                                               int r, const Budget& budget = {});

// For a Birkhoff edge (sigma, pi): the dual cone is positive iff the two
// permutations have different signs.
bool birkhoff_edge_positive(const Permutation& sigma, const Permutation& pi);

}  // namespace trop
