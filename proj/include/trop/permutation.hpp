#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trop {

// A bijection on {0..m-1}, stored as the image vector.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  // (a.compose(b))(i) = a(b(i))
  Permutation compose(const Permutation& other) const;

  // +1 for even, -1 for odd: (-1)^(m - #cycles), fixed points counting as
  // 1-cycles.
  int sign() const;

  // Cycles in canonical order (each starting at its smallest element,
  // sorted by that element); fixed points omitted unless requested.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

  bool is_identity() const;

  // "(1 2)(3 4)" with 1-based entries; "id" for the identity.
  std::string cycle_str() const;
  std::string one_line_str() const;  // "2 1 3", 1-based

  // Accepts cycle notation "(1 2)(4 5)" (separators: spaces or commas),
  // "id"/"()", or one-line notation "2 1 3" / "[2,1,3]" with 1-based values.
  static Permutation parse(const std::string& text, int n);

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

// True iff sigma != pi and the non-fixed points of sigma*pi^{-1} form one
// single cycle; these pairs are exactly the edges of the Birkhoff graph.
bool is_birkhoff_edge(const Permutation& sigma, const Permutation& pi);

// Length of that single cycle (>= 2); throws if not an edge.
int birkhoff_cycle_length(const Permutation& sigma, const Permutation& pi);

// Calls fn for every permutation of {0..m-1} in lexicographic order.
void for_each_permutation(int m, const std::function<void(const Permutation&)>& fn);

// All permutations of {0..m-1}, lexicographic.
std::vector<Permutation> all_permutations(int m);

}  // namespace trop
