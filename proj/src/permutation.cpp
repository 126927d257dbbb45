#include "trop/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int m = static_cast<int>(img_.size());
  if (m == 0) throw DimensionError("empty permutation");
  std::vector<bool> seen(m, false);
  for (int v : img_) {
    if (v < 0 || v >= m || seen[v]) throw DimensionError("images are not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw DimensionError("permutation size mismatch");
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[i] = img_[other.img_[i]];
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  const int m = size();
  std::vector<bool> seen(m, false);
  int cycles = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return ((m - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  const int m = size();
  std::vector<bool> seen(m, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Permutation::cycle_str() const {
  const auto cyc = cycles(false);
  if (cyc.empty()) return "id";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k] + 1;
    }
    os << ')';
  }
  return os.str();
}

std::string Permutation::one_line_str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << img_[i] + 1;
  }
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      out.push_back(value);
    } else if (c == ' ' || c == ',' || c == '\t') {
      ++pos;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in permutation");
    }
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(const std::string& text, int n) {
  if (n <= 0) throw DimensionError("permutation size must be positive");
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || c == ' ') s.push_back(c);
  // trim
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ParseError("empty permutation");
  if (s == "id" || s == "e" || s == "()") return identity(n);

  if (s.front() == '(') {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] == ' ') {
        ++pos;
        continue;
      }
      if (s[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
      std::size_t close = s.find(')', pos);
      if (close == std::string::npos) throw ParseError("unbalanced cycle notation: " + text);
      std::vector<int> cyc = parse_int_list(s.substr(pos + 1, close - pos - 1));
      pos = close + 1;
      if (cyc.empty()) continue;
      std::vector<bool> used(n, false);
      for (int& v : cyc) {
        if (v < 1 || v > n) throw ParseError("cycle entry out of range in: " + text);
        v -= 1;
        if (used[v]) throw ParseError("repeated entry in cycle: " + text);
        used[v] = true;
      }
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        if (img[cyc[k]] != cyc[k]) throw ParseError("cycles are not disjoint in: " + text);
        img[cyc[k]] = cyc[(k + 1) % cyc.size()];
      }
    }
    return Permutation(std::move(img));
  }

  std::string cleaned = s;
  if (cleaned.front() == '[') {
    if (cleaned.back() != ']') throw ParseError("unbalanced brackets in: " + text);
    cleaned = cleaned.substr(1, cleaned.size() - 2);
  }
  std::vector<int> values = parse_int_list(cleaned);
  if (static_cast<int>(values.size()) != n)
    throw ParseError("one-line permutation has wrong length for n=" + std::to_string(n));
  for (int& v : values) {
    if (v < 1 || v > n) throw ParseError("one-line entry out of range in: " + text);
    v -= 1;
  }
  return Permutation(std::move(values));
}

bool is_birkhoff_edge(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) throw DimensionError("permutation size mismatch");
  const auto cyc = sigma.compose(pi.inverse()).cycles(false);
  return cyc.size() == 1;
}

int birkhoff_cycle_length(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) throw DimensionError("permutation size mismatch");
  const auto cyc = sigma.compose(pi.inverse()).cycles(false);
  if (cyc.size() != 1) throw PreconditionError("permutations do not form a Birkhoff edge");
  return static_cast<int>(cyc.front().size());
}

void for_each_permutation(int m, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  for_each_permutation(m, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace trop
