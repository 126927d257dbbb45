#include "trop/rational.hpp"

#include <cctype>

#include "trop/errors.hpp"

namespace trop {

Rational make_rational(long num, long den) {
  if (den == 0) throw DimensionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& token) {
  const auto bad = [&] { return ParseError("not a rational token: '" + token + "'"); };
  if (token.empty()) throw bad();
  std::size_t pos = 0;
  if (token[pos] == '-' || token[pos] == '+') ++pos;
  std::size_t digits = 0;
  while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw bad();
  if (pos < token.size()) {
    if (token[pos] != '/') throw bad();
    ++pos;
    std::size_t den_digits = 0;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
      ++pos;
      ++den_digits;
    }
    if (den_digits == 0 || pos != token.size()) throw bad();
  }
  Rational q;
  if (q.set_str(token, 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0) throw ParseError("rational with zero denominator: '" + token + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) {
  return q.get_str();
}

}  // namespace trop
