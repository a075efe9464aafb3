#include "selgame/rational.hpp"

#include <stdexcept>

#include "selgame/combinatorics/sequences.hpp"

namespace selgame {

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational component");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad rational: " + std::string(s));
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad rational: " + std::string(s));
    }
    return BigInt(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational floor(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return Rational(q);
}

Rational ceil(const Rational& r) { return -floor(-r); }

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational pow2(unsigned e) { return Rational(BigInt(1) << e); }

Rational rational_from_code(std::uint64_t code) {
  auto [z, q] = combinatorics::cantor_unpair(code);
  BigInt num = (z % 2 == 0) ? BigInt(z / 2) : -BigInt((z + 1) / 2);
  return Rational(num, BigInt(q) + 1);
}

}  // namespace selgame
