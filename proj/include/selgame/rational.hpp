#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace selgame {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

Rational floor(const Rational& r);
Rational ceil(const Rational& r);
Rational abs(const Rational& r);
Rational pow2(unsigned e);

// Surjective enumeration of the rationals: code = cantor pair of (zigzag numerator, denominator - 1).
Rational rational_from_code(std::uint64_t code);

}  // namespace selgame
