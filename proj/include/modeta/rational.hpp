#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace modeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "num/den" with den > 0, also for integers ("3/1").
std::string to_string(const Rational& value);

/// Accepts "n", "-n" or "n/m".
Rational parse_rational(std::string_view text);

BigInt numerator_of(const Rational& value);
BigInt denominator_of(const Rational& value);

/// Nonnegative residue of value mod modulus (modulus > 0).
std::int64_t mod_floor(std::int64_t value, std::int64_t modulus);

}  // namespace modeta
