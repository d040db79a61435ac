#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace branchdim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

/// Exact base-2 logarithm of `value`, or nullopt if it is not a positive power of two.
std::optional<std::uint64_t> exact_log2(const BigInt& value);

std::string to_string(const BigInt& value);
/// "p/q" in lowest terms; integers render without a denominator.
std::string to_string(const Rational& value);
double to_double(const Rational& value);

/// Big-endian magnitude bytes, used by the chain cache.
std::string to_bytes(const BigInt& value);
BigInt from_bytes(const std::string& bytes);

}  // namespace branchdim
