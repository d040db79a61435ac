#include "branchdim/bigint.hpp"

#include <iterator>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "branchdim/error.hpp"

namespace branchdim {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line == 0 ? what
                      : what + " (line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

std::optional<std::uint64_t> exact_log2(const BigInt& value) {
  if (value <= 0) return std::nullopt;
  const auto msb = boost::multiprecision::msb(value);
  const auto lsb = boost::multiprecision::lsb(value);
  if (msb != lsb) return std::nullopt;
  return static_cast<std::uint64_t>(msb);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return value.numerator().str();
  return value.numerator().str() + "/" + value.denominator().str();
}

double to_double(const Rational& value) {
  using Float = boost::multiprecision::cpp_bin_float_double;
  Float num(value.numerator());
  Float den(value.denominator());
  return static_cast<double>(num / den);
}

std::string to_bytes(const BigInt& value) {
  std::string out;
  boost::multiprecision::export_bits(value, std::back_inserter(out), 8);
  return out;
}

BigInt from_bytes(const std::string& bytes) {
  BigInt value;
  boost::multiprecision::import_bits(value, bytes.begin(), bytes.end(), 8);
  return value;
}

}  // namespace branchdim
