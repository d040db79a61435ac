#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "branchdim/elements.hpp"

namespace branchdim {

/// Exponent sums (r0, r1, r2, r3) over Z/4Z of an element of St(1) written in
/// the basis b_i = b^(a^i).
struct WeightVector {
  std::array<std::uint8_t, 4> r{0, 0, 0, 0};

  static WeightVector of(int r0, int r1, int r2, int r3);

  bool is_zero() const noexcept { return r == std::array<std::uint8_t, 4>{0, 0, 0, 0}; }
  std::uint8_t total() const noexcept { return static_cast<std::uint8_t>((r[0] + r[1] + r[2] + r[3]) % 4); }

  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-() const;
  /// "(r0,r1,r2,r3)"
  std::string str() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct BLetter {
  std::uint8_t index = 0;  // i in b_i
  std::int8_t exp = 1;

  friend bool operator==(const BLetter&, const BLetter&) = default;
};

using BWord = std::vector<BLetter>;

/// Rewrites a word over {a, b} with a-exponent sum divisible by 4 as a word in
/// b_0..b_3, using a^k b = b^(a^-k) a^k. Throws DomainError when the element is
/// outside St(1) or the word uses other generators.
BWord to_b_word(const Element& g);
/// The element b_{i1}^{e1} ... of the given definition (which must name a and b).
Element from_b_word(const BWord& w, const GroupDefPtr& def);
std::string format_b_word(const BWord& w);

WeightVector weight_vector(const Element& g);
std::uint8_t total_weight(const Element& g);
/// r0 + r2 = r1 + r3 = 0 (mod 4), the criterion for membership in St(2).
bool st2_test(const Element& g);
/// The weight vector is zero: necessary, not sufficient, for membership in St(3).
bool st3_weight_check(const Element& g);

}  // namespace branchdim
