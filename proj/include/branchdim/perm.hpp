#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "branchdim/bigint.hpp"

namespace branchdim {

using Point = std::uint32_t;

/// A bijection of {0, ..., N-1}, acting on the right: x^(pq) = (x^p)^q.
class Perm {
 public:
  Perm() = default;
  /// Identity on `degree` points.
  explicit Perm(std::size_t degree);
  /// Throws DomainError unless `images` is a bijection of {0..N-1}.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from disjoint cycles given with 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool fixes(Point x) const noexcept { return images_[x] == x; }
  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const noexcept;

  Perm inverse() const;
  /// Apply *this, then `rhs`.
  Perm operator*(const Perm& rhs) const;
  Perm& operator*=(const Perm& rhs);
  Perm pow(long long exponent) const;

  /// Least common multiple of the cycle lengths.
  BigInt order() const;
  /// Cycle notation with 0-based points, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

/// x^-1 y^-1 x y
Perm commutator(const Perm& x, const Perm& y);
/// y^-1 x y
Perm conjugate(const Perm& x, const Perm& y);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace branchdim
