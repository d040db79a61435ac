#include "branchdim/perm.hpp"

#include <numeric>
#include <sstream>

#include "branchdim/error.hpp"

namespace branchdim {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw DomainError("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point x = cycle[i];
      if (x >= degree) throw DomainError("cycle point out of range");
      if (used[x]) throw DomainError("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Point Perm::first_moved() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return static_cast<Point>(x);
  return static_cast<Point>(images_.size());
}

Perm Perm::inverse() const {
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) result.images_[images_[x]] = static_cast<Point>(x);
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.degree() != degree()) throw DomainError("degree mismatch in permutation product");
  Perm result;
  result.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) result.images_[x] = rhs.images_[images_[x]];
  return result;
}

Perm& Perm::operator*=(const Perm& rhs) {
  if (rhs.degree() != degree()) throw DomainError("degree mismatch in permutation product");
  for (auto& y : images_) y = rhs.images_[y];
  return *this;
}

Perm Perm::pow(long long exponent) const {
  Perm base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Perm result(degree());
  while (e != 0) {
    if (e & 1ULL) result *= base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

BigInt Perm::order() const {
  BigInt result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t length = 0;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++length;
    }
    result = boost::multiprecision::lcm(result, BigInt(length));
  }
  return result;
}

std::string Perm::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      if (y != x) out << ' ';
      out << y;
      seen[y] = true;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

Perm commutator(const Perm& x, const Perm& y) { return x.inverse() * y.inverse() * x * y; }

Perm conjugate(const Perm& x, const Perm& y) { return y.inverse() * x * y; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace branchdim
