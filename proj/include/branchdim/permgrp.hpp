#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <utility>
#include <vector>

#include "branchdim/bigint.hpp"
#include "branchdim/perm.hpp"

namespace branchdim {

/// Base and strong generating set of a permutation group, built by deterministic
/// incremental Schreier-Sims.
///
/// Level k of the chain holds the k-th base point, a generating set of the
/// pointwise stabilizer of the first k base points, and explicit coset
/// representatives (and their inverses) for the orbit of the k-th base point.
/// The base starts with the requested prefix; further points are the smallest
/// points moved by residues that fall through the current chain.
///
/// A chain grows only through `extend`. Once construction is finished a const
/// chain is safe to share between threads.
class StabChain {
 public:
  explicit StabChain(std::size_t degree, std::vector<Point> base_prefix = {});

  /// Rebuilds the transversals for a known base and strong generating set
  /// without re-verifying the Schreier generators. Used to restore cached chains.
  static StabChain from_bsgs(std::size_t degree, std::vector<Point> base,
                             std::vector<Perm> strong_generators);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  std::vector<Point> base() const;

  /// Adds `g` to the group. Returns false when g was already a member.
  bool extend(const Perm& g);

  BigInt order() const;
  bool contains(const Perm& g) const;
  /// Strips `g` through the chain. The second member is the level at which the
  /// strip stopped, equal to depth() when every base point was matched.
  std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t from_level = 0) const;

  /// Every strong generator, in insertion order.
  const std::vector<Perm>& strong_generators() const noexcept { return strong_; }
  /// Generators of the pointwise stabilizer of the first `count` base points.
  std::vector<Perm> stabilizer_generators(std::size_t count) const;
  /// Orbit lengths of the base points; their product is the group order.
  std::vector<std::size_t> transversal_sizes() const;
  std::span<const Point> orbit(std::size_t level) const { return levels_.at(level).orbit; }

 private:
  struct Level {
    Point point = 0;
    std::vector<std::uint32_t> gens;  // indices into strong_
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;   // point -> position in orbit, or -1
    std::vector<Perm> reps;           // point^... : base point mapped to orbit[i]
    std::vector<Perm> rep_inverses;
  };

  void push_level(Point point);
  void add_residue(Perm residue, std::size_t from_level, std::size_t drop_level);
  void add_generator_to_level(std::size_t level, std::uint32_t gen);
  std::size_t grow_orbit(std::size_t level, std::uint32_t gen);

  std::size_t degree_;
  std::deque<Level> levels_;
  std::vector<Perm> strong_;
};

/// Builds a chain for the group generated by `gens`. `degree` is used when the
/// list is empty; otherwise every generator must share one degree.
StabChain bsgs_build(std::span<const Perm> gens, std::size_t degree = 0,
                     std::vector<Point> base_prefix = {});

BigInt group_order(const StabChain& chain);
bool contains(const StabChain& chain, const Perm& p);

/// Sorted orbit of `point` under the group generated by `gens`.
std::vector<Point> orbit(std::span<const Perm> gens, Point point);
/// True iff `points` is a single orbit. Throws DomainError if `points` is empty
/// or not invariant under `gens`.
bool is_transitive(std::span<const Perm> gens, std::span<const Point> points);

/// Generators of the smallest subgroup containing `seed` that is normalized
/// by every element of `ambient`.
std::vector<Perm> normal_closure(std::span<const Perm> ambient, std::span<const Perm> seed,
                                 std::size_t degree = 0);
std::vector<Perm> derived_subgroup(std::span<const Perm> gens, std::size_t degree = 0);
/// k-th term of the lower central series, k >= 1.
std::vector<Perm> lower_central(std::span<const Perm> gens, int k, std::size_t degree = 0);

/// Generators of the subgroup of <chain> fixing every point in `points`.
std::vector<Perm> pointwise_stabilizer(const StabChain& chain, std::span<const Point> points);

/// |super : sub|. Throws DomainError when sub is not contained in super and
/// InternalError when the orders do not divide.
BigInt subgroup_index(const StabChain& super, const StabChain& sub);
bool subgroups_equal(std::span<const Perm> a, std::span<const Perm> b, std::size_t degree = 0);

/// Drops generators that lie in the group generated by their predecessors.
std::vector<Perm> reduce_generators(std::span<const Perm> gens, std::size_t degree = 0);

}  // namespace branchdim
