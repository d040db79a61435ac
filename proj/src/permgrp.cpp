#include "branchdim/permgrp.hpp"

#include <algorithm>

#include "branchdim/error.hpp"

namespace branchdim {

namespace {

std::size_t common_degree(std::span<const Perm> gens, std::size_t fallback) {
  if (gens.empty()) return fallback;
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw DomainError("generators have different degrees");
  if (fallback != 0 && fallback != n) throw DomainError("generator degree does not match the requested degree");
  return n;
}

}  // namespace

StabChain::StabChain(std::size_t degree, std::vector<Point> base_prefix) : degree_(degree) {
  for (Point p : base_prefix) {
    if (p >= degree_) throw DomainError("base point out of range");
    for (const auto& level : levels_)
      if (level.point == p) throw DomainError("repeated base point");
    push_level(p);
  }
}

void StabChain::push_level(Point point) {
  Level level;
  level.point = point;
  level.orbit.push_back(point);
  level.slot.assign(degree_, -1);
  level.slot[point] = 0;
  level.reps.emplace_back(degree_);
  level.rep_inverses.emplace_back(degree_);
  levels_.push_back(std::move(level));
}

StabChain StabChain::from_bsgs(std::size_t degree, std::vector<Point> base,
                               std::vector<Perm> strong_generators) {
  StabChain chain(degree, std::move(base));
  for (auto& g : strong_generators) {
    if (g.degree() != degree) throw DomainError("strong generator degree mismatch");
    chain.strong_.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < chain.levels_.size(); ++k) {
    for (std::uint32_t i = 0; i < chain.strong_.size(); ++i) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < k && fixes_prefix; ++j)
        fixes_prefix = chain.strong_[i].fixes(chain.levels_[j].point);
      if (fixes_prefix) chain.add_generator_to_level(k, i);
    }
  }
  return chain;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.point);
  return out;
}

std::size_t StabChain::grow_orbit(std::size_t level_index, std::uint32_t gen) {
  Level& level = levels_[level_index];
  const std::size_t old_size = level.orbit.size();
  level.gens.push_back(gen);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const bool old_point = i < old_size;
    const std::size_t first = old_point ? level.gens.size() - 1 : 0;
    for (std::size_t s = first; s < level.gens.size(); ++s) {
      const Perm& g = strong_[level.gens[s]];
      const Point q = g[level.orbit[i]];
      if (level.slot[q] >= 0) continue;
      level.slot[q] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(q);
      Perm rep = level.reps[i] * g;
      level.rep_inverses.push_back(rep.inverse());
      level.reps.push_back(std::move(rep));
    }
  }
  return old_size;
}

void StabChain::add_generator_to_level(std::size_t level_index, std::uint32_t gen) {
  grow_orbit(level_index, gen);
}

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g, std::size_t from_level) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch in sift");
  Perm h = g;
  for (std::size_t k = from_level; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    const Point p = h[level.point];
    if (p == level.point) continue;
    const std::int32_t s = level.slot[p];
    if (s < 0) return {std::move(h), k};
    h *= level.rep_inverses[static_cast<std::size_t>(s)];
  }
  return {std::move(h), levels_.size()};
}

void StabChain::add_residue(Perm residue, std::size_t from_level, std::size_t drop_level) {
  if (drop_level == levels_.size()) push_level(residue.first_moved());
  const auto gen = static_cast<std::uint32_t>(strong_.size());
  strong_.push_back(std::move(residue));

  // Deepest level first, so every sift below the level being processed runs
  // against a complete chain.
  for (std::size_t k = drop_level + 1; k-- > from_level;) {
    const std::size_t old_size = grow_orbit(k, gen);
    // Schreier generators not yet tested: the new generator on old points, and
    // every generator on new points. Level k is not modified by the nested
    // calls, which only touch deeper levels.
    const std::size_t orbit_size = levels_[k].orbit.size();
    const std::size_t gen_count = levels_[k].gens.size();
    for (std::size_t i = 0; i < orbit_size; ++i) {
      const std::size_t first = i < old_size ? gen_count - 1 : 0;
      for (std::size_t s = first; s < gen_count; ++s) {
        const Level& level = levels_[k];
        const Perm& g = strong_[level.gens[s]];
        const Point image = g[level.orbit[i]];
        const auto target = static_cast<std::size_t>(level.slot[image]);
        Perm schreier = level.reps[i] * g;
        schreier *= level.rep_inverses[target];
        if (schreier.is_identity()) continue;
        auto [rest, drop] = sift(schreier, k + 1);
        if (drop == levels_.size() && rest.is_identity()) continue;
        add_residue(std::move(rest), k + 1, drop);
      }
    }
  }
}

bool StabChain::extend(const Perm& g) {
  auto [rest, drop] = sift(g, 0);
  if (drop == levels_.size() && rest.is_identity()) return false;
  add_residue(std::move(rest), 0, drop);
  return true;
}

BigInt StabChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabChain::contains(const Perm& g) const {
  auto [rest, drop] = sift(g, 0);
  return drop == levels_.size() && rest.is_identity();
}

std::vector<Perm> StabChain::stabilizer_generators(std::size_t count) const {
  std::vector<Perm> out;
  if (count >= levels_.size()) {
    // Strong generators fixing the whole base are identities; none exist.
    return out;
  }
  for (std::uint32_t i : levels_[count].gens) out.push_back(strong_[i]);
  return out;
}

std::vector<std::size_t> StabChain::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

StabChain bsgs_build(std::span<const Perm> gens, std::size_t degree, std::vector<Point> base_prefix) {
  StabChain chain(common_degree(gens, degree), std::move(base_prefix));
  for (const auto& g : gens) chain.extend(g);
  return chain;
}

BigInt group_order(const StabChain& chain) { return chain.order(); }

bool contains(const StabChain& chain, const Perm& p) {
  if (p.degree() != chain.degree()) throw DomainError("degree mismatch in membership test");
  return chain.contains(p);
}

std::vector<Point> orbit(std::span<const Perm> gens, Point point) {
  const std::size_t n = common_degree(gens, 0);
  if (!gens.empty() && point >= n) throw DomainError("orbit point out of range");
  std::vector<Point> out{point};
  std::vector<bool> seen(gens.empty() ? point + 1 : n, false);
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const Point q = g[out[i]];
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(std::span<const Perm> gens, std::span<const Point> points) {
  if (points.empty()) throw DomainError("transitivity test on an empty point set");
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& g : gens)
    for (Point x : sorted)
      if (x >= g.degree() || !std::binary_search(sorted.begin(), sorted.end(), g[x]))
        throw DomainError("point set is not invariant under the generators");
  return orbit(gens, sorted.front()) == sorted;
}

std::vector<Perm> normal_closure(std::span<const Perm> ambient, std::span<const Perm> seed,
                                 std::size_t degree) {
  const std::size_t n = common_degree(seed, common_degree(ambient, degree));
  StabChain chain(n);
  std::vector<Perm> gens;
  std::deque<Perm> pending(seed.begin(), seed.end());
  while (!pending.empty()) {
    Perm x = std::move(pending.front());
    pending.pop_front();
    if (!chain.extend(x)) continue;
    for (const auto& a : ambient) pending.push_back(conjugate(x, a));
    gens.push_back(std::move(x));
  }
  return gens;
}

std::vector<Perm> derived_subgroup(std::span<const Perm> gens, std::size_t degree) {
  std::vector<Perm> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  return normal_closure(gens, commutators, common_degree(gens, degree));
}

std::vector<Perm> lower_central(std::span<const Perm> gens, int k, std::size_t degree) {
  if (k < 1) throw DomainError("lower central series index must be at least 1");
  const std::size_t n = common_degree(gens, degree);
  std::vector<Perm> term = reduce_generators(gens, n);
  for (int i = 1; i < k; ++i) {
    std::vector<Perm> seed;
    for (const auto& c : term)
      for (const auto& g : gens) {
        Perm x = commutator(c, g);
        if (!x.is_identity()) seed.push_back(std::move(x));
      }
    term = normal_closure(gens, seed, n);
  }
  return term;
}

std::vector<Perm> pointwise_stabilizer(const StabChain& chain, std::span<const Point> points) {
  std::vector<Point> prefix;
  for (Point p : points)
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end()) prefix.push_back(p);
  const StabChain based = bsgs_build(chain.strong_generators(), chain.degree(), prefix);
  return based.stabilizer_generators(prefix.size());
}

BigInt subgroup_index(const StabChain& super, const StabChain& sub) {
  if (super.degree() != sub.degree()) throw DomainError("degree mismatch in subgroup index");
  for (const auto& g : sub.strong_generators())
    if (!super.contains(g)) throw DomainError("not a subgroup");
  const BigInt big = super.order();
  const BigInt small = sub.order();
  if (big % small != 0) throw InternalError("subgroup order does not divide the group order");
  return big / small;
}

bool subgroups_equal(std::span<const Perm> a, std::span<const Perm> b, std::size_t degree) {
  const std::size_t n = common_degree(b, common_degree(a, degree));
  const StabChain ca = bsgs_build(a, n);
  const StabChain cb = bsgs_build(b, n);
  if (ca.order() != cb.order()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Perm& g) { return cb.contains(g); });
}

std::vector<Perm> reduce_generators(std::span<const Perm> gens, std::size_t degree) {
  StabChain chain(common_degree(gens, degree));
  std::vector<Perm> out;
  for (const auto& g : gens)
    if (chain.extend(g)) out.push_back(g);
  return out;
}

}  // namespace branchdim
