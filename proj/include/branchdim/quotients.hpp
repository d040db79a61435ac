#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "branchdim/elements.hpp"
#include "branchdim/permgrp.hpp"
#include "branchdim/tree.hpp"

namespace branchdim {

/// Deepest level a stabilizer chain is built for unless explicitly raised to 6.
inline constexpr std::size_t kDefaultChainCap = 5;
inline constexpr std::size_t kMaxChainCap = 6;

struct QuotientOptions {
  std::size_t level_cap = kDefaultChainCap;
  /// Chain cache directory; empty disables caching.
  std::filesystem::path cache_dir;
};

/// The congruence quotient G_n = G / St_G(n), realised on the d^n level-n
/// vertices in rank order.
struct LevelQuotient {
  GroupDefPtr def;
  std::size_t level = 0;
  std::vector<Perm> gen_images;
  StabChain chain{0};

  std::size_t degree() const noexcept { return chain.degree(); }
  BigInt order() const { return chain.order(); }
};

/// Level-n images of every generator, in definition order.
std::vector<Perm> generator_images(const GroupDef& def, std::size_t n, std::size_t level_cap = kDefaultLevelCap);
/// Product of generator images along the word of g.
Perm level_perm(const Element& g, std::span<const Perm> gen_images);
/// The permutation of the rank-indexed level-n vertices induced by g.
Perm level_perm(const Element& g, std::size_t n, std::size_t level_cap = kDefaultLevelCap);

LevelQuotient quotient(const GroupDefPtr& def, std::size_t n, const QuotientOptions& options = {});

/// Exact log2 |G_n| for n = 1..max_n. Throws DomainError if some quotient is
/// not a 2-group.
std::vector<std::uint64_t> log2_order_series(const GroupDefPtr& def, std::size_t max_n,
                                             const QuotientOptions& options = {});

/// Generators of St_{G_n}(m): the elements of the quotient fixing every
/// level-m vertex, 1 <= m < n.
std::vector<Perm> stabilizer_in_quotient(const LevelQuotient& q, std::size_t m);

/// phi_omega at finite level: for p on d^n points fixing the vertex omega,
/// the permutation v -> v' of the level-(n - |omega|) subtree with
/// (omega v)^p = omega v'. Throws DomainError when p moves omega.
Perm section_project(const Perm& p, const Vertex& omega, std::size_t d);

/// Block-diagonal permutation: slot i acts on points [i*m, (i+1)*m).
Perm product_embed(std::span<const Perm> parts);

/// The level of a permutation of d^n points; throws DomainError otherwise.
std::size_t level_of(const Perm& p, std::size_t d);

}  // namespace branchdim
