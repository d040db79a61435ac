#include "branchdim/quotients.hpp"

#include <numeric>

#include "branchdim/chain_cache.hpp"
#include "branchdim/error.hpp"

namespace branchdim {

namespace {

void check_tree_level(std::size_t n, std::size_t cap) {
  if (n < 1) throw DomainError("level must be at least 1");
  if (n > cap) throw ResourceError("level " + std::to_string(n) + " exceeds the level cap " + std::to_string(cap));
}

}  // namespace

std::vector<Perm> generator_images(const GroupDef& def, std::size_t n, std::size_t level_cap) {
  check_tree_level(n, level_cap);
  const std::size_t d = def.d();
  // Level 0: one point, every generator trivial.
  std::vector<Perm> images(def.size(), Perm(1));
  std::size_t block = 1;
  for (std::size_t level = 1; level <= n; ++level) {
    std::vector<Perm> next;
    next.reserve(def.size());
    for (std::size_t i = 0; i < def.size(); ++i) {
      const auto& gen = def.generator(i);
      std::vector<Point> out(d * block);
      for (std::size_t x = 0; x < d; ++x) {
        Perm below = Perm(block);
        for (const Letter& l : gen.sections[x]) below *= l.exp > 0 ? images[l.gen] : images[l.gen].inverse();
        const std::size_t target = gen.root[static_cast<Point>(x)];
        for (std::size_t r = 0; r < block; ++r) out[x * block + r] = static_cast<Point>(target * block + below[static_cast<Point>(r)]);
      }
      next.emplace_back(std::move(out));
    }
    images = std::move(next);
    block *= d;
  }
  return images;
}

Perm level_perm(const Element& g, std::span<const Perm> gen_images) {
  if (gen_images.size() != g.def().size()) throw DomainError("generator image count does not match the definition");
  std::vector<Perm> inverses;
  inverses.reserve(gen_images.size());
  for (const auto& p : gen_images) inverses.push_back(p.inverse());
  Perm result(gen_images.front().degree());
  for (const Letter& l : g.word()) result *= l.exp > 0 ? gen_images[l.gen] : inverses[l.gen];
  return result;
}

Perm level_perm(const Element& g, std::size_t n, std::size_t level_cap) {
  const auto images = generator_images(g.def(), n, level_cap);
  return level_perm(g, images);
}

LevelQuotient quotient(const GroupDefPtr& def, std::size_t n, const QuotientOptions& options) {
  if (options.level_cap < 1 || options.level_cap > kMaxChainCap)
    throw DomainError("chain level cap must lie in 1.." + std::to_string(kMaxChainCap));
  check_tree_level(n, options.level_cap);
  LevelQuotient q;
  q.def = def;
  q.level = n;
  q.gen_images = generator_images(*def, n, options.level_cap);

  std::optional<ChainCache> cache;
  std::uint64_t key = 0;
  if (!options.cache_dir.empty()) {
    cache.emplace(options.cache_dir);
    key = ChainCache::key(*def, n);
    if (auto hit = cache->load(key)) {
      q.chain = std::move(*hit);
      return q;
    }
  }
  q.chain = bsgs_build(q.gen_images);
  if (cache) cache->store(key, q.chain);
  return q;
}

std::vector<std::uint64_t> log2_order_series(const GroupDefPtr& def, std::size_t max_n,
                                             const QuotientOptions& options) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto order = quotient(def, n, options).order();
    const auto lg = exact_log2(order);
    if (!lg) throw DomainError("|G_" + std::to_string(n) + "| = " + to_string(order) + " is not a power of two");
    out.push_back(*lg);
  }
  return out;
}

std::size_t level_of(const Perm& p, std::size_t d) {
  std::size_t n = 0;
  std::size_t size = 1;
  while (size < p.degree()) {
    size *= d;
    ++n;
  }
  if (size != p.degree()) throw DomainError("permutation degree is not a power of d");
  return n;
}

std::vector<Perm> stabilizer_in_quotient(const LevelQuotient& q, std::size_t m) {
  if (m < 1 || m >= q.level) throw DomainError("stabilizer level must satisfy 1 <= m < n");
  const std::size_t d = q.def->d();
  const std::size_t vertices = power(d, m);
  const std::size_t leaves = q.degree();
  const std::size_t block = leaves / vertices;

  // Act on level-m vertices and level-n leaves at once, so that fixing the
  // level-m vertices is a pointwise stabilizer.
  auto augment = [&](const Perm& p) {
    std::vector<Point> images(vertices + leaves);
    for (std::size_t v = 0; v < vertices; ++v) images[v] = static_cast<Point>(p[static_cast<Point>(v * block)] / block);
    for (std::size_t x = 0; x < leaves; ++x) images[vertices + x] = static_cast<Point>(vertices + p[static_cast<Point>(x)]);
    return Perm(std::move(images));
  };
  std::vector<Perm> augmented;
  for (const auto& g : q.chain.strong_generators()) augmented.push_back(augment(g));

  std::vector<Point> prefix(vertices);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  const StabChain based = bsgs_build(augmented, vertices + leaves, prefix);

  std::vector<Perm> out;
  for (const auto& g : based.stabilizer_generators(vertices)) {
    std::vector<Point> images(leaves);
    for (std::size_t x = 0; x < leaves; ++x) images[x] = static_cast<Point>(g[static_cast<Point>(vertices + x)] - vertices);
    out.emplace_back(std::move(images));
  }
  return reduce_generators(out, leaves);
}

Perm section_project(const Perm& p, const Vertex& omega, std::size_t d) {
  const std::size_t n = level_of(p, d);
  if (omega.level() > n) throw DomainError("vertex is deeper than the permutation's level");
  const std::size_t start = vertex_rank(omega, d).rank * power(d, n - omega.level());
  const std::size_t block = power(d, n - omega.level());
  std::vector<Point> images(block);
  for (std::size_t r = 0; r < block; ++r) {
    const Point y = p[static_cast<Point>(start + r)];
    if (y < start || y >= start + block) throw DomainError("permutation moves vertex '" + omega.str() + "'");
    images[r] = static_cast<Point>(y - start);
  }
  return Perm(std::move(images));
}

Perm product_embed(std::span<const Perm> parts) {
  if (parts.empty()) throw DomainError("product embedding needs at least one part");
  const std::size_t m = parts.front().degree();
  std::vector<Point> images;
  images.reserve(parts.size() * m);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() != m) throw DomainError("product parts have different degrees");
    for (Point x : parts[i].images()) images.push_back(static_cast<Point>(i * m + x));
  }
  return Perm(std::move(images));
}

}  // namespace branchdim
