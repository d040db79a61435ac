#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "branchdim/elements.hpp"
#include "branchdim/perm.hpp"
#include "branchdim/tree.hpp"

namespace oracle {

using branchdim::Perm;
using branchdim::Point;

/// Every element of <gens>, by breadth-first closure under right multiplication.
inline std::set<std::vector<Point>> cayley_closure(const std::vector<Perm>& gens, std::size_t degree,
                                                   std::size_t limit = 20000) {
  std::vector<Point> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Point>(i);
  std::set<std::vector<Point>> seen{id};
  std::vector<std::vector<Point>> frontier{id};
  while (!frontier.empty() && seen.size() <= limit) {
    std::vector<std::vector<Point>> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        std::vector<Point> y(degree);
        for (std::size_t i = 0; i < degree; ++i) y[i] = g[x[i]];
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// The second Grigorchuk group acting on a 1-based word, coded straight from
/// a = (1 2 3 4) rooted and b = (e; a, e, a, b).
inline std::vector<int> apply_a(std::vector<int> w, std::size_t from = 0) {
  if (from < w.size()) w[from] = w[from] % 4 + 1;
  return w;
}

inline std::vector<int> apply_b(std::vector<int> w, std::size_t from = 0) {
  for (std::size_t i = from; i < w.size(); ++i) {
    if (w[i] == 1 || w[i] == 3) return apply_a(std::move(w), i + 1);
    if (w[i] == 2) return w;
  }
  return w;
}

/// Level-n image of a or b on the lexicographic rank of 1-based words.
inline Perm grigorchuk_level_perm(char gen, std::size_t n) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= 4;
  std::vector<Point> images(size);
  for (std::size_t r = 0; r < size; ++r) {
    std::vector<int> w(n);
    std::size_t x = r;
    for (std::size_t i = n; i-- > 0;) {
      w[i] = static_cast<int>(x % 4) + 1;
      x /= 4;
    }
    const auto img = gen == 'a' ? apply_a(w) : apply_b(w);
    std::size_t rank = 0;
    for (int letter : img) rank = rank * 4 + static_cast<std::size_t>(letter - 1);
    images[r] = static_cast<Point>(rank);
  }
  return Perm(images);
}

/// Iterated wreath power of C_4 on 4^n leaves: the rooted 4-cycle together
/// with a 4-cycle acting at every vertex of levels 1..n-1.
inline std::vector<Perm> wreath_generators(std::size_t n) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= 4;
  std::vector<Perm> out;
  for (std::size_t level = 0; level < n; ++level) {
    const std::size_t block = size >> (2 * level);
    const std::size_t child = block / 4;
    for (std::size_t start = 0; start < size; start += block) {
      std::vector<Point> images(size);
      for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<Point>(i);
      for (std::size_t i = start; i < start + block; ++i) {
        const std::size_t offset = i - start;
        images[i] = static_cast<Point>(start + (offset + child) % block);
      }
      out.emplace_back(images);
    }
  }
  return out;
}

inline branchdim::Element random_element(std::mt19937_64& rng, const branchdim::GroupDefPtr& def,
                                         std::size_t max_length) {
  const std::size_t length = rng() % (max_length + 1);
  branchdim::Word w;
  for (std::size_t i = 0; i < length; ++i) {
    const auto gen = static_cast<std::uint32_t>(rng() % def->size());
    w.push_back({gen, static_cast<std::int8_t>(rng() % 2 ? 1 : -1)});
  }
  return branchdim::Element(def, w);
}

inline branchdim::Vertex random_vertex(std::mt19937_64& rng, std::size_t d, std::size_t max_level) {
  const std::size_t level = rng() % (max_level + 1);
  std::vector<std::uint8_t> letters(level);
  for (auto& x : letters) x = static_cast<std::uint8_t>(rng() % d + 1);
  return branchdim::Vertex(letters);
}

}  // namespace oracle
