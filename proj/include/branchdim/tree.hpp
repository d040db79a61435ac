#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace branchdim {

/// Deepest level any tree enumeration may touch unless the caller raises it.
inline constexpr std::size_t kDefaultLevelCap = 6;

/// A vertex of the d-adic tree: a word over the letters 1..d. The empty word
/// is the root and the word length is the level.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  /// Parses a bare digit string; "" and "@" denote the root. Letters must lie in 1..d.
  static Vertex parse(std::string_view text, std::size_t d);

  const std::vector<std::uint8_t>& letters() const noexcept { return letters_; }
  std::size_t level() const noexcept { return letters_.size(); }
  bool is_root() const noexcept { return letters_.empty(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return letters_[i]; }

  Vertex child(std::uint8_t letter) const;
  Vertex concat(const Vertex& tail) const;
  Vertex prefix(std::size_t length) const;
  Vertex suffix_from(std::size_t start) const;

  /// Digit string; the root serializes as "".
  std::string str() const;
  /// Digit string; the root serializes as "@".
  std::string cli_str() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

struct LevelIndex {
  std::size_t level = 0;
  std::uint64_t rank = 0;

  friend bool operator==(const LevelIndex&, const LevelIndex&) = default;
};

/// d^n, throwing ResourceError if the value overflows 64 bits.
std::uint64_t power(std::size_t d, std::size_t n);

/// Lexicographic position of `v` among the words of its length (letter 1 smallest).
LevelIndex vertex_rank(const Vertex& v, std::size_t d);
Vertex rank_vertex(LevelIndex index, std::size_t d);

/// All d^n words of length n in lexicographic order. Throws ResourceError if
/// n exceeds `level_cap`.
std::vector<Vertex> level_words(std::size_t d, std::size_t n, std::size_t level_cap = kDefaultLevelCap);

}  // namespace branchdim
