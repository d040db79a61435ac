#include "branchdim/tree.hpp"

#include <limits>

#include "branchdim/error.hpp"

namespace branchdim {

namespace {

void check_alphabet(std::size_t d) {
  if (d < 2 || d > 9) throw DomainError("alphabet size must lie in 2..9");
}

}  // namespace

Vertex Vertex::parse(std::string_view text, std::size_t d) {
  check_alphabet(d);
  if (text == "@") return Vertex{};
  std::vector<std::uint8_t> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '1' || static_cast<std::size_t>(c - '0') > d)
      throw ParseError("vertex letter '" + std::string(1, c) + "' is not in 1.." + std::to_string(d), 1, i + 1);
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Vertex(std::move(letters));
}

Vertex Vertex::child(std::uint8_t letter) const {
  auto letters = letters_;
  letters.push_back(letter);
  return Vertex(std::move(letters));
}

Vertex Vertex::concat(const Vertex& tail) const {
  auto letters = letters_;
  letters.insert(letters.end(), tail.letters_.begin(), tail.letters_.end());
  return Vertex(std::move(letters));
}

Vertex Vertex::prefix(std::size_t length) const {
  if (length > letters_.size()) throw DomainError("prefix longer than vertex");
  return Vertex({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length)});
}

Vertex Vertex::suffix_from(std::size_t start) const {
  if (start > letters_.size()) throw DomainError("suffix start beyond vertex");
  return Vertex({letters_.begin() + static_cast<std::ptrdiff_t>(start), letters_.end()});
}

std::string Vertex::str() const {
  std::string out;
  for (auto x : letters_) out.push_back(static_cast<char>('0' + x));
  return out;
}

std::string Vertex::cli_str() const { return letters_.empty() ? "@" : str(); }

std::uint64_t power(std::size_t d, std::size_t n) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / d) throw ResourceError("d^n overflows");
    result *= d;
  }
  return result;
}

LevelIndex vertex_rank(const Vertex& v, std::size_t d) {
  check_alphabet(d);
  std::uint64_t rank = 0;
  for (auto x : v.letters()) {
    if (x < 1 || x > d) throw DomainError("vertex letter out of range");
    rank = rank * d + (x - 1U);
  }
  return {v.level(), rank};
}

Vertex rank_vertex(LevelIndex index, std::size_t d) {
  check_alphabet(d);
  if (index.rank >= power(d, index.level)) throw DomainError("rank out of range for level");
  std::vector<std::uint8_t> letters(index.level);
  std::uint64_t r = index.rank;
  for (std::size_t i = index.level; i-- > 0;) {
    letters[i] = static_cast<std::uint8_t>(r % d + 1);
    r /= d;
  }
  return Vertex(std::move(letters));
}

std::vector<Vertex> level_words(std::size_t d, std::size_t n, std::size_t level_cap) {
  check_alphabet(d);
  if (n > level_cap)
    throw ResourceError("level " + std::to_string(n) + " exceeds the level cap " + std::to_string(level_cap));
  const std::uint64_t count = power(d, n);
  std::vector<Vertex> out;
  out.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) out.push_back(rank_vertex({n, r}, d));
  return out;
}

}  // namespace branchdim
