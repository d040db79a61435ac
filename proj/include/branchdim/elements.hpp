#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "branchdim/perm.hpp"
#include "branchdim/tree.hpp"

namespace branchdim {

inline constexpr std::size_t kDefaultWordLengthGuard = 10'000;

/// One letter of a group word: generator index and exponent +1 or -1.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t exp = 1;

  Letter inverse() const noexcept { return {gen, static_cast<std::int8_t>(-exp)}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Appends `tail` to `word`, cancelling adjacent x x^-1 pairs.
void append_reduced(Word& word, const Word& tail);
Word inverse_word(const Word& word);

struct GeneratorSpec {
  std::string name;
  Perm root;                  // on {0..d-1}
  std::vector<Word> sections; // d entries, indices into the generator list
};

/// An automaton group on a d-letter alphabet: per generator, a rooted
/// permutation and d section words (the wreath recursion).
class GroupDef {
 public:
  GroupDef(std::size_t d, std::vector<GeneratorSpec> generators,
           std::size_t word_length_guard = kDefaultWordLengthGuard);

  std::size_t d() const noexcept { return d_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const GeneratorSpec& generator(std::size_t i) const { return generators_.at(i); }
  const std::string& name(std::size_t i) const { return generators_.at(i).name; }
  std::optional<std::uint32_t> find(const std::string& name) const;
  std::size_t word_length_guard() const noexcept { return guard_; }

  /// Order of the root permutation when every section is trivial, else 0.
  std::size_t rooted_order(std::size_t i) const { return rooted_order_.at(i); }

  /// Deterministic textual form in the group-definition file syntax.
  std::string canonical_text() const;

  friend bool operator==(const GroupDef& x, const GroupDef& y) {
    return x.canonical_text() == y.canonical_text();
  }

 private:
  std::size_t d_;
  std::vector<GeneratorSpec> generators_;
  std::vector<std::size_t> rooted_order_;
  std::size_t guard_;
};

using GroupDefPtr = std::shared_ptr<const GroupDef>;

/// A freely reduced word over the generators of a group definition.
///
/// Elements are words, not normal forms: two elements represent the same tree
/// automorphism iff `is_identity(g * inverse(h))`.
class Element {
 public:
  Element() = default;
  Element(GroupDefPtr def, Word word);

  static Element identity(GroupDefPtr def) { return Element(std::move(def), {}); }
  /// Throws DomainError for an unknown name.
  static Element generator(GroupDefPtr def, const std::string& name);

  const GroupDef& def() const { return *def_; }
  const GroupDefPtr& def_ptr() const noexcept { return def_; }
  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }

  Element operator*(const Element& rhs) const;
  Element pow(long long exponent) const;

  /// Letter-for-letter equality (same definition, same reduced word).
  friend bool operator==(const Element& x, const Element& y) {
    return x.word_ == y.word_ && (x.def_ == y.def_ || (x.def_ && y.def_ && *x.def_ == *y.def_));
  }

 private:
  GroupDefPtr def_;
  Word word_;
};

Element compose(const Element& g, const Element& h);
Element inverse(const Element& g);
/// y^-1 x y
Element conjugate(const Element& x, const Element& y);
/// x^-1 y^-1 x y
Element commutator(const Element& x, const Element& y);

/// Wreath recursion of an element: g acts as `root` on the first letter and as
/// sections[x] below vertex x (0-based), so (x v)^g = x^root v^{sections[x]}.
struct Decomposition {
  Perm root;
  std::vector<Element> sections;
};

Decomposition decompose(const Element& g);
Perm root_perm(const Element& g);
Element section_at(const Element& g, const Vertex& v);
Vertex act(const Element& g, const Vertex& v);

struct IdentityOptions {
  /// Upper bound on distinct words visited by one decision run.
  std::size_t max_visited = 1'000'000;
};

/// Decides g = 1 by closing over iterated sections: g is trivial iff every
/// word reachable through sections has a trivial root permutation. Words met
/// again are assumed trivial (coinductive closure), which settles self-similar
/// loops such as b^4 -> (a^4, e, a^4, b^4).
bool is_identity(const Element& g, const IdentityOptions& options = {});
/// g and h represent the same automorphism.
bool equivalent(const Element& g, const Element& h, const IdentityOptions& options = {});

}  // namespace branchdim

namespace branchdim {

/// Run-length text of a word, e.g. "a^2 b^-1"; the empty word is "e".
std::string format_word(const GroupDef& def, const Word& word);
/// Cycle notation over 1..d, "e" for the identity.
std::string format_root(const Perm& root);

}  // namespace branchdim
