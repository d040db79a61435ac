#include "branchdim/elements.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "branchdim/error.hpp"

namespace branchdim {

void append_reduced(Word& word, const Word& tail) {
  for (const Letter& x : tail) {
    if (!word.empty() && word.back() == x.inverse())
      word.pop_back();
    else
      word.push_back(x);
  }
}

Word inverse_word(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->inverse());
  return out;
}

GroupDef::GroupDef(std::size_t d, std::vector<GeneratorSpec> generators, std::size_t word_length_guard)
    : d_(d), generators_(std::move(generators)), guard_(word_length_guard) {
  if (d_ < 2 || d_ > 9) throw DomainError("alphabet size must lie in 2..9");
  if (generators_.empty()) throw DomainError("a group definition needs at least one generator");
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.name.empty() || g.name == "e" || g.name == "@")
      throw DomainError("invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second) throw DomainError("duplicate generator '" + g.name + "'");
    if (g.root.degree() != d_) throw DomainError("root permutation of '" + g.name + "' is not on 1..d");
    if (g.sections.size() != d_) throw DomainError("generator '" + g.name + "' needs exactly d sections");
    for (const auto& w : g.sections)
      for (const auto& x : w)
        if (x.gen >= generators_.size() || (x.exp != 1 && x.exp != -1))
          throw DomainError("section of '" + g.name + "' references an undeclared generator");
  }
  for (const auto& g : generators_) {
    const bool rooted = std::all_of(g.sections.begin(), g.sections.end(), [](const Word& w) { return w.empty(); });
    rooted_order_.push_back(rooted ? static_cast<std::size_t>(g.root.order()) : 0);
  }
}

std::optional<std::uint32_t> GroupDef::find(const std::string& name) const {
  for (std::uint32_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::string format_root(const Perm& root) {
  std::ostringstream out;
  std::vector<bool> seen(root.degree(), false);
  for (Point x = 0; x < root.degree(); ++x) {
    if (seen[x] || root[x] == x) continue;
    out << '(';
    for (Point y = x; !seen[y]; y = root[y]) {
      if (y != x) out << ' ';
      out << y + 1;
      seen[y] = true;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "e" : s;
}

std::string format_word(const GroupDef& def, const Word& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    const long long run = static_cast<long long>(j - i) * word[i].exp;
    if (i != 0) out << ' ';
    out << def.name(word[i].gen);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

std::string GroupDef::canonical_text() const {
  std::ostringstream out;
  out << "alphabet " << d_ << '\n';
  for (const auto& g : generators_) {
    out << "gen " << g.name << " = (" << format_root(g.root) << ';';
    for (std::size_t x = 0; x < d_; ++x) out << (x == 0 ? " " : ", ") << format_word(*this, g.sections[x]);
    out << ")\n";
  }
  return out.str();
}

Element::Element(GroupDefPtr def, Word word) : def_(std::move(def)) {
  if (!def_) throw DomainError("element without a group definition");
  for (const auto& x : word)
    if (x.gen >= def_->size() || (x.exp != 1 && x.exp != -1)) throw DomainError("letter outside the group definition");
  append_reduced(word_, word);
  if (word_.size() > def_->word_length_guard())
    throw ResourceError("word length " + std::to_string(word_.size()) + " exceeds the guard of " +
                        std::to_string(def_->word_length_guard()) + " letters");
}

Element Element::generator(GroupDefPtr def, const std::string& name) {
  const auto index = def->find(name);
  if (!index) throw DomainError("unknown generator '" + name + "'");
  return Element(std::move(def), {Letter{*index, 1}});
}

namespace {

void check_same_def(const Element& g, const Element& h) {
  if (g.def_ptr() == h.def_ptr()) return;
  if (!g.def_ptr() || !h.def_ptr() || !(g.def() == h.def()))
    throw DomainError("elements belong to different group definitions");
}

}  // namespace

Element Element::operator*(const Element& rhs) const {
  check_same_def(*this, rhs);
  Word w = word_;
  append_reduced(w, rhs.word_);
  return Element(def_, std::move(w));
}

Element Element::pow(long long exponent) const {
  const Word base = exponent < 0 ? inverse_word(word_) : word_;
  const unsigned long long count = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                                : static_cast<unsigned long long>(exponent);
  if (!base.empty() && count > def_->word_length_guard())
    throw ResourceError("power exceeds the word-length guard");
  Word w;
  for (unsigned long long i = 0; i < count; ++i) {
    append_reduced(w, base);
    if (w.size() > def_->word_length_guard()) throw ResourceError("power exceeds the word-length guard");
  }
  return Element(def_, std::move(w));
}

Element compose(const Element& g, const Element& h) { return g * h; }

Element inverse(const Element& g) { return Element(g.def_ptr(), inverse_word(g.word())); }

Element conjugate(const Element& x, const Element& y) { return inverse(y) * x * y; }

Element commutator(const Element& x, const Element& y) { return inverse(x) * inverse(y) * x * y; }

namespace {

struct RawDecomposition {
  Perm root;
  std::vector<Word> sections;
};

// Wreath recursion on raw words: for a positive letter s at running vertex y,
// the contribution is s_y and y moves to y^s; for s^-1 it is (s_{y'})^-1 with
// y' = y^{s^-1}.
RawDecomposition decompose_word(const GroupDef& def, const Word& word) {
  const std::size_t d = def.d();
  RawDecomposition out{Perm(d), std::vector<Word>(d)};
  std::vector<Perm> inverse_roots;
  inverse_roots.reserve(def.size());
  for (std::size_t i = 0; i < def.size(); ++i) inverse_roots.push_back(def.generator(i).root.inverse());
  for (std::size_t x = 0; x < d; ++x) {
    Point y = static_cast<Point>(x);
    for (const Letter& letter : word) {
      const auto& gen = def.generator(letter.gen);
      if (letter.exp > 0) {
        append_reduced(out.sections[x], gen.sections[y]);
        y = gen.root[y];
      } else {
        y = inverse_roots[letter.gen][y];
        append_reduced(out.sections[x], inverse_word(gen.sections[y]));
      }
    }
  }
  for (const Letter& letter : word)
    out.root *= letter.exp > 0 ? def.generator(letter.gen).root : inverse_roots[letter.gen];
  return out;
}

// Free reduction plus collapsing runs of purely rooted generators modulo the
// order of their root permutation; both are valid relations in the group.
Word normalize(const GroupDef& def, const Word& word) {
  struct Run {
    std::uint32_t gen;
    long long exp;
  };
  std::vector<Run> runs;
  for (const Letter& x : word) {
    if (!runs.empty() && runs.back().gen == x.gen) {
      Run& top = runs.back();
      top.exp += x.exp;
      if (const auto order = static_cast<long long>(def.rooted_order(x.gen)); order > 0) {
        top.exp %= order;
        if (top.exp < 0) top.exp += order;
      }
      if (top.exp == 0) runs.pop_back();
    } else {
      long long e = x.exp;
      if (const auto order = static_cast<long long>(def.rooted_order(x.gen)); order > 0) {
        e %= order;
        if (e < 0) e += order;
      }
      if (e != 0) runs.push_back({x.gen, e});
    }
  }
  Word out;
  for (const Run& r : runs) {
    const Letter l{r.gen, static_cast<std::int8_t>(r.exp > 0 ? 1 : -1)};
    for (long long i = 0; i < (r.exp > 0 ? r.exp : -r.exp); ++i) out.push_back(l);
  }
  return out;
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size() * 5);
  for (const Letter& x : w) {
    const std::uint32_t code = x.gen * 2U + (x.exp > 0 ? 0U : 1U);
    key.append(reinterpret_cast<const char*>(&code), sizeof(code));
  }
  return key;
}

}  // namespace

Decomposition decompose(const Element& g) {
  RawDecomposition raw = decompose_word(g.def(), g.word());
  Decomposition out{std::move(raw.root), {}};
  out.sections.reserve(raw.sections.size());
  for (auto& w : raw.sections) out.sections.emplace_back(g.def_ptr(), std::move(w));
  return out;
}

Perm root_perm(const Element& g) {
  Perm root(g.def().d());
  for (const Letter& letter : g.word()) {
    const Perm& r = g.def().generator(letter.gen).root;
    root *= letter.exp > 0 ? r : r.inverse();
  }
  return root;
}

Element section_at(const Element& g, const Vertex& v) {
  Element current = g;
  for (std::size_t i = 0; i < v.level(); ++i) {
    const std::size_t x = v[i];
    if (x < 1 || x > g.def().d()) throw DomainError("vertex letter out of range");
    current = decompose(current).sections[x - 1];
  }
  return current;
}

Vertex act(const Element& g, const Vertex& v) {
  std::vector<std::uint8_t> image;
  image.reserve(v.level());
  Element current = g;
  for (std::size_t i = 0; i < v.level(); ++i) {
    const std::size_t x = v[i];
    if (x < 1 || x > g.def().d()) throw DomainError("vertex letter out of range");
    Decomposition dec = decompose(current);
    image.push_back(static_cast<std::uint8_t>(dec.root[static_cast<Point>(x - 1)] + 1));
    current = std::move(dec.sections[x - 1]);
  }
  return Vertex(std::move(image));
}

bool is_identity(const Element& g, const IdentityOptions& options) {
  const GroupDef& def = g.def();
  std::unordered_set<std::string> assumed;
  std::vector<Word> pending{normalize(def, g.word())};
  while (!pending.empty()) {
    Word w = std::move(pending.back());
    pending.pop_back();
    if (w.empty()) continue;
    if (!assumed.insert(word_key(w)).second) continue;
    if (assumed.size() > options.max_visited)
      throw ResourceError("identity test visited more than " + std::to_string(options.max_visited) + " words");
    RawDecomposition dec = decompose_word(def, w);
    if (!dec.root.is_identity()) return false;
    for (auto& s : dec.sections) {
      if (s.size() > def.word_length_guard()) throw ResourceError("section exceeds the word-length guard");
      pending.push_back(normalize(def, s));
    }
  }
  return true;
}

bool equivalent(const Element& g, const Element& h, const IdentityOptions& options) {
  return is_identity(g * inverse(h), options);
}

}  // namespace branchdim
