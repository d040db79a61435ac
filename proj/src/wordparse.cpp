#include "branchdim/wordparse.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "branchdim/error.hpp"

namespace branchdim {

const std::string_view kGrigorchuk2Source =
    "# Second Grigorchuk group on the 4-adic tree\n"
    "alphabet 4\n"
    "gen a = ((1 2 3 4); e, e, e, e)\n"
    "gen b = (e; a, e, a, b)\n";

namespace {

enum class Tok { Name, Int, Sym, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      t.kind = Tok::Name;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Int;
      t.text = text.substr(i, j - i);
      i = j;
    } else if (std::string_view("()[],;^*-=@").find(c) != std::string_view::npos) {
      t.kind = Tok::Sym;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", line, i + 1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = text.size() + 1;
  out.push_back(end);
  return out;
}

using Lookup = std::function<std::optional<std::uint32_t>(const std::string&)>;

// Recursive-descent evaluator over a token vector; produces reduced free-group words.
class WordParser {
 public:
  WordParser(const std::vector<Token>& tokens, std::size_t pos, Lookup lookup, std::size_t guard)
      : tokens_(tokens), pos_(pos), lookup_(std::move(lookup)), guard_(guard) {}

  std::size_t pos() const { return pos_; }
  const Token& peek() const { return tokens_[pos_]; }

  Word word() {
    if (!starts_factor()) fail("expected a word");
    Word w = factor();
    for (;;) {
      if (is_sym("*")) {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        break;
      }
      append(w, factor());
    }
    return w;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw ParseError(what + (t.kind == Tok::End ? " at end of input" : " near '" + t.text + "'"), t.line,
                     t.column);
  }

  bool is_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }

  void expect(std::string_view s) {
    if (!is_sym(s)) fail("expected '" + std::string(s) + "'");
    ++pos_;
  }

 private:
  bool starts_factor() const { return peek().kind == Tok::Name || is_sym("(") || is_sym("["); }

  void check(const Word& w) const {
    if (w.size() > guard_)
      throw ResourceError("expanded word exceeds the guard of " + std::to_string(guard_) + " letters");
  }

  void append(Word& w, const Word& tail) const {
    append_reduced(w, tail);
    check(w);
  }

  Word power(const Word& base, long long n) const {
    const Word unit = n < 0 ? inverse_word(base) : base;
    const unsigned long long count = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
    Word out;
    if (unit.empty()) return out;
    if (count > guard_) throw ResourceError("exponent exceeds the word-length guard");
    for (unsigned long long i = 0; i < count; ++i) append(out, unit);
    return out;
  }

  long long integer() {
    bool negative = false;
    if (is_sym("-")) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Tok::Int) fail("expected an integer exponent");
    unsigned long long value = 0;
    for (char c : peek().text) {
      const auto digit = static_cast<unsigned long long>(c - '0');
      if (value > (static_cast<unsigned long long>(std::numeric_limits<long long>::max()) - digit) / 10)
        throw ResourceError("exponent " + peek().text + " is too large");
      value = value * 10 + digit;
    }
    ++pos_;
    const auto signed_value = static_cast<long long>(value);
    return negative ? -signed_value : signed_value;
  }

  Word factor() {
    Word w = atom();
    while (is_sym("^")) {
      ++pos_;
      if (peek().kind == Tok::Int || is_sym("-")) {
        w = power(w, integer());
      } else if (starts_factor()) {
        const Word y = atom();
        Word conj = inverse_word(y);
        append(conj, w);
        append(conj, y);
        w = std::move(conj);
      } else {
        fail("expected an exponent or a conjugating word after '^'");
      }
    }
    return w;
  }

  Word atom() {
    const Token& t = peek();
    if (t.kind == Tok::Name) {
      ++pos_;
      if (t.text == "e") return {};
      const auto index = lookup_(t.text);
      if (!index) throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
      return {Letter{*index, 1}};
    }
    if (is_sym("(")) {
      ++pos_;
      Word w = word();
      expect(")");
      return w;
    }
    if (is_sym("[")) {
      ++pos_;
      Word acc = word();
      std::size_t args = 1;
      while (is_sym(",")) {
        ++pos_;
        const Word y = word();
        // [x, y] = x^-1 y^-1 x y
        Word c = inverse_word(acc);
        append(c, inverse_word(y));
        append(c, acc);
        append(c, y);
        acc = std::move(c);
        ++args;
      }
      if (args < 2) fail("a commutator needs at least two arguments");
      expect("]");
      return acc;
    }
    fail("expected a generator, 'e', '(' or '['");
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  Lookup lookup_;
  std::size_t guard_;
};

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

Perm parse_root(const std::vector<Token>& tokens, std::size_t& pos, std::size_t d) {
  const Token& first = tokens[pos];
  if (first.kind == Tok::Name && first.text == "e") {
    ++pos;
    return Perm(d);
  }
  if (!(first.kind == Tok::Sym && first.text == "("))
    throw ParseError("expected 'e' or a cycle '(i j ...)'", first.line, first.column);
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(d, false);
  while (tokens[pos].kind == Tok::Sym && tokens[pos].text == "(") {
    ++pos;
    std::vector<Point> cycle;
    while (tokens[pos].kind == Tok::Int) {
      const Token& t = tokens[pos];
      const unsigned long value = t.text.size() > 3 ? 1000UL : std::stoul(t.text);
      if (value < 1 || value > d)
        throw ParseError("letter " + t.text + " out of range 1.." + std::to_string(d), t.line, t.column);
      if (used[value - 1]) throw ParseError("letter " + t.text + " repeated in permutation", t.line, t.column);
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
      ++pos;
    }
    const Token& close = tokens[pos];
    if (!(close.kind == Tok::Sym && close.text == ")")) throw ParseError("expected ')' closing a cycle", close.line, close.column);
    if (cycle.empty()) throw ParseError("empty cycle", close.line, close.column);
    ++pos;
    cycles.push_back(std::move(cycle));
  }
  return Perm::from_cycles(d, cycles);
}

}  // namespace

GroupDefPtr parse_group_def(std::string_view source, std::size_t word_length_guard) {
  struct GenLine {
    std::vector<Token> tokens;
  };
  std::optional<std::size_t> d;
  std::vector<GenLine> gen_lines;
  std::map<std::string, std::uint32_t> names;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    const auto nl = source.find('\n', start);
    const std::string_view raw = source.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? source.size() + 1 : nl + 1;
    ++line_no;
    auto tokens = tokenize(strip_comment(raw), line_no);
    if (tokens.front().kind == Tok::End) continue;
    const Token& head = tokens.front();
    if (head.kind == Tok::Name && head.text == "alphabet") {
      if (d) throw ParseError("duplicate 'alphabet' header", head.line, head.column);
      if (!gen_lines.empty()) throw ParseError("'alphabet' must precede the generators", head.line, head.column);
      const Token& value = tokens[1];
      if (value.kind != Tok::Int || tokens[2].kind != Tok::End)
        throw ParseError("expected 'alphabet <d>'", value.line, value.column);
      const unsigned long v = value.text.size() > 2 ? 100UL : std::stoul(value.text);
      if (v < 2 || v > 9) throw ParseError("alphabet size must lie in 2..9", value.line, value.column);
      d = v;
    } else if (head.kind == Tok::Name && head.text == "gen") {
      if (!d) throw ParseError("'gen' before the 'alphabet' header", head.line, head.column);
      const Token& name = tokens[1];
      if (name.kind != Tok::Name) throw ParseError("expected a generator name", name.line, name.column);
      if (name.text == "e" || name.text == "gen" || name.text == "alphabet")
        throw ParseError("reserved generator name '" + name.text + "'", name.line, name.column);
      if (!names.emplace(name.text, static_cast<std::uint32_t>(gen_lines.size())).second)
        throw ParseError("duplicate generator '" + name.text + "'", name.line, name.column);
      gen_lines.push_back({std::move(tokens)});
    } else {
      throw ParseError("expected 'alphabet' or 'gen'", head.line, head.column);
    }
  }
  if (!d) throw ParseError("missing 'alphabet' header", line_no, 1);
  if (gen_lines.empty()) throw ParseError("no 'gen' lines", line_no, 1);

  const Lookup lookup = [&names](const std::string& n) -> std::optional<std::uint32_t> {
    const auto it = names.find(n);
    if (it == names.end()) return std::nullopt;
    return it->second;
  };

  std::vector<GeneratorSpec> specs;
  for (const auto& gl : gen_lines) {
    const auto& tokens = gl.tokens;
    GeneratorSpec spec;
    spec.name = tokens[1].text;
    std::size_t pos = 2;
    auto expect = [&](std::string_view s) {
      const Token& t = tokens[pos];
      if (!(t.kind == Tok::Sym && t.text == s))
        throw ParseError("expected '" + std::string(s) + "'", t.line, t.column);
      ++pos;
    };
    expect("=");
    expect("(");
    spec.root = parse_root(tokens, pos, *d);
    expect(";");
    for (std::size_t x = 0; x < *d; ++x) {
      if (x != 0) expect(",");
      WordParser wp(tokens, pos, lookup, word_length_guard);
      spec.sections.push_back(wp.word());
      pos = wp.pos();
    }
    const Token& t = tokens[pos];
    if (t.kind == Tok::Sym && t.text == ",")
      throw ParseError("generator '" + spec.name + "' has more than " + std::to_string(*d) + " sections", t.line, t.column);
    expect(")");
    if (tokens[pos].kind != Tok::End)
      throw ParseError("unexpected text after generator definition", tokens[pos].line, tokens[pos].column);
    specs.push_back(std::move(spec));
  }
  return std::make_shared<const GroupDef>(*d, std::move(specs), word_length_guard);
}

GroupDefPtr load_group_def(const std::filesystem::path& path, std::size_t word_length_guard) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read group definition '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_def(buffer.str(), word_length_guard);
}

GroupDefPtr grigorchuk2() {
  static const GroupDefPtr def = parse_group_def(kGrigorchuk2Source);
  return def;
}

Element parse_word(std::string_view text, const GroupDefPtr& def) {
  if (!def) throw DomainError("parse_word needs a group definition");
  const auto tokens = tokenize(text, 1);
  if (tokens.front().kind == Tok::End) throw ParseError("empty word expression");
  const Lookup lookup = [&def](const std::string& n) { return def->find(n); };
  WordParser p(tokens, 0, lookup, def->word_length_guard());
  Word w = p.word();
  if (p.peek().kind != Tok::End) p.fail("unexpected token");
  return Element(def, std::move(w));
}

std::string format_element(const Element& g) { return format_word(g.def(), g.word()); }

}  // namespace branchdim
