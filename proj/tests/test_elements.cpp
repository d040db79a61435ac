#include <random>

#include "branchdim/elements.hpp"
#include "branchdim/error.hpp"
#include "branchdim/wordparse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace branchdim;

namespace {

Element w(const std::string& text) { return parse_word(text, grigorchuk2()); }

void check_tuple(const std::string& word, const std::vector<std::string>& sections) {
  const Decomposition dec = decompose(w(word));
  CHECK_MESSAGE(dec.root.is_identity(), word);
  REQUIRE(dec.sections.size() == sections.size());
  for (std::size_t i = 0; i < sections.size(); ++i)
    CHECK_MESSAGE(equivalent(dec.sections[i], w(sections[i])), word << " section " << i + 1);
}

bool sections_balanced(const Decomposition& dec) {
  // a-exponent of each section agrees with the b-exponents of its neighbours.
  auto exponent = [](const Element& g, std::uint32_t gen) {
    int s = 0;
    for (const auto& l : g.word())
      if (l.gen == gen) s += l.exp;
    return ((s % 4) + 4) % 4;
  };
  for (std::size_t x = 0; x < 4; ++x) {
    const int neighbours = exponent(dec.sections[(x + 1) % 4], 1) + exponent(dec.sections[(x + 3) % 4], 1);
    if (exponent(dec.sections[x], 0) != neighbours % 4) return false;
  }
  return true;
}

std::vector<int> digits(const Vertex& v) { return {v.letters().begin(), v.letters().end()}; }

}  // namespace

TEST_CASE("group definition validation") {
  const Perm cycle = Perm::from_cycles(4, {{0, 1, 2, 3}});
  const std::vector<Word> empty(4);
  CHECK_NOTHROW(GroupDef(4, {{"a", cycle, empty}}));
  CHECK_THROWS_AS(GroupDef(4, {{"e", cycle, empty}}), DomainError);
  CHECK_THROWS_AS(GroupDef(4, {{"@", cycle, empty}}), DomainError);
  CHECK_THROWS_AS(GroupDef(4, {{"", cycle, empty}}), DomainError);
  CHECK_THROWS_AS(GroupDef(4, {{"a", cycle, empty}, {"a", cycle, empty}}), DomainError);
  CHECK_THROWS_AS(GroupDef(4, {{"a", Perm(3), empty}}), DomainError);
  CHECK_THROWS_AS(GroupDef(4, {{"a", cycle, std::vector<Word>(3)}}), DomainError);
  CHECK_THROWS_AS(GroupDef(4, {{"a", cycle, {Word{{5, 1}}, {}, {}, {}}}}), DomainError);
  const auto def = grigorchuk2();
  CHECK(def->d() == 4);
  CHECK(def->size() == 2);
  CHECK(def->find("b") == 1u);
  CHECK_FALSE(def->find("c"));
  CHECK(def->rooted_order(0) == 4);
}

TEST_CASE("compose and inverse examples") {
  CHECK(compose(w("a"), w("a^-1")).empty());
  CHECK(compose(w("a"), w("a")).length() == 2);
  CHECK(compose(w("a b"), w("b^-1")) == w("a"));
  CHECK(inverse(Element::identity(grigorchuk2())).empty());
  CHECK(inverse(w("a b")) == w("b^-1 a^-1"));
  CHECK(inverse(w("a^2 b^-1")) == w("b a^-2"));
  CHECK(format_element(inverse(w("a^2 b^-1"))) == "b a^-2");
  CHECK(w("a").pow(-3) == w("a^-3"));
  CHECK(conjugate(w("b"), w("a")) == w("a^-1 b a"));
  CHECK(commutator(w("a"), w("b")) == w("a^-1 b^-1 a b"));
  const auto other = parse_group_def("alphabet 4\ngen a = ((1 2 3 4); e, e, e, e)\n");
  CHECK_THROWS_AS(compose(w("a"), Element::generator(other, "a")), DomainError);
  CHECK_THROWS_AS(Element::generator(grigorchuk2(), "z"), DomainError);
}

TEST_CASE("decompose reproduces the published tuples") {
  check_tuple("b", {"a", "e", "a", "b"});
  check_tuple("b^a", {"b", "a", "e", "a"});
  check_tuple("[a, b]", {"b^-1 a", "a^-1", "a", "a^-1 b"});
  check_tuple("[b, a, a]", {"b^-1 a b^-1 a", "a^-2 b", "a^2", "a^-1 b a^-1"});
  check_tuple("[b, a, a^2]", {"b^-1", "a^-1 b^-1 a", "b", "a^-1 b a"});
  check_tuple("b (b^(a^2))^-1", {"e", "b^-1", "e", "b"});
  check_tuple("[a, b]^(a^2)", {"a", "a^-1 b", "b^-1 a", "a^-1"});
  // Exact words, not just up to equivalence, for the generator rows.
  const Decomposition b = decompose(w("b"));
  CHECK(b.sections[0] == w("a"));
  CHECK(b.sections[1].empty());
  CHECK(b.sections[3] == w("b"));
}

TEST_CASE("published tuple for [b, a, a^2] is not a wreath image") {
  // The second section printed as a^-1 b a cannot occur: sections 1 and 3
  // carry a-exponent r0 + r2 while the b-exponents of sections 2 and 4 are r2 and r0,
  // so the printed tuple would need a root (1 3)(2 4) in section 1.
  const Decomposition dec = decompose(w("[b, a, a^2]"));
  CHECK_FALSE(equivalent(dec.sections[1], w("a^-1 b a")));
  CHECK(sections_balanced(dec));
  Decomposition printed{Perm(4), {w("b^-1"), w("a^-1 b a"), w("b"), w("a^-1 b a")}};
  CHECK_FALSE(sections_balanced(printed));
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Element g = oracle::random_element(rng, grigorchuk2(), 12);
    const Decomposition d = decompose(g);
    if (d.root.is_identity()) CHECK(sections_balanced(d));
  }
}

TEST_CASE("root_perm examples") {
  CHECK(root_perm(w("a")) == Perm::from_cycles(4, {{0, 1, 2, 3}}));
  CHECK(format_root(root_perm(w("a"))) == "(1 2 3 4)");
  CHECK(root_perm(w("b")).is_identity());
  CHECK(format_root(root_perm(w("b"))) == "e");
  CHECK(root_perm(w("a^2")) == Perm::from_cycles(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("section_at examples") {
  CHECK(section_at(w("b"), Vertex::parse("4", 4)) == w("b"));
  CHECK(section_at(w("b"), Vertex::parse("44", 4)) == w("b"));
  CHECK(equivalent(section_at(w("b^a"), Vertex::parse("1", 4)), w("b")));
  CHECK(section_at(w("a b"), Vertex()) == w("a b"));
}

TEST_CASE("act examples") {
  CHECK(act(w("a"), Vertex::parse("1", 4)).str() == "2");
  CHECK(act(w("b"), Vertex::parse("12", 4)).str() == "13");
  for (const char* v : {"21", "22", "23", "24", "2431"}) CHECK(act(w("b"), Vertex::parse(v, 4)).str() == v);
  CHECK(act(w("a"), Vertex()).is_root());
}

TEST_CASE("act agrees with the hand-coded recursion") {
  std::mt19937_64 rng(5);
  const auto def = grigorchuk2();
  for (int i = 0; i < 300; ++i) {
    const Element g = oracle::random_element(rng, def, 10);
    const Vertex v = oracle::random_vertex(rng, 4, 6);
    std::vector<int> x = digits(v);
    for (const auto& letter : g.word()) {
      const int times = letter.exp > 0 ? 1 : 3;  // a and b both have order 4
      for (int t = 0; t < times; ++t) x = letter.gen == 0 ? oracle::apply_a(x) : oracle::apply_b(x);
    }
    CHECK(digits(act(g, v)) == x);
  }
}

TEST_CASE("is_identity examples") {
  CHECK(is_identity(w("a^4")));
  CHECK(is_identity(w("b^4")));
  CHECK(is_identity(w("[b, b^(a^2)]")));
  CHECK_FALSE(is_identity(w("a^2")));
  CHECK_FALSE(is_identity(w("b^2")));
  CHECK_FALSE(is_identity(w("b (b^(a^2))^-1")));
  CHECK(is_identity(Element::identity(grigorchuk2())));
  CHECK(equivalent(w("b^-1"), w("b^3")));
}

TEST_CASE("decompose is a homomorphism into the wreath product") {
  std::mt19937_64 rng(2021);
  const auto def = grigorchuk2();
  for (int i = 0; i < 200; ++i) {
    const Element g = oracle::random_element(rng, def, 12);
    const Element h = oracle::random_element(rng, def, 12);
    const Decomposition dg = decompose(g), dh = decompose(h), dgh = decompose(g * h);
    CHECK(dgh.root == dg.root * dh.root);
    for (Point x = 0; x < 4; ++x) CHECK(equivalent(dgh.sections[x], dg.sections[x] * dh.sections[dg.root[x]]));
  }
}

TEST_CASE("reconstructing a decomposition") {
  // (root; sections) -> action on level 3 matches the element itself.
  std::mt19937_64 rng(99);
  const auto def = grigorchuk2();
  for (int i = 0; i < 100; ++i) {
    const Element g = oracle::random_element(rng, def, 12);
    const Decomposition dec = decompose(g);
    for (const auto& v : level_words(4, 3)) {
      const Point x = static_cast<Point>(v[0] - 1);
      const Vertex tail = act(dec.sections[x], v.suffix_from(1));
      CHECK(Vertex({static_cast<std::uint8_t>(dec.root[x] + 1)}).concat(tail) == act(g, v));
    }
  }
}

TEST_CASE("section law and action consistency") {
  std::mt19937_64 rng(17);
  const auto def = grigorchuk2();
  for (int i = 0; i < 200; ++i) {
    const Element g = oracle::random_element(rng, def, 12);
    const Vertex u = oracle::random_vertex(rng, 4, 2);
    const Vertex v = oracle::random_vertex(rng, 4, 2);
    CHECK(equivalent(section_at(section_at(g, u), v), section_at(g, u.concat(v))));
    CHECK(act(g, u.concat(v)) == act(g, u).concat(act(section_at(g, u), v)));
  }
}

TEST_CASE("level-1 stabilizer iff a-exponent vanishes mod 4") {
  std::mt19937_64 rng(23);
  const auto def = grigorchuk2();
  for (int i = 0; i < 300; ++i) {
    const Element g = oracle::random_element(rng, def, 15);
    int sum = 0;
    for (const auto& l : g.word())
      if (l.gen == 0) sum += l.exp;
    CHECK(root_perm(g).is_identity() == (((sum % 4) + 4) % 4 == 0));
  }
}

TEST_CASE("word length guard") {
  const auto def = parse_group_def(kGrigorchuk2Source, 20);
  const Element g = parse_word("a b a b a b a b a b", def);
  CHECK_NOTHROW(g * g);
  CHECK_THROWS_AS(g * g * g, ResourceError);
  CHECK_THROWS_AS(parse_word("b^21", def), ResourceError);
}
