#include <random>

#include "branchdim/error.hpp"
#include "branchdim/wordparse.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace branchdim;

namespace {

Element w(const std::string& text) { return parse_word(text, grigorchuk2()); }

Element letters(std::initializer_list<std::pair<char, int>> xs) {
  Word out;
  for (auto [name, exp] : xs) out.push_back({name == 'a' ? 0u : 1u, static_cast<std::int8_t>(exp)});
  return Element(grigorchuk2(), out);
}

}  // namespace

TEST_CASE("bundled definition") {
  const auto def = parse_group_def("alphabet 4\ngen a = ((1 2 3 4); e, e, e, e)\ngen b = (e; a, e, a, b)");
  CHECK(*def == *grigorchuk2());
  const Decomposition dec = decompose(Element::generator(def, "b"));
  CHECK(dec.root.is_identity());
  CHECK(format_element(dec.sections[0]) == "a");
  CHECK(format_element(dec.sections[1]) == "e");
  CHECK(format_element(dec.sections[3]) == "b");
  CHECK(*load_group_def(BRANCHDIM_DATA_DIR "/grigorchuk2.grp") == *grigorchuk2());
  CHECK_THROWS_AS(load_group_def(BRANCHDIM_DATA_DIR "/missing.grp"), ParseError);
}

TEST_CASE("group definition parsing") {
  const auto swap = parse_group_def("alphabet 4\ngen a = ((1 2)(3 4); e,e,e,e)");
  CHECK(swap->generator(0).root == Perm::from_cycles(4, {{0, 1}, {2, 3}}));
  const auto commented = parse_group_def("# header\n\nalphabet 2  # binary\ngen s = ((1 2); e, s)\n");
  CHECK(commented->d() == 2);
  const auto forward = parse_group_def("alphabet 2\ngen x = (e; y, x)\ngen y = ((1 2); e, e)\n");
  CHECK(forward->size() == 2);
}

TEST_CASE("group definition errors carry positions") {
  auto expect_error = [](const std::string& src, std::size_t line) {
    try {
      parse_group_def(src);
      FAIL("accepted: " << src);
    } catch (const ParseError& e) {
      CHECK_MESSAGE(e.line() == line, e.what());
      CHECK(e.column() >= 1);
    }
  };
  expect_error("alphabet 4\ngen a = ((1 2 5); e, e, e, e)", 2);
  expect_error("alphabet 4\ngen a = ((1 2)(2 3); e, e, e, e)", 2);
  expect_error("alphabet 4\ngen a = ((1 2 3 4); e, e, e, e)\ngen a = (e; e, e, e, e)", 3);
  expect_error("alphabet 4\ngen b = (e; a, e, a, b)", 2);
  expect_error("alphabet 4\ngen a = ((1 2 3 4); e, e, e)", 2);
  expect_error("alphabet 4\ngen a = ((1 2 3 4); e, e, e, e, e)", 2);
  expect_error("gen a = ((1 2); e, e)", 1);
  expect_error("alphabet 4\nalphabet 4\ngen a = (e; e, e, e, e)", 2);
  expect_error("alphabet 4\n", 2);
  expect_error("# nothing", 1);
  expect_error("alphabet 4\ngen e = (e; e, e, e, e)", 2);
  expect_error("alphabet 4\ngen a = ((1 2 3 4) e, e, e, e)", 2);
  expect_error("alphabet 4\ngen a = ((1 2 3 4); e, e, e, e) junk", 2);
}

TEST_CASE("parse_word examples") {
  const Element c = w("[b, a, a^2]");
  // [x, y, z] = [[x, y], z] with [x, y] = x^-1 y^-1 x y
  const Element ba = letters({{'b', -1}, {'a', -1}, {'b', 1}, {'a', 1}});
  CHECK(c == inverse(ba) * w("a^-2") * ba * w("a^2"));
  CHECK(c == letters({{'a', -1}, {'b', -1}, {'a', 1}, {'b', 1}, {'a', -1}, {'a', -1}, {'b', -1}, {'a', -1}, {'b', 1}, {'a', 1}, {'a', 1}, {'a', 1}}));
  const Decomposition dec = decompose(c);
  CHECK(equivalent(dec.sections[3], w("a^-1 b a")));
  CHECK(w("b^(a^2)") == letters({{'a', -1}, {'a', -1}, {'b', 1}, {'a', 1}, {'a', 1}}));
  CHECK(w("a^4") == letters({{'a', 1}, {'a', 1}, {'a', 1}, {'a', 1}}));
  CHECK(is_identity(w("a^4")));
  CHECK(w("e").empty());
  CHECK(w("a * b") == w("a b"));
  CHECK(w("b^a") == w("a^-1 b a"));
  CHECK(w("[a, b, b]") == commutator(commutator(w("a"), w("b")), w("b")));
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(w(""), ParseError);
  CHECK_THROWS_AS(w("   "), ParseError);
  CHECK_THROWS_AS(w("c"), ParseError);
  CHECK_THROWS_AS(w("(a b"), ParseError);
  CHECK_THROWS_AS(w("[a]"), ParseError);
  CHECK_THROWS_AS(w("a^"), ParseError);
  CHECK_THROWS_AS(w("a ]"), ParseError);
  CHECK_THROWS_AS(w("a^99999999999999999999999"), ResourceError);
}

TEST_CASE("precedence") {
  CHECK(w("a b^2") == w("a b b"));
  CHECK(w("(a b)^2") == w("a b a b"));
  CHECK_FALSE(w("a b^2") == w("(a b)^2"));
  CHECK_FALSE(equivalent(w("a b^2"), w("(a b)^2")));
}

TEST_CASE("commutator expansion for all generator pairs") {
  for (const char* x : {"a", "b"})
    for (const char* y : {"a", "b"}) {
      const std::string text = std::string("[") + x + ", " + y + "]";
      CHECK(w(text) == w(x).pow(-1) * w(y).pow(-1) * w(x) * w(y));
    }
}

TEST_CASE("format_element examples") {
  CHECK(format_element(Element::identity(grigorchuk2())) == "e");
  CHECK(format_element(letters({{'a', 1}, {'a', 1}, {'b', -1}})) == "a^2 b^-1");
  CHECK(format_element(letters({{'b', 1}, {'a', -1}})) == "b a^-1");
}

TEST_CASE("format and parse round trip on 500 random words") {
  std::mt19937_64 rng(500);
  const auto def = grigorchuk2();
  for (int i = 0; i < 500; ++i) {
    const Element g = oracle::random_element(rng, def, 30);
    CHECK(parse_word(format_element(g), def) == g);
  }
  const auto multi = parse_group_def("alphabet 3\ngen x = ((1 2 3); e, e, e)\ngen yy = (e; x, yy, e)\ngen z2 = ((1 2); z2, e, yy)\n");
  for (int i = 0; i < 100; ++i) {
    const Element g = oracle::random_element(rng, multi, 20);
    CHECK(parse_word(format_element(g), multi) == g);
  }
}
