#include "branchdim/weights.hpp"

#include <sstream>

#include "branchdim/error.hpp"

namespace branchdim {

namespace {

std::uint8_t mod4(int x) { return static_cast<std::uint8_t>(((x % 4) + 4) % 4); }

struct AB {
  std::uint32_t a;
  std::uint32_t b;
};

AB find_ab(const GroupDef& def) {
  const auto a = def.find("a");
  const auto b = def.find("b");
  if (!a || !b) throw DomainError("weights need a definition with generators 'a' and 'b'");
  return {*a, *b};
}

}  // namespace

WeightVector WeightVector::of(int r0, int r1, int r2, int r3) {
  return WeightVector{{mod4(r0), mod4(r1), mod4(r2), mod4(r3)}};
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
  return of(r[0] + o.r[0], r[1] + o.r[1], r[2] + o.r[2], r[3] + o.r[3]);
}

WeightVector WeightVector::operator-() const { return of(-r[0], -r[1], -r[2], -r[3]); }

std::string WeightVector::str() const {
  std::ostringstream out;
  out << '(' << int{r[0]} << ',' << int{r[1]} << ',' << int{r[2]} << ',' << int{r[3]} << ')';
  return out.str();
}

BWord to_b_word(const Element& g) {
  const auto [a, b] = find_ab(g.def());
  BWord out;
  int k = 0;
  for (const Letter& l : g.word()) {
    if (l.gen == a) {
      k += l.exp;
    } else if (l.gen == b) {
      const BLetter x{mod4(-k), l.exp};
      if (!out.empty() && out.back().index == x.index && out.back().exp == -x.exp)
        out.pop_back();
      else
        out.push_back(x);
    } else {
      throw DomainError("weights are defined for words over {a, b} only");
    }
  }
  if (mod4(k) != 0) throw DomainError("element is not in St(1): a-exponent sum is not divisible by 4");
  return out;
}

Element from_b_word(const BWord& w, const GroupDefPtr& def) {
  const auto [a, b] = find_ab(*def);
  const Element ea(def, {Letter{a, 1}});
  const Element eb(def, {Letter{b, 1}});
  Element out = Element::identity(def);
  for (const BLetter& x : w) {
    const Element bi = conjugate(eb, ea.pow(x.index));
    out = out * (x.exp > 0 ? bi : inverse(bi));
  }
  return out;
}

std::string format_b_word(const BWord& w) {
  if (w.empty()) return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out << ' ';
    out << 'b' << int{w[i].index};
    if (w[i].exp < 0) out << "^-1";
  }
  return out.str();
}

WeightVector weight_vector(const Element& g) {
  std::array<int, 4> sums{0, 0, 0, 0};
  for (const BLetter& x : to_b_word(g)) sums[x.index] += x.exp;
  return WeightVector::of(sums[0], sums[1], sums[2], sums[3]);
}

std::uint8_t total_weight(const Element& g) { return weight_vector(g).total(); }

bool st2_test(const Element& g) {
  const auto w = weight_vector(g);
  return mod4(w.r[0] + w.r[2]) == 0 && mod4(w.r[1] + w.r[3]) == 0;
}

bool st3_weight_check(const Element& g) { return weight_vector(g).is_zero(); }

}  // namespace branchdim
