#include "doctest.h"
#include "support.hpp"

#include "qinv/action.hpp"

using namespace qinv;
using namespace qinv::testing;

namespace {

Scalar q(int k = 1) { return Scalar::q_power(k); }
Element x(int i) { return Element::x(i); }
Element y(int i) { return Element::y(i); }

// Letter-level Leibniz expansion on a free word, then normal form.
Element act_on_word(Generator g, const Word& w) {
  std::vector<int> kexp;
  for (const Letter& l : w) kexp.push_back(l.kind == LetterKind::Y ? 1 : -1);
  Element out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    const Letter& l = w[t];
    Scalar c;
    Letter r = l;
    if (g == Generator::E && l.kind == LetterKind::X) {
      c = Scalar::s_power(1);
      r.kind = LetterKind::Y;
    } else if (g == Generator::F && l.kind == LetterKind::Y) {
      c = Scalar::s_power(-1);
      r.kind = LetterKind::X;
    } else {
      continue;
    }
    int shift = 0;
    for (std::size_t u = 0; u < t; ++u) shift -= kexp[u];
    for (std::size_t u = t + 1; u < w.size(); ++u) shift += kexp[u];
    Word v = w;
    v[t] = r;
    out += normalize(v) * c.shifted(shift);
  }
  return out;
}

Element apply_k_power(int power, const Element& a) {
  Element r = a;
  for (int i = 0; i < std::abs(power); ++i) r = act(power > 0 ? Generator::K : Generator::Kinv, r);
  return r;
}

}  // namespace

TEST_CASE("action on generators") {
  CHECK(act(Generator::E, x(1)) == y(1) * Scalar::s_power(1));
  CHECK(act(Generator::F, y(1)) == x(1) * Scalar::s_power(-1));
  CHECK(act(Generator::E, y(1)).is_zero());
  CHECK(act(Generator::F, x(1)).is_zero());
  CHECK(act(Generator::K, Element(1)) == Element(1));
  CHECK(act(Generator::E, Element(1)).is_zero());
  CHECK(act(Generator::K, x(1)) == x(1) * Scalar::s_power(-1));
  CHECK(act(Generator::L, y(2)) == y(2) * Scalar::s_power(1));
  // E(x^3 y^2) = q^{1/2} [3] x^2 y^3
  CHECK(act(Generator::E, Element::monomial({{1, 3, 2}})) ==
        Element::monomial({{1, 2, 3}}) * (qnum(3) * Scalar::s_power(1)));
}

TEST_CASE("block action agrees with letter-level Leibniz rule") {
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(uniform(1, 6), 3);
    for (Generator g : {Generator::E, Generator::F}) CHECK(act(g, normalize(w)) == act_on_word(g, w));
  }
}

TEST_CASE("module-algebra relations on random elements") {
  for (int trial = 0; trial < 200; ++trial) {
    Element a = random_element(2, 3, 3), b = random_element(2, 2, 3);
    CHECK(act(Generator::K, a * b) == act(Generator::K, a) * act(Generator::K, b));
    CHECK(act(Generator::E, a * b) ==
          act(Generator::E, a) * act(Generator::K, b) + act(Generator::Kinv, a) * act(Generator::E, b));
    CHECK(act(Generator::F, a * b) ==
          act(Generator::F, a) * act(Generator::K, b) + act(Generator::Kinv, a) * act(Generator::F, b));
    CHECK(act(Generator::K, act(Generator::E, a)) == act(Generator::E, act(Generator::K, a)) * q());
    CHECK(act(Generator::K, act(Generator::F, a)) == act(Generator::F, act(Generator::K, a)) * q(-1));
    Element comm = act(Generator::E, act(Generator::F, a)) - act(Generator::F, act(Generator::E, a));
    Element rhs = (apply_k_power(2, a) - apply_k_power(-2, a)) * (q() - q(-1)).inverse();
    CHECK(comm == rhs);
    CHECK(act(Generator::Kinv, act(Generator::K, a)) == a);
    CHECK(act(Generator::Linv, act(Generator::L, a)) == a);
  }
}

TEST_CASE("bracket symbols") {
  Element b12 = bracket(1, 2);
  CHECK(b12 == x(1) * y(2) * Scalar::s_power(-1) - y(1) * x(2) * Scalar::s_power(1));
  CHECK(bracket(2, 1) == -b12);
  CHECK(bracket(1, 1).is_zero());
  CHECK(b12.star() == b12);
  CHECK(bracket(3, 1).star() == bracket(3, 1));
  CHECK(is_invariant(b12));
  CHECK_FALSE(is_invariant(x(1)));
  CHECK(is_invariant(bracket(1, 2) * bracket(3, 4) + bracket(1, 3) * bracket(2, 4)));
  CHECK(b12.multidegree() == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK((bracket(1, 2) * bracket(1, 3) * bracket(2, 3)).multidegree() == std::map<int, int>{{1, 2}, {2, 2}, {3, 2}});
  CHECK(b12.weight() == 0);
}

TEST_CASE("closed bracket powers") {
  for (int n = 0; n <= 5; ++n) CHECK(bracket_power(1, 2, n) == bracket(1, 2).pow(n));
  CHECK(bracket_power(2, 5, 3) == bracket(2, 5).pow(3));
  // (ij)^2 = x_i^2 y_j^2 - [2] x_i y_i x_j y_j + q^2 y_i^2 x_j^2
  Element sq = Element::monomial({{1, 2, 0}, {2, 0, 2}}) - Element::monomial({{1, 1, 1}, {2, 1, 1}}) * qnum(2) +
               Element::monomial({{1, 0, 2}, {2, 2, 0}}) * q(2);
  CHECK(bracket_power(1, 2, 2) == sq);
  CHECK(bracket_power(1, 2, 1) == bracket(1, 2));
  CHECK_THROWS(bracket_power(2, 1, 2));
}

TEST_CASE("products and sums of invariants are invariant") {
  for (int trial = 0; trial < 20; ++trial) {
    Element a = random_invariant(2, 4), b = random_invariant(1, 4);
    CHECK(is_invariant(a));
    CHECK(is_invariant(a * b));
    CHECK(is_invariant(a + a * Scalar(3)));
  }
}

TEST_CASE("generator names") {
  CHECK(parse_generator("E") == Generator::E);
  CHECK(parse_generator("Kinv") == Generator::Kinv);
  CHECK_FALSE(parse_generator("G").has_value());
  CHECK(generator_name(Generator::Linv) == "Linv");
}
