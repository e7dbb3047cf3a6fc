#include "doctest.h"
#include "support.hpp"

#include "qinv/rewrite.hpp"

using namespace qinv;
using namespace qinv::testing;

namespace {

Scalar q(int k = 1) { return Scalar::q_power(k); }
Element x(int i) { return Element::x(i); }
Element y(int i) { return Element::y(i); }
Letter X(int i) { return {LetterKind::X, i}; }
Letter Y(int i) { return {LetterKind::Y, i}; }

}  // namespace

TEST_CASE("defining relations") {
  CHECK(normalize({X(2), X(1)}) == x(1) * x(2) * q(2));
  CHECK(normalize({Y(1), X(1)}) == Element::monomial({{1, 1, 1}}) * q(-1));
  CHECK(normalize({X(2), Y(1)}) == y(1) * x(2) * q() + x(1) * y(2) * (q(2) - Scalar(1)));
  CHECK(normalize({Y(2), Y(1)}) == y(1) * y(2) * q(2));
  CHECK(normalize({Y(2), X(1)}) == x(1) * y(2) * q());
  CHECK(normalize({X(1), Y(1)}) == Element::monomial({{1, 1, 1}}));
  CHECK(normalize({X(2), Y(1)}).to_string() == "q*y[1]*x[2] + (q^2-1)*x[1]*y[2]");
}

TEST_CASE("power rule x_j y_i^k") {
  for (int k = 1; k <= 5; ++k) {
    Element lhs = x(2) * y(1).pow(k);
    Element rhs = y(1).pow(k) * x(2) * q(k) + x(1) * y(1).pow(k - 1) * y(2) * (q(2 * k) - Scalar(1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("fast multiplication agrees with rewriting under both strategies") {
  for (int trial = 0; trial < 1000; ++trial) {
    Word w = random_word(uniform(0, 7), 3);
    Element fast = normalize(w);
    CHECK(fast == rewrite_normalize(w, RedexStrategy::Leftmost));
    CHECK(fast == rewrite_normalize(w, RedexStrategy::Rightmost));
  }
}

TEST_CASE("normalization is idempotent") {
  for (int trial = 0; trial < 50; ++trial) {
    Element e = normalize(random_word(6, 3));
    Element again;
    for (const auto& [m, c] : e.terms()) again += normalize(monomial_word(m)) * c;
    CHECK(again == e);
  }
}

TEST_CASE("braiding of sums") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      CHECK((x(i) + x(j)) * (y(i) + y(j)) == (y(i) + y(j)) * (x(i) + x(j)) * q());
    }
}

TEST_CASE("common right multiple") {
  Element lhs = x(2) * (x(2) * y(1) - x(1) * y(2) * (q(2) - q(-2)));
  Element rhs = y(1) * x(2) * x(2) * q(2);
  CHECK(lhs == rhs);
}

TEST_CASE("associativity, degree and weight preservation") {
  for (int trial = 0; trial < 60; ++trial) {
    Element a = random_element(2, 3, 3), b = random_element(2, 3, 3), c = random_element(2, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    Word w = random_word(6, 3);
    Element n = normalize(w);
    std::map<int, int> deg;
    int weight = 0;
    for (const Letter& l : w) {
      deg[l.index]++;
      weight += l.kind == LetterKind::Y ? 1 : -1;
    }
    if (!n.is_zero()) {
      CHECK(n.multidegree() == deg);
      CHECK(n.weight() == weight);
    }
  }
}

TEST_CASE("star is an involutive anti-automorphism") {
  for (int trial = 0; trial < 200; ++trial) {
    Element a = random_element(2, 3, 3), b = random_element(2, 3, 3);
    CHECK((a * b).star() == b.star() * a.star());
    CHECK(a.star().star() == a);
  }
  CHECK(Element(Scalar::s_power(1)).star() == Element(Scalar::s_power(-1)));
  CHECK((x(1) * y(2)).star() == normalize({Y(2), X(1)}));
}

TEST_CASE("module axioms and inspection") {
  Element a = random_element(3, 3, 3);
  CHECK(a + Element() == a);
  CHECK(a * Scalar(1) == a);
  CHECK((a * Scalar(-1) + a).is_zero());
  CHECK(x(1).weight() == -1);
  CHECK(Element::monomial({{1, 2, 1}}).weight() == -1);
  CHECK(Element(1).multidegree() == std::map<int, int>{});
  CHECK_FALSE((x(1) + x(2)).multidegree().has_value());
  CHECK_FALSE((x(1) + y(1) * x(1)).weight().has_value());
  CHECK_THROWS(Element::monomial({{2, 1, 0}, {1, 1, 0}}));
}
