#include "doctest.h"
#include "support.hpp"

#include "qinv/action.hpp"
#include "qinv/valgebra.hpp"

using namespace qinv;
using namespace qinv::testing;

namespace {

Scalar q(int k = 1) { return Scalar::q_power(k); }
VElement v(int i, int e = 1) { return VElement::v(i, e); }

VElement sum_v0(int n) {
  VElement s;
  for (int j = 0; j <= n; ++j) s += (n - j > 0 ? v(0, n - j) : VElement(1)) * elementary_symmetric(n, j);
  return s;
}

VElement word_product(const std::vector<int>& w) {
  VElement r(1);
  for (int i : w) r = r * v(i);
  return r;
}

}  // namespace

TEST_CASE("base relation and normal form") {
  CHECK(v(2) * v(1) == v(1) * v(2) * q(2) + v(1, 2) * (Scalar(1) - q(2)));
  CHECK(v(1) * v(2) == VElement::monomial({{1, 1}, {2, 1}}));
  CHECK(v(3) * v(1, 2) == VElement::monomial({{1, 2}, {3, 1}}, q(4)) + v(1, 3) * (Scalar(1) - q(4)));
  for (int a = 1; a <= 4; ++a)
    for (int j : {2, 5}) CHECK(v(j) * v(1, a) == v(1, a) * v(j) * q(2 * a) + v(1, a + 1) * (Scalar(1) - q(2 * a)));
  CHECK_THROWS(VElement::monomial({{2, 1}, {1, 1}}));
}

TEST_CASE("fast product agrees with letter rewriting") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> w;
    const int len = uniform(0, 6);
    for (int t = 0; t < len; ++t) w.push_back(uniform(0, 3));
    CHECK(word_product(w) == v_normalize(w));
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> a, b, c;
    for (auto* w : {&a, &b, &c})
      for (int t = uniform(1, 3); t > 0; --t) w->push_back(uniform(0, 3));
    VElement x = word_product(a), y = word_product(b), z = word_product(c);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("polynomials with zeros") {
  CHECK(poly(1) == v(0) - v(1));
  VElement p12 = poly({1, 2}), p21 = poly({2, 1});
  CHECK(p12 == poly(2));
  CHECK(p12 != p21);
  CHECK(p12 == v(0, 2) * q(2) - VElement::monomial({{0, 1}, {1, 1}}, q(2)) - VElement::monomial({{0, 1}, {2, 1}}) +
                   VElement::monomial({{1, 1}, {2, 1}}));
  CHECK(p21 == v(0, 2) * q(2) - VElement::monomial({{0, 1}, {1, 1}}) - VElement::monomial({{0, 1}, {2, 1}}, q(2)) +
                   VElement::monomial({{1, 1}, {2, 1}}, q(2)) + v(1, 2) * (Scalar(1) - q(2)));
  VElement printed12 = v(0, 2) * q(-2) - v(0) * (v(1) * q(2) + v(2)) * q(-4) + v(1) * v(2) * q(-4);
  VElement printed21 = v(0, 2) * q(-2) - v(0) * (v(1) + v(2) * q(2)) * q(-4) + v(1) * v(2) * q(-2) +
                       v(1, 2) * (q(-4) * (Scalar(1) - q(2)));
  CHECK(p12 == printed12 * q(4));
  CHECK(p21 == printed21 * q(4));
  CHECK_THROWS(poly(0));
}

TEST_CASE("expansion in v0 by symmetric functions") {
  for (int n = 1; n <= 5; ++n) {
    INFO("n=" << n);
    VElement p = poly(n);
    CHECK(p == sum_v0(n) * q(n * (n - 1)));
    for (int j = 0; j <= n; ++j) CHECK(p.v0_coefficient(n - j) == elementary_symmetric(n, j) * q(n * (n - 1)));
  }
  CHECK(elementary_symmetric(3, 0) == VElement(1));
  CHECK(elementary_symmetric(2, 1) == -(v(1) + v(2) * q(-2)));
  CHECK(elementary_symmetric(3, 3) == -(VElement::monomial({{1, 1}, {2, 1}, {3, 1}}, q(6 - 12))));
  CHECK_THROWS(elementary_symmetric(2, 3));
}

TEST_CASE("power sums and Newton relations") {
  CHECK(power_sum(1, 4) == v(1, 4));
  CHECK(power_sum(2, 1) == v(1) + v(2) * q(-2));
  CHECK(power_sum(3, 2) == v(1, 2) + v(2, 2) * q(-2) + v(3, 2) * q(-4));
  CHECK(power_sum(1, 1) == -elementary_symmetric(1, 1));
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 6; ++k) {
      INFO("n=" << n << " k=" << k);
      CHECK(newton_residual(n, k).is_zero());
    }
  CHECK_THROWS(newton_residual(0, 1));
}

TEST_CASE("q = 1 gives the classical Newton identities") {
  // At q = 1 the relations are commutative and A_j = (-1)^j e_j.
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 4; ++k) {
      VElement classical = power_sum(n, k);
      if (k <= n) classical += elementary_symmetric(n, k) * Scalar(k);
      for (int i = 1; i < k; ++i)
        if (k - i <= n) classical += elementary_symmetric(n, k - i) * power_sum(n, i);
      CHECK(classical.evaluate(Rational(1)).empty());
    }
  CHECK(v(2) * v(1) != v(1) * v(2));
  CHECK((v(2) * v(1)).evaluate(Rational(1)) == (v(1) * v(2)).evaluate(Rational(1)));
}

TEST_CASE("bracket relations behind the link to forms") {
  for (int i : {1, 2}) {
    Element b = bracket(0, i);
    CHECK(Element::y(0) * b == b * Element::y(0) * q(-1));
    CHECK(Element::y(i) * b == b * Element::y(i) * q());
    CHECK(Element::y(i + 1) * b == b * Element::y(i + 1) * q(3));
  }
}
