#include "doctest.h"
#include "support.hpp"

#include "qinv/action.hpp"
#include "qinv/catalog.hpp"
#include "qinv/symbolic.hpp"

using namespace qinv;
using namespace qinv::testing;

namespace {

Scalar q(int k = 1) { return Scalar::q_power(k); }
Scalar s(int k) { return Scalar::s_power(k); }
Element b(int i, int j) { return bracket(i, j); }
FreeElement sym(int i, int n = 2, int form = 1) { return FreeElement::symbol(form, n, i); }

FreeElement quadratic_I1() { return sym(0) * sym(2) * q(-1) + sym(2) * sym(0) * q(-3) - sym(1) * sym(1) * (qnum(2) * q(-1)); }

}  // namespace

TEST_CASE("free action on words") {
  FreeElement ac = sym(0) * sym(2);
  FreeElement expected = free_act(Generator::E, sym(0)) * free_act(Generator::K, sym(2)) +
                         free_act(Generator::Kinv, sym(0)) * free_act(Generator::E, sym(2));
  CHECK(free_act(Generator::E, ac) == expected);
  CHECK(free_act(Generator::K, sym(0)) == sym(0) * q());
  CHECK_THROWS(free_act(Generator::L, sym(0)));
}

TEST_CASE("universal invariants of the quadratic form") {
  CHECK(is_universal_invariant(quadratic_I1()));
  CHECK_FALSE(is_universal_invariant(sym(0)));
  CHECK(is_universal_invariant(quadratic_I1() * quadratic_I1()));
}

TEST_CASE("symbolic method") {
  UniversalCovariant u = symbol_to_universal(b(1, 2).pow(2) * q(-1), 2, 2);
  CHECK(u.order == 0);
  CHECK(u.invariant() == quadratic_I1());

  UniversalCovariant lin = symbol_to_universal(b(1, 2), 1, 2);
  FreeElement printed = sym(1, 1) * sym(0, 1) * -s(-1) + sym(0, 1) * sym(1, 1) * s(1);
  CHECK(lin.invariant() == printed);

  UniversalCovariant two = symbol_to_universal(b(1, 2) * b(1, 3) * b(2, 3) * -q(-4), 2, 3);
  CHECK(is_universal_invariant(two.invariant()));
  CHECK(two.invariant() == catalog("quadratic.I2").invariant());
}

TEST_CASE("realisations") {
  NForm f = extract(product_form({1, 2}, q()), 2);
  CHECK(realize(quadratic_I1(), {f}) == b(1, 2).pow(2) * -qnum(2).inverse());

  NForm square = extract(product_form({1, 1}, 1), 2);
  CHECK(realize(quadratic_I1(), {square}).is_zero());

  Element i2 = realize(catalog("quadratic.I2").invariant(), {f});
  CHECK_FALSE(i2.is_zero());
  Element cube = b(1, 2).pow(3);
  auto ratio = i2.terms().begin()->second / cube.terms().begin()->second;
  CHECK(i2 == cube * ratio);
}

TEST_CASE("round trips") {
  CHECK(roundtrip_check(b(1, 2).pow(2), 2, 2));
  CHECK(roundtrip_check(b(1, 2) * b(1, 3) * b(2, 3), 2, 3));
  CHECK(roundtrip_check(Element(1), 0, 0));
  CHECK(roundtrip_check(b(1, 2).pow(3) * q(-5), 3, 2));
}

TEST_CASE("catalog") {
  for (const auto& name : catalog_names()) {
    INFO(name);
    const UniversalCovariant& u = catalog(name);
    if (u.order == 0) {
      CHECK(is_universal_invariant(u.invariant()));
    } else {
      CHECK(is_universal_covariant(u));
    }
  }
  CHECK_THROWS(catalog("no.such"));
  CHECK(catalog("quadratic.I1").invariant() == quadratic_I1());
}
