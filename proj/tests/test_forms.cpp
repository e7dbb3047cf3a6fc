#include "doctest.h"
#include "support.hpp"

#include "qinv/action.hpp"
#include "qinv/forms.hpp"
#include "qinv/polarisation.hpp"

using namespace qinv;
using namespace qinv::testing;

namespace {

Scalar q(int k = 1) { return Scalar::q_power(k); }
Scalar s(int k) { return Scalar::s_power(k); }
Element x(int i) { return Element::x(i); }
Element y(int i) { return Element::y(i); }
Element b(int i, int j) { return bracket(i, j); }

void check_table(const NForm& form) {
  for (const RelationCheck& r : coefficient_action_check(form)) {
    INFO(r.relation << " i=" << r.i);
    CHECK(r.holds);
  }
}

}  // namespace

TEST_CASE("linear form coefficients") {
  for (int i : {1, 3}) {
    NForm f = extract(b(0, i), 1);
    CHECK(f.coefficients[0] == y(i) * s(-1));
    CHECK(f.coefficients[1] == x(i) * -s(1));
    CHECK(f.coefficients[1] * f.coefficients[0] == f.coefficients[0] * f.coefficients[1] * q());
    check_table(f);
  }
  NForm lin{1, {y(2) * s(-1), x(2) * -s(1)}};
  CHECK(assemble(lin) == b(0, 2));
}

TEST_CASE("linear form (01)(23) - c(03)(12)") {
  for (long c : {1L, 2L}) {
    // The printed coefficient tables and the point belong to (01)(23) + c(03)(12);
    // the commutation relation below belongs to (01)(23) - c(03)(12).
    Element f = b(0, 1) * b(2, 3) + b(0, 3) * b(1, 2) * Scalar(c);
    NForm form = extract(f, 1);
    Element a = Element::monomial({{1, 1, 0}, {2, 0, 1}, {3, 0, 1}}, q(2) * Scalar(c)) +
                Element::monomial({{1, 0, 1}, {2, 1, 0}, {3, 0, 1}}, q(-1) - q(3) * Scalar(c)) -
                Element::monomial({{1, 0, 1}, {2, 0, 1}, {3, 1, 0}});
    Element bb = -Element::monomial({{1, 1, 0}, {2, 1, 0}, {3, 0, 1}}) +
                 Element::monomial({{1, 1, 0}, {2, 0, 1}, {3, 1, 0}}, q() - q(3) * Scalar(c)) +
                 Element::monomial({{1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, q(4) * Scalar(c));
    CHECK(form.coefficients[0] == a);
    CHECK(form.coefficients[1] == bb);
    check_table(form);

    NForm minus = extract(b(0, 1) * b(2, 3) - b(0, 3) * b(1, 2) * Scalar(c), 1);
    const Element &ma = minus.coefficients[0], &mb = minus.coefficients[1];
    Element t = b(1, 2) * b(1, 3) * b(2, 3);
    CHECK(mb * ma == ma * mb * q() + t * (s(7) * (q(2) - Scalar(1)) * Scalar(c)));
    check_table(minus);

    Point p = point_of_linear_form(form);
    Element px = Element::monomial({{1, 1, 0}, {2, 1, 0}, {3, 0, 1}}, s(-1)) -
                 Element::monomial({{1, 1, 0}, {2, 0, 1}, {3, 1, 0}}, s(1) - s(5) * Scalar(c)) -
                 Element::monomial({{1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, s(7) * Scalar(c));
    Element py = Element::monomial({{1, 1, 0}, {2, 0, 1}, {3, 0, 1}}, s(5) * Scalar(c)) +
                 Element::monomial({{1, 0, 1}, {2, 1, 0}, {3, 0, 1}}, s(-1) - s(7) * Scalar(c)) -
                 Element::monomial({{1, 0, 1}, {2, 0, 1}, {3, 1, 0}}, s(1));
    CHECK(p.X == px);
    CHECK(p.Y == py);
    CHECK(is_point(p));
  }
}

TEST_CASE("quadratic, cubic and quartic coefficient tables") {
  NForm f = extract(b(0, 1) * b(0, 2) * q(), 2);
  CHECK(f.coefficients[0] == y(1) * y(2) * q());
  CHECK(f.coefficients[1] == (x(1) * y(2) * -q(2) - y(1) * x(2) * q()) * qnum(2).inverse());
  CHECK(f.coefficients[2] == x(1) * x(2) * q(3));
  check_table(f);

  NForm sq = extract(b(0, 1).pow(2), 2);
  CHECK(sq.coefficients[0] == y(1).pow(2));
  CHECK(sq.coefficients[1] == -(x(1) * y(1)));
  CHECK(sq.coefficients[2] == x(1).pow(2) * q(2));
  check_table(sq);

  NForm cube = extract(b(0, 2).pow(3), 3);
  CHECK(cube.coefficients[0] == y(2).pow(3) * s(3));
  CHECK(cube.coefficients[1] == x(2) * y(2).pow(2) * -s(1));
  CHECK(cube.coefficients[2] == x(2).pow(2) * y(2) * s(3));
  CHECK(cube.coefficients[3] == x(2).pow(3) * -s(9));
  check_table(cube);

  NForm quart = extract(b(0, 3).pow(4), 4);
  CHECK(quart.coefficients[0] == y(3).pow(4) * q(4));
  CHECK(quart.coefficients[1] == x(3) * y(3).pow(3) * -q(2));
  CHECK(quart.coefficients[2] == x(3).pow(2) * y(3).pow(2) * q(2));
  CHECK(quart.coefficients[3] == x(3).pow(3) * y(3) * -q(4));
  CHECK(quart.coefficients[4] == x(3).pow(4) * q(8));
  check_table(quart);

  check_table(extract(product_form({1, 2, 3}, q(3)), 3));
  check_table(extract(product_form({1, 2, 3, 4}, q(6)), 4));
}

TEST_CASE("assemble and extract are inverse") {
  CHECK(assemble({0, {Element(1)}}) == Element(1));
  for (int trial = 0; trial < 30; ++trial) {
    NForm form;
    form.n = uniform(0, 3);
    for (int i = 0; i <= form.n; ++i) {
      Element a = random_element(2, uniform(1, 3), 3).relabeled({{1, 1}, {2, 2}, {3, 3}});
      form.coefficients.push_back(a);
    }
    NForm back = extract(assemble(form), form.n);
    for (int i = 0; i <= form.n; ++i) CHECK(back.coefficients[i] == form.coefficients[i]);
  }
  CHECK_THROWS(extract(b(0, 1), 2));
  CHECK_THROWS(extract(b(-1, 0) * b(0, 1), 2));
}

TEST_CASE("product forms") {
  Element f = product_form({1, 2}, q());
  CHECK(f == b(0, 1) * b(0, 2) * q());
  CHECK(f.star() == f);
  CHECK(product_form({1, 2, 3}, q(3)).star() == product_form({1, 2, 3}, q(3)));
  CHECK(product_form({4}, Scalar(1)) == b(0, 4));
  CHECK(b(0, 2) * b(0, 1) == b(0, 1) * b(0, 2) * q(2));
  CHECK(b(0, 2) * b(0, -1) == b(0, -1) * b(0, 2) * q(4));
  CHECK(b(0, -1) * b(0, -2) == b(0, -2) * b(0, -1) * q(2));
}

TEST_CASE("points") {
  CHECK(is_point({x(2), y(2)}));
  CHECK_FALSE(is_point({x(1), y(2)}));
  CHECK_FALSE(is_point({Element(), y(1)}));
  Element a = b(1, 2) * b(3, 4);
  CHECK(is_point({x(5) * a, y(5) * a}));
}

TEST_CASE("polars of forms") {
  Element f = product_form({2, 3}, q());
  CHECK(polar_form(f, 2, 1, 0) == f);
  CHECK(polar_form(f, 2, 1, 1) == (b(0, 2) * b(1, 3) + b(1, 2) * b(0, 3)) * qnum(2).inverse());
  CHECK(polar_form(f, 2, 1, 3).is_zero());
  CHECK_THROWS(polar_form(f, 2, 2, 1));

  NForm c = extract(f, 2);
  const Element &A = c.coefficients[0], &B = c.coefficients[1], &C = c.coefficients[2];
  CHECK(polar_form(f, 2, 1, 1) == x(0) * (x(1) * A + y(1) * B * q()) + y(0) * (x(1) * B + y(1) * C));

  Element g = product_form({2, 3, 4}, q(3));
  CHECK(polar_form(g, 3, 1, 1) ==
        (b(0, 2) * b(0, 3) * b(1, 4) + b(0, 2) * b(1, 3) * b(0, 4) + b(1, 2) * b(0, 3) * b(0, 4)) * (q() / qnum(3)));
  CHECK(polar_form(g, 3, 1, 2) ==
        (b(0, 2) * b(1, 3) * b(1, 4) + b(1, 2) * b(0, 3) * b(1, 4) + b(1, 2) * b(1, 3) * b(0, 4)) * (q() / qnum(3)));
  NForm cf = extract(g, 3);
  const Element &A3 = cf.coefficients[0], &B3 = cf.coefficients[1], &C3 = cf.coefficients[2], &D3 = cf.coefficients[3];
  Element x0 = x(0), y0 = y(0), x1 = x(1), y1 = y(1);
  CHECK(polar_form(g, 3, 1, 1) == x0 * x0 * (x1 * A3 + y1 * B3 * q(2)) + x0 * y0 * (x1 * B3 + y1 * C3 * q()) * qnum(2) +
                                      y0 * y0 * (x1 * C3 + y1 * D3));
  CHECK(polar_form(g, 3, 1, 2) == x0 * (x1 * x1 * A3 + x1 * y1 * B3 * (q() * qnum(2)) + y1 * y1 * C3 * q(2)) +
                                      y0 * (x1 * x1 * B3 + x1 * y1 * C3 * qnum(2) + y1 * y1 * D3));
}

TEST_CASE("polars compose and match the closed form") {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = uniform(1, 3);
    std::vector<int> idx;
    for (int t = 0; t < n; ++t) idx.push_back(uniform(2, 4));
    std::sort(idx.begin(), idx.end());
    Element f = product_form(idx, Scalar(1)) * (Element(1) + b(3, 4) * random_nonzero_scalar());
    for (int k = 0; k <= n + 1; ++k) {
      CHECK(polar_form_closed(f, n, 1, k) == polar_form(f, n, 1, k));
      for (int l = 0; k + l <= n + 1; ++l) {
        Element kl = polar_power(0, 1, polar_form(f, n, 1, k), l);
        CHECK(kl == polar_form(f, n, 1, k + l));
      }
    }
  }
  Element twosided = b(-2, 0) * b(0, 3) * b(-1, 2);
  for (int k = 0; k <= 2; ++k) CHECK(polar_form_closed(twosided, 2, 1, k) == polar_form(twosided, 2, 1, k));
}
