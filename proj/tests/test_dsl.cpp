#include "doctest.h"
#include "support.hpp"

#include "qinv/action.hpp"
#include "qinv/dsl.hpp"
#include "qinv/serialize.hpp"

using namespace qinv;
using namespace qinv::testing;

namespace {

Scalar q(int k = 1) { return Scalar::q_power(k); }
Scalar s(int k) { return Scalar::s_power(k); }
Element x(int i) { return Element::x(i); }
Element y(int i) { return Element::y(i); }

std::size_t error_position(const std::string& text) {
  try {
    dsl::evaluate(text);
  } catch (const dsl::ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("scalar literals") {
  CHECK(dsl::parse_scalar("q^(1/2)") == s(1));
  CHECK(dsl::parse_scalar("q^(-3/2)") == s(-3));
  CHECK(dsl::parse_scalar("q^-1") == q(-1));
  CHECK(dsl::parse_scalar("q^(2/1)") == q(2));
  CHECK(dsl::parse_scalar("[3]") == qnum(3));
  CHECK(dsl::parse_scalar("(3)") == qparen(3));
  CHECK(dsl::parse_scalar("(3+1)") == Scalar(4));
  CHECK(dsl::parse_scalar("1/2") == Scalar(Rational(1, 2)));
  CHECK(dsl::parse_scalar("[2]^-2") == qnum(2).pow(-2));
  CHECK(dsl::parse_scalar("(q^2-1)/(q+1)") == q() - 1);
}

TEST_CASE("letters and relations") {
  CHECK(dsl::parse_element("x[2]*x[1]") == x(1) * x(2) * q(2));
  CHECK(dsl::parse_element("x[2]*y[1]") == y(1) * x(2) * q() + x(1) * y(2) * (q(2) - 1));
  CHECK(dsl::parse_element("b[1,2]") == bracket(1, 2));
  CHECK(dsl::parse_element("q^(-1/2)*x[1]*y[2] - q^(1/2)*y[1]*x[2]") == bracket(1, 2));
  CHECK(dsl::parse_element("b[1,2]^2") == bracket_power(1, 2, 2));
  CHECK(dsl::parse_element("x[-1]") == x(-1));
  CHECK(dsl::parse_element("prod(1,2;q)") == product_form({1, 2}, q()));
  CHECK(dsl::parse_element("form(1; y[1], -x[1])") == x(0) * y(1) - y(0) * x(1));
  CHECK(dsl::parse_velement("v[2]*v[1]") == v_normalize({2, 1}));
  CHECK(dsl::parse_free("A[1,2,0]*C[1,2,2]") == FreeElement::symbol(1, 2, 0) * FreeElement::symbol(1, 2, 2));
}

TEST_CASE("forms") {
  NForm f = dsl::parse_form("prod(1,2;q)");
  CHECK(f.n == 2);
  CHECK(assemble(f) == product_form({1, 2}, q()));
  NForm g = dsl::parse_form("form(2; x[1], y[1], x[2])");
  CHECK(g.coefficients[2] == x(2));
  CHECK_THROWS(dsl::parse_form("x[0]*x[1] + x[1]"));
  CHECK(dsl::parse_form("x[1]").n == 0);
}

TEST_CASE("errors") {
  CHECK(error_position("x[1] +* y[1]") == 6);
  CHECK(error_position("x[1") == 3);
  CHECK(error_position("z[1]") == 0);
  CHECK(error_position("x[1]^(1/2)") == 4);
  CHECK(error_position("x[1]/y[1]") == 4);
  CHECK(error_position("form(2; 1, 2)") == 0);
  CHECK(error_position("b[1,1]") == 0);
  CHECK_THROWS_AS(dsl::evaluate("x[1]*v[2]"), dsl::KindError);
  CHECK_THROWS_AS(dsl::evaluate("A[1,1,0] + x[1]"), dsl::KindError);
  CHECK_THROWS_AS(dsl::parse_element("v[1]"), dsl::KindError);
}

TEST_CASE("printing round-trips through the parser") {
  for (int t = 0; t < 40; ++t) {
    Element e = random_element(4, 4, 3);
    INFO(e.to_string());
    CHECK(dsl::parse_element(e.to_string()) == e);
  }
  for (int t = 0; t < 40; ++t) {
    Scalar c = random_scalar();
    INFO(c.to_q_string());
    CHECK(dsl::parse_scalar(c.to_q_string()) == c);
    CHECK(dsl::parse_scalar(dsl::quantum_scalar_string(c)) == c);
  }
  VElement v = poly(3);
  CHECK(dsl::parse_velement(v.to_string()) == v);
  FreeElement f = FreeElement::symbol(1, 2, 1) * FreeElement::symbol(2, 2, 0) * s(3) - FreeElement::symbol(1, 2, 2);
  CHECK(dsl::parse_free(f.to_string()) == f);
}

TEST_CASE("bracket text") {
  BracketPoly p = BracketPoly::bracket(1, 2) * BracketPoly::bracket(1, 2);
  p *= -qnum(2).inverse();
  CHECK(dsl::bracket_text(p) == "-(1/[2])*b[1,2]^2");
  CHECK(dsl::parse_element(dsl::bracket_text(p)) == p.evaluate());
  Element inv = bracket(1, 2) * bracket(3, 4) * (q(3) - q(5)) + bracket(1, 3) * bracket(2, 4) * s(3);
  BracketPoly d = bracket_decompose(inv);
  CHECK(dsl::parse_element(dsl::bracket_text(d)) == inv);
  CHECK(dsl::quantum_scalar_string(qnum(2) * qnum(3) / qnum(5)) == "[2]*[3]/[5]");
  CHECK(dsl::quantum_scalar_string(q(-3) / (qnum(2) * 3)) == "q^-3/(3*[2])");
  CHECK(dsl::quantum_scalar_string(q(2) / (q(2) + 1)) == "q/[2]");
  CHECK(dsl::quantum_scalar_string(qnum(3) / (q(4) + 1)) == "[3]/(q^4+1)");
}

TEST_CASE("json round trips") {
  for (int t = 0; t < 20; ++t) {
    Element e = random_element(3, 3, 3);
    Json j = to_json(e);
    CHECK(element_from_json(j) == e);
    CHECK(element_from_json(Json::parse(j.dump())) == e);
    CHECK(dsl::parse_element(element_from_json(j).to_string()) == e);
  }
  Rational r(mpz_class("123456789012345678901234567891"), mpz_class(7));
  r.canonicalize();
  Scalar big = Scalar(r) * s(-5);
  CHECK(scalar_from_json(to_json(big)) == big);
  VElement v = elementary_symmetric(3, 2);
  CHECK(velement_from_json(to_json(v)) == v);
  FreeElement f = FreeElement::symbol(1, 2, 1) * FreeElement::symbol(1, 2, 0) * q(2);
  CHECK(free_from_json(to_json(f)) == f);
  NForm form = extract(product_form({1, 2}, q()), 2);
  NForm back = form_from_json(to_json(form));
  CHECK(back.n == 2);
  CHECK(assemble(back) == assemble(form));
  CHECK_THROWS(element_from_json(Json::parse("[{\"monomial\": [[1, -1, 0]], \"coef\": {\"num\": {}, \"den\": {\"0\": [1, 1]}}}]")));
}
