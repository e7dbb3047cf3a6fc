#include "qinv/serialize.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace qinv {

namespace {

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

int int_from_json(const Json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
  long long v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw std::invalid_argument("integer out of range: " + j.dump());
  return static_cast<int>(v);
}

const Json& array_of(const Json& j, std::size_t size) {
  if (!j.is_array() || j.size() != size)
    throw std::invalid_argument("expected an array of length " + std::to_string(size) + ", got " + j.dump());
  return j;
}

}  // namespace

Json to_json(const Rational& r) { return Json::array({integer_json(r.get_num()), integer_json(r.get_den())}); }

Rational rational_from_json(const Json& j) {
  array_of(j, 2);
  mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(integer_from_json(j[0]), den);
  r.canonicalize();
  return r;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected an exponent map");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int e = std::stoi(k, &used);
    if (used != k.size()) throw std::invalid_argument("bad exponent '" + k + "'");
    terms.emplace_back(e, rational_from_json(v));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const Scalar& c) { return {{"num", to_json(c.num())}, {"den", to_json(c.den())}}; }

Scalar scalar_from_json(const Json& j) {
  LaurentPoly den = laurent_from_json(j.at("den"));
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return Scalar(laurent_from_json(j.at("num")), den);
}

Json to_json(const Element& e) {
  Json out = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json mono = Json::array();
    for (const Factor& f : m) mono.push_back({f.index, f.x, f.y});
    out.push_back({{"monomial", mono}, {"coef", to_json(c)}});
  }
  return out;
}

Element element_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
  Element out;
  for (const Json& t : j) {
    Element term(scalar_from_json(t.at("coef")));
    Element mono(1);
    for (const Json& f : t.at("monomial")) {
      array_of(f, 3);
      int i = int_from_json(f[0]), a = int_from_json(f[1]), b = int_from_json(f[2]);
      if (a < 0 || b < 0) throw std::invalid_argument("negative exponent in monomial");
      mono = mono * Element::x(i).pow(a) * Element::y(i).pow(b);
    }
    out += mono * term;
  }
  return out;
}

Json to_json(const VElement& e) {
  Json out = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json mono = Json::array();
    for (const auto& [i, k] : m) mono.push_back({i, k});
    out.push_back({{"monomial", mono}, {"coef", to_json(c)}});
  }
  return out;
}

VElement velement_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
  VElement out;
  for (const Json& t : j) {
    VElement mono(scalar_from_json(t.at("coef")));
    for (const Json& f : t.at("monomial")) {
      array_of(f, 2);
      int e = int_from_json(f[1]);
      if (e < 0) throw std::invalid_argument("negative exponent in monomial");
      mono = mono * VElement::v(int_from_json(f[0]), e);
    }
    out += mono;
  }
  return out;
}

Json to_json(const FreeElement& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json word = Json::array();
    for (const CoeffSymbol& s : w) word.push_back({s.form, s.n, s.i});
    out.push_back({{"word", word}, {"coef", to_json(c)}});
  }
  return out;
}

FreeElement free_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of terms");
  FreeElement out;
  for (const Json& t : j) {
    FreeWord w;
    for (const Json& s : t.at("word")) {
      array_of(s, 3);
      w.push_back({int_from_json(s[0]), int_from_json(s[1]), int_from_json(s[2])});
    }
    out.add_term(w, scalar_from_json(t.at("coef")));
  }
  return out;
}

Json to_json(const NForm& f) {
  Json coefficients = Json::array();
  for (const Element& a : f.coefficients) coefficients.push_back(to_json(a));
  return {{"n", f.n}, {"coefficients", coefficients}};
}

NForm form_from_json(const Json& j) {
  NForm f;
  f.n = int_from_json(j.at("n"));
  for (const Json& a : j.at("coefficients")) f.coefficients.push_back(element_from_json(a));
  if (f.n < 0 || static_cast<int>(f.coefficients.size()) != f.n + 1)
    throw std::invalid_argument("an n-form needs n+1 coefficients");
  return f;
}

Json to_json(const PolarisationReport& r) {
  Json out = Json::array();
  for (const auto& t : r.terms) out.push_back({{"k", t.k}, {"alpha", to_json(t.alpha)}, {"component", to_json(t.component)}});
  return out;
}

Json to_json(const UniversalCovariant& u) {
  Json components = Json::array();
  for (const FreeElement& c : u.components) components.push_back(to_json(c));
  return {{"order", u.order}, {"components", components}};
}

}  // namespace qinv
