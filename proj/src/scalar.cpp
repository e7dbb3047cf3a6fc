#include "qinv/scalar.hpp"

#include <stdexcept>

namespace qinv {

namespace {

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q;
  if (!a.divides_into(b, q)) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero scalar");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    num_ = num_.shifted(-den_.min_exponent()) * Rational(1 / den_.lowest_coefficient());
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = LaurentPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  int m = den_.min_exponent();
  Rational lead = den_.leading_coefficient();
  if (m != 0) {
    num_ = num_.shifted(-m);
    den_ = den_.shifted(-m);
  }
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly a = num_, b = o.num_, da = den_, db = o.den_;
  if (!db.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(a, db);
    if (!g.is_one()) {
      a = exact_quotient(a, g);
      db = exact_quotient(db, g);
    }
  }
  if (!da.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(b, da);
    if (!g.is_one()) {
      b = exact_quotient(b, g);
      da = exact_quotient(da, g);
    }
  }
  num_ = a * b;
  den_ = da * db;
  int m = den_.min_exponent();
  Rational lead = den_.leading_coefficient();
  if (m != 0) {
    num_ = num_.shifted(-m);
    den_ = den_.shifted(-m);
  }
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_monomial()) {
    const auto& [e, c] = o.num_.terms()[0];
    num_ = num_.shifted(-e) * Rational(1 / c);
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

Scalar Scalar::shifted(int k) const {
  Scalar r = *this;
  r.num_ = r.num_.shifted(k);
  return r;
}

Scalar Scalar::star() const { return Scalar(num_.reflected(), den_.reflected()); }

Rational Scalar::evaluate(const Rational& s0) const {
  Rational d = den_.evaluate(s0);
  if (sgn(d) == 0) throw std::domain_error("pole at s = " + s0.get_str());
  return num_.evaluate(s0) / d;
}

std::string Scalar::to_q_string() const {
  if (den_.is_one()) return num_.to_q_string();
  std::string n = num_.to_q_string();
  if (!num_.is_monomial()) n = "(" + n + ")";
  return n + "/(" + den_.to_q_string() + ")";
}

std::string Scalar::to_s_string() const {
  if (den_.is_one()) return num_.to_s_string();
  return "(" + num_.to_s_string() + ")/(" + den_.to_s_string() + ")";
}

Scalar qnum(int i) {
  if (i < 0) return -qnum(-i);
  std::vector<LaurentPoly::Term> t;
  for (int e = i - 1; e >= -i + 1; e -= 2) t.emplace_back(2 * e, Rational(1));
  return Scalar(LaurentPoly::from_terms(std::move(t)));
}

Scalar qparen(int i) {
  if (i < 0) throw std::invalid_argument("(i) requires i >= 0");
  std::vector<LaurentPoly::Term> t;
  for (int e = 0; e < i; ++e) t.emplace_back(4 * e, Rational(1));
  return Scalar(LaurentPoly::from_terms(std::move(t)));
}

Scalar qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("[n]! requires n >= 0");
  Scalar r(1);
  for (int i = 2; i <= n; ++i) r *= qnum(i);
  return r;
}

Scalar qbinomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("q-binomial requires 0 <= k <= n");
  Scalar r = qfactorial(n) / (qfactorial(k) * qfactorial(n - k));
  if (!r.is_polynomial()) throw std::logic_error("q-binomial is not a Laurent polynomial");
  return r;
}

}  // namespace qinv
