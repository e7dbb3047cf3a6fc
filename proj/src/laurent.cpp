#include "qinv/laurent.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qinv {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, int& shift) {
  Dense d;
  if (p.is_zero()) {
    shift = 0;
    return d;
  }
  shift = p.min_exponent();
  d.assign(static_cast<std::size_t>(p.max_exponent() - shift + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) t.emplace_back(static_cast<int>(i) + shift, d[i]);
  return LaurentPoly::from_terms(std::move(t));
}

// Remainder of a modulo b (b nonzero, trimmed).
void dense_rem(Dense& a, const Dense& b) {
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / lead;
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
}

void make_monic(Dense& a) {
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), ie = a.terms().end();
  auto j = b.terms().begin(), je = b.terms().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == ie || j->first < i->first) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  return *this = merge(*this, o, false);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  return *this = merge(*this, o, true);
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.is_monomial()) {
    const auto& [e, c] = a.terms_[0];
    LaurentPoly r = b;
    for (auto& t : r.terms_) {
      t.first += e;
      t.second *= c;
    }
    return r;
  }
  if (b.is_monomial()) return b * a;
  int lo = a.min_exponent() + b.min_exponent();
  int hi = a.max_exponent() + b.max_exponent();
  Dense acc(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  return from_dense(acc, lo);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

bool LaurentPoly::divides_into(const LaurentPoly& b, LaurentPoly& quotient) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) {
    quotient = LaurentPoly();
    return true;
  }
  if (b.is_monomial()) {
    quotient = shifted(-b.min_exponent());
    quotient *= Rational(1 / b.lowest_coefficient());
    return true;
  }
  int sa = 0, sb = 0;
  Dense a = to_dense(*this, sa);
  Dense d = to_dense(b, sb);
  if (a.size() < d.size()) return false;
  Dense q(a.size() - d.size() + 1, Rational(0));
  const Rational& lead = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = a[k + d.size() - 1] / lead;
    q[k] = f;
    if (sgn(f) != 0)
      for (std::size_t i = 0; i < d.size(); ++i) a[k + i] -= f * d[i];
  }
  for (const auto& c : a)
    if (sgn(c) != 0) return false;
  quotient = from_dense(q, sa - sb);
  return true;
}

Rational LaurentPoly::evaluate(const Rational& s0) const {
  Rational acc = 0;
  if (is_zero()) return acc;
  if (sgn(s0) == 0) {
    if (min_exponent() < 0) throw std::domain_error("pole at s = 0");
    return coefficient(0);
  }
  // Horner from the top exponent down, then rescale by s0^min.
  int lo = min_exponent();
  int prev = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int e = prev; e > it->first; --e) acc *= s0;
    acc += it->second;
    prev = it->first;
  }
  Rational p = 1;
  Rational base = lo >= 0 ? s0 : Rational(1 / s0);
  for (int e = 0; e < std::abs(lo); ++e) p *= base;
  return acc * p;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly(1);
  int sa = 0, sb = 0;
  Dense x = to_dense(a, sa);
  Dense y = to_dense(b, sb);
  if (x.empty()) std::swap(x, y);
  if (y.empty()) {
    make_monic(x);
    return from_dense(x, 0);
  }
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return LaurentPoly(1);
    dense_rem(x, y);
    std::swap(x, y);
    if (!y.empty()) make_monic(y);
  }
  make_monic(x);
  return from_dense(x, 0);
}

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string q_power_string(int k) {
  if (k == 0) return "1";
  if (k == 2) return "q";
  if (k % 2 == 0) return "q^" + std::to_string(k / 2);
  return "q^(" + std::to_string(k) + "/2)";
}

namespace {

std::string join_terms(const std::vector<LaurentPoly::Term>& terms,
                       const std::function<std::string(int)>& power, const char* sep) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    std::string body;
    if (e == 0) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = power(e);
    } else {
      body = mag.get_str() + "*" + power(e);
    }
    if (first) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? std::string(sep) + "-" + std::string(sep) : std::string(sep) + "+" + std::string(sep);
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string LaurentPoly::to_s_string() const {
  return join_terms(terms_, [](int e) { return e == 1 ? std::string("s") : "s^" + std::to_string(e); }, " ");
}

std::string LaurentPoly::to_q_string() const { return join_terms(terms_, q_power_string, ""); }

std::size_t LaurentPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [e, c] : terms_) {
    std::size_t v = std::hash<int>()(e) ^ (std::hash<long>()(mpz_get_si(c.get_num_mpz_t())) << 1) ^
                    (std::hash<long>()(mpz_get_si(c.get_den_mpz_t())) << 2);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qinv
