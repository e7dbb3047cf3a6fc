#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qinv {

using Rational = mpq_class;

/// Sparse Laurent polynomial in the formal variable s with rational
/// coefficients. Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);
  static LaurentPoly monomial(int exponent, const Rational& c = 1);
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }
  const Rational& lowest_coefficient() const { return terms_.front().second; }
  const Rational& leading_coefficient() const { return terms_.back().second; }
  Rational coefficient(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }

  /// Multiplies by s^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes s -> s^{-1}.
  LaurentPoly reflected() const;

  /// Exact division; returns false if b does not divide *this.
  bool divides_into(const LaurentPoly& b, LaurentPoly& quotient) const;

  /// Exact evaluation at a nonzero rational point (or any point if all
  /// exponents are nonnegative).
  Rational evaluate(const Rational& s0) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Monic greatest common divisor of two Laurent polynomials, normalized to
  /// lowest exponent 0. Units s^k are ignored.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  /// Printing in powers of s (canonical) or of q = s^2.
  std::string to_s_string() const;
  std::string to_q_string() const;

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Formats s^k as a power of q: q, q^2, q^-1, q^(3/2), q^(-1/2).
std::string q_power_string(int s_exponent);
std::string rational_string(const Rational& r);

}  // namespace qinv
