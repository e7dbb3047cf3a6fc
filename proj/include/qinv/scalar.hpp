#pragma once

#include "qinv/laurent.hpp"

#include <string>

namespace qinv {

/// Element of the field Q(s), s^2 = q, stored as numerator/denominator with
/// no common factor. The denominator is monic with lowest exponent 0, so
/// structural equality is field equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : num_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly num, LaurentPoly den);

  /// s^k, i.e. q^{k/2}.
  static Scalar s_power(int k, const Rational& c = 1) { return Scalar(LaurentPoly::monomial(k, c)); }
  /// q^k.
  static Scalar q_power(int k, const Rational& c = 1) { return s_power(2 * k, c); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True for c*s^k.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(int k) const;
  /// Multiplies by s^k in place.
  Scalar shifted(int k) const;

  /// Field automorphism s -> s^{-1}.
  Scalar star() const;
  /// Exact value at s = s0; throws on a pole.
  Rational evaluate(const Rational& s0) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Human-readable form in powers of q, e.g. (q^2-1)/(q+1). Parseable by the DSL.
  std::string to_q_string() const;
  /// Canonical form in powers of s.
  std::string to_s_string() const;

  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_{Rational(1)};
};

/// [i] = (q^i - q^{-i}) / (q - q^{-1}).
Scalar qnum(int i);
/// (i) = 1 + q^2 + ... + q^{2i-2} = q^{i-1}[i]; i >= 0.
Scalar qparen(int i);
/// [n]! = [1][2]...[n].
Scalar qfactorial(int n);
/// [n]!/([k]![n-k]!), always a Laurent polynomial.
Scalar qbinomial(int n, int k);

}  // namespace qinv
