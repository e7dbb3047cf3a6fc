#pragma once

#include "qinv/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qinv {

/// v_{i_1}^{e_1} ... v_{i_k}^{e_k} with strictly increasing indices.
using VMonomial = std::vector<std::pair<int, int>>;

/// Sparse element of the algebra generated by v_i with
/// v_j v_i = q^2 v_i v_j + (1-q^2) v_i^2 for i < j.
class VElement {
 public:
  using TermMap = std::map<VMonomial, Scalar>;

  VElement() = default;
  VElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  VElement(long c) : VElement(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static VElement monomial(VMonomial m, const Scalar& c = 1);
  static VElement v(int i, int e = 1) { return monomial({{i, e}}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const VMonomial& m) const;
  void add_term(const VMonomial& m, const Scalar& c);

  VElement operator-() const;
  VElement& operator+=(const VElement& o);
  VElement& operator-=(const VElement& o);
  VElement& operator*=(const Scalar& c);
  friend VElement operator+(VElement a, const VElement& b) { return a += b; }
  friend VElement operator-(VElement a, const VElement& b) { return a -= b; }
  friend VElement operator*(VElement a, const Scalar& c) { return a *= c; }
  friend VElement operator*(const Scalar& c, VElement a) { return a *= c; }
  friend VElement operator*(const VElement& a, const VElement& b);
  VElement pow(int k) const;

  /// Coefficient of v_0^k viewed as a polynomial in v_0 (v_0 leftmost).
  VElement v0_coefficient(int k) const;

  /// Coefficients evaluated at s = s0; at s0 = 1 the algebra is commutative.
  std::map<VMonomial, Rational> evaluate(const Rational& s0) const;

  friend bool operator==(const VElement& a, const VElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const VElement& a, const VElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::string vmonomial_string(const VMonomial& m);

/// Normal form of a word of v-letters by repeated use of the base relation
/// on the leftmost descent. Independent of the fast product.
VElement v_normalize(const std::vector<int>& letters);

/// [0 i_1][0 i_2] ... [0 i_n] with [ij] = v_i - v_j.
VElement poly(const std::vector<int>& indices);
/// p_{1,2,...,n}.
VElement poly(int n);

/// A_j = (-1)^j sum_{i_1<...<i_j} q^{2j - 2(i_1+...+i_j)} v_{i_1}...v_{i_j}.
VElement elementary_symmetric(int n, int j);

/// P_j = v_1^j + q^{-2} v_2^j + ... + q^{2-2n} v_n^j.
VElement power_sum(int n, int j);

/// P_k + q^{2(k-1)(n-1)} (k)_{q^2} A_k + sum_{i=1}^{k-1} q^{2(k-i)(n-1)} A_{k-i} P_i.
VElement newton_residual(int n, int k);

}  // namespace qinv
