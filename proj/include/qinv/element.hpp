#pragma once

#include "qinv/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qinv {

enum class LetterKind { X, Y };

struct Letter {
  LetterKind kind;
  int index;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// x_i^x y_i^y inside a PBW monomial.
struct Factor {
  int index;
  int x;
  int y;
  int degree() const { return x + y; }
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// PBW monomial: factors with strictly increasing indices, x before y.
using Monomial = std::vector<Factor>;

/// Sparse linear combination of PBW monomials of H_I.
class Element {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Element() = default;
  Element(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Element(long c) : Element(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static Element monomial(Monomial m, const Scalar& c = 1);
  static Element x(int i) { return monomial({{i, 1, 0}}); }
  static Element y(int i) { return monomial({{i, 0, 1}}); }
  static Element letter(const Letter& l) { return l.kind == LetterKind::X ? x(l.index) : y(l.index); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& c) { return a *= c; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element pow(int k) const;

  /// Anti-linear anti-automorphism with x_i^* = x_i, y_i^* = y_i.
  Element star() const;

  /// Sorted set of indices occurring in some monomial.
  std::vector<int> indices() const;
  /// Per-index degree if every monomial has the same per-index degrees.
  std::optional<std::map<int, int>> multidegree() const;
  /// Degree in a single index if constant over all monomials.
  std::optional<int> degree_in(int index) const;
  /// (y-degree - x-degree) if constant over all monomials: K a = q^{w/2} a.
  std::optional<int> weight() const;

  /// Substitutes indices via a strictly increasing map (keeps PBW order).
  Element relabeled(const std::map<int, int>& increasing) const;

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Monomial as a word of letters, in order.
Word monomial_word(const Monomial& m);
std::string monomial_string(const Monomial& m);
int monomial_degree_in(const Monomial& m, int index);

/// PBW normal form of a free word (fast path through multiplication).
Element normalize(const Word& w);

/// Product of two PBW monomials.
Element multiply_monomials(const Monomial& a, const Monomial& b);

/// Formats (coefficient, body) pairs as `c*body + c*body - ...`; an empty
/// body stands for the unit. Shared by all sparse types.
std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace qinv
