#pragma once

#include "qinv/element.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qinv {

/// Ordered product of bracket symbols (i j) with i < j.
using BracketWord = std::vector<std::pair<int, int>>;

/// Formal linear combination of ordered bracket products.
class BracketPoly {
 public:
  using TermMap = std::map<BracketWord, Scalar>;

  BracketPoly() = default;
  static BracketPoly constant(const Scalar& c);
  /// The single bracket (i j), with sign normalisation for i > j.
  static BracketPoly bracket(int i, int j);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const BracketWord& w, const Scalar& c);

  BracketPoly& operator+=(const BracketPoly& o);
  BracketPoly& operator*=(const Scalar& c);
  friend BracketPoly operator*(const BracketPoly& a, const BracketPoly& b);

  /// Product in H_I of the brackets.
  Element evaluate() const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::string bracket_word_string(const BracketWord& w);

/// P_{hi,lo} on bracket products where lo is the lowest index present:
/// a twisted derivation sending (hi j) to (lo j).
BracketPoly polar_down(int hi, int lo, const BracketPoly& p);

/// Writes an invariant as a polynomial in brackets following the polar-tower
/// recursion; the result evaluates back to the input. Throws on
/// non-invariant or inhomogeneous input.
BracketPoly bracket_decompose(const Element& f);

}  // namespace qinv
