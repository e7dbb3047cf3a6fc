#pragma once

#include "qinv/element.hpp"

#include <algorithm>
#include <random>

namespace qinv::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational() {
  int n = uniform(-9, 9);
  int d = uniform(1, 5);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline LaurentPoly random_poly(int max_terms = 3, int span = 4) {
  std::vector<LaurentPoly::Term> t;
  int n = uniform(1, max_terms);
  for (int k = 0; k < n; ++k) t.emplace_back(uniform(-span, span), random_rational());
  return LaurentPoly::from_terms(std::move(t));
}

inline Scalar random_scalar(bool allow_fraction = true) {
  LaurentPoly n = random_poly();
  if (!allow_fraction || uniform(0, 2) == 0) return Scalar(n);
  LaurentPoly d = random_poly(2, 3);
  if (d.is_zero()) d = LaurentPoly(1);
  return Scalar(n, d);
}

inline Scalar random_nonzero_scalar() {
  Scalar s;
  while (s.is_zero()) s = random_scalar();
  return s;
}

inline Word random_word(int length, int max_index) {
  Word w;
  for (int k = 0; k < length; ++k)
    w.push_back({uniform(0, 1) ? LetterKind::X : LetterKind::Y, uniform(1, max_index)});
  return w;
}

inline Element random_element(int terms, int length, int max_index) {
  Element e;
  for (int k = 0; k < terms; ++k) e += normalize(random_word(length, max_index)) * random_scalar(false);
  return e;
}

}  // namespace qinv::testing

#include "qinv/action.hpp"

namespace qinv::testing {

/// Random combination of x_1^{m-i} y_1^i x_2^{n-j} y_2^j beta with beta a
/// normalised word in indices above 2.
inline Element random_bihomogeneous(int m, int n, int beta_length = 1, int terms = 3) {
  Element e;
  for (int t = 0; t < terms; ++t) {
    int i = uniform(0, m), j = uniform(0, n);
    Element head = Element::monomial({{1, m - i, i}, {2, n - j, j}});
    Word w;
    for (int k = 0; k < beta_length; ++k) w.push_back({uniform(0, 1) ? LetterKind::X : LetterKind::Y, uniform(3, 4)});
    e += head * normalize(w) * random_scalar(false);
  }
  return e;
}

/// Random homogeneous invariant: a combination of reorderings of one random
/// bracket product over indices 1..max_index.
inline Element random_invariant(int brackets, int max_index, int terms = 3) {
  std::vector<std::pair<int, int>> seq;
  for (int k = 0; k < brackets; ++k) {
    int i = uniform(1, max_index - 1);
    int j = uniform(i + 1, max_index);
    seq.emplace_back(i, j);
  }
  Element e;
  for (int t = 0; t < terms; ++t) {
    std::shuffle(seq.begin(), seq.end(), rng());
    Element p(random_scalar(false));
    for (auto [i, j] : seq) p = p * bracket(i, j);
    e += p;
  }
  return e;
}

}  // namespace qinv::testing
