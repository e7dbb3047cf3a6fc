#include "qinv/rewrite.hpp"

#include <map>

namespace qinv {

namespace {

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Letter& l, const Letter& r) {
      if (l.index != r.index) return l.index < r.index;
      return l.kind < r.kind;
    });
  }
};

bool out_of_order(const Letter& a, const Letter& b) {
  if (a.index != b.index) return a.index > b.index;
  return a.kind == LetterKind::Y && b.kind == LetterKind::X;
}

Monomial word_to_monomial(const Word& w) {
  Monomial m;
  for (const Letter& l : w) {
    if (m.empty() || m.back().index != l.index) m.push_back({l.index, 0, 0});
    (l.kind == LetterKind::X ? m.back().x : m.back().y) += 1;
  }
  return m;
}

}  // namespace

int inversion_count(const Word& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (out_of_order(w[i], w[j])) ++n;
  return n;
}

Element rewrite_normalize(const Word& w, RedexStrategy strategy) {
  const LaurentPoly q = LaurentPoly::monomial(2);
  std::map<Word, LaurentPoly, WordLess> pending;
  pending.emplace(w, LaurentPoly(1));
  Element result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Word word = std::move(node.key());
    LaurentPoly coef = std::move(node.mapped());
    if (coef.is_zero()) continue;

    std::ptrdiff_t pos = -1;
    if (strategy == RedexStrategy::Leftmost) {
      for (std::size_t k = 0; k + 1 < word.size(); ++k)
        if (out_of_order(word[k], word[k + 1])) {
          pos = static_cast<std::ptrdiff_t>(k);
          break;
        }
    } else {
      for (std::size_t k = word.size(); k-- > 1;)
        if (out_of_order(word[k - 1], word[k])) {
          pos = static_cast<std::ptrdiff_t>(k - 1);
          break;
        }
    }
    if (pos < 0) {
      result.add_term(word_to_monomial(word), Scalar(coef));
      continue;
    }

    auto push = [&](Word nw, const LaurentPoly& c) {
      auto [it, ins] = pending.try_emplace(std::move(nw), c);
      if (!ins) it->second += c;
    };
    const Letter a = word[pos], b = word[pos + 1];
    Word swapped = word;
    std::swap(swapped[pos], swapped[pos + 1]);
    if (a.index == b.index) {
      // y_i x_i = q^{-1} x_i y_i
      push(std::move(swapped), coef * LaurentPoly::monomial(-2));
    } else if (a.kind == b.kind) {
      // x_j x_i = q^2 x_i x_j, y_j y_i = q^2 y_i y_j
      push(std::move(swapped), coef * LaurentPoly::monomial(4));
    } else if (a.kind == LetterKind::Y) {
      // y_j x_i = q x_i y_j
      push(std::move(swapped), coef * q);
    } else {
      // x_j y_i = q y_i x_j + (q^2 - 1) x_i y_j
      push(swapped, coef * q);
      Word mixed = word;
      mixed[pos] = {LetterKind::X, b.index};
      mixed[pos + 1] = {LetterKind::Y, a.index};
      push(std::move(mixed), coef * (LaurentPoly::monomial(4) - LaurentPoly(1)));
    }
  }
  return result;
}

}  // namespace qinv
