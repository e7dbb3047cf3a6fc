#include "qinv/element.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qinv {

namespace {

using PolyTerms = std::map<Monomial, LaurentPoly>;

LaurentPoly s_pow(int k) { return LaurentPoly::monomial(k); }

void accumulate(PolyTerms& out, Monomial m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Right multiplication of a PBW monomial by a single block x_i^a y_i^b.
// The block travels leftwards through all blocks of larger index, then merges
// with the block of index i if present.
void mul_block(const Monomial& m, const Factor& block, const LaurentPoly& coef, PolyTerms& out) {
  const int i = block.index;
  std::size_t hi = m.size();
  while (hi > 0 && m[hi - 1].index > i) --hi;

  struct State {
    int a, b;
    Monomial tail;  // emitted blocks, rightmost first
    LaurentPoly coef;
  };
  std::vector<State> states{{block.x, block.y, {}, coef}};

  for (std::size_t p = m.size(); p-- > hi;) {
    const Factor& f = m[p];
    const int j = f.index, c = f.x, d = f.y;
    std::map<std::tuple<int, int, Monomial>, LaurentPoly> next;
    for (const State& st : states) {
      // y_j^d passes the carry: y_j x_i = q x_i y_j, y_j y_i = q^2 y_i y_j.
      LaurentPoly base = st.coef * s_pow(2 * d * (st.a + 2 * st.b));
      // x_j letters, processed right to left; t counts those that emitted y_j.
      std::vector<LaurentPoly> dp(1, LaurentPoly(1));
      for (int k = 0; k < c; ++k) {
        std::vector<LaurentPoly> nd(dp.size() + 1);
        for (int t = 0; t < static_cast<int>(dp.size()); ++t) {
          if (dp[t].is_zero()) continue;
          const int A = st.a + t, B = st.b - t;
          nd[t] += dp[t] * s_pow(2 * (2 * A + B));
          if (B >= 1) {
            LaurentPoly w = (s_pow(4 * B) - LaurentPoly(1)) * s_pow(4 * A - 2 * (k - t));
            nd[t + 1] += dp[t] * w;
          }
        }
        while (nd.size() > 1 && nd.back().is_zero()) nd.pop_back();
        dp = std::move(nd);
      }
      for (int t = 0; t < static_cast<int>(dp.size()); ++t) {
        if (dp[t].is_zero()) continue;
        Monomial tail = st.tail;
        tail.push_back({j, c - t, d + t});
        LaurentPoly cf = base * dp[t];
        auto key = std::make_tuple(st.a + t, st.b - t, std::move(tail));
        auto [it, ins] = next.try_emplace(std::move(key), cf);
        if (!ins) it->second += cf;
      }
    }
    states.clear();
    for (auto& [key, cf] : next) {
      if (cf.is_zero()) continue;
      states.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), cf});
    }
  }

  for (State& st : states) {
    Monomial r(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(hi));
    LaurentPoly cf = st.coef;
    if (!r.empty() && r.back().index == i) {
      // x_i^c y_i^d x_i^a y_i^b = q^{-ad} x_i^{c+a} y_i^{d+b}
      cf = cf * s_pow(-2 * st.a * r.back().y);
      r.back().x += st.a;
      r.back().y += st.b;
    } else {
      r.push_back({i, st.a, st.b});
    }
    for (auto it = st.tail.rbegin(); it != st.tail.rend(); ++it) r.push_back(*it);
    accumulate(out, std::move(r), cf);
  }
}

PolyTerms multiply_poly_terms(const Monomial& a, const Monomial& b) {
  PolyTerms cur;
  if (a.empty() || b.empty() || a.back().index < b.front().index) {
    Monomial r = a;
    r.insert(r.end(), b.begin(), b.end());
    cur.emplace(std::move(r), LaurentPoly(1));
    return cur;
  }
  cur.emplace(a, LaurentPoly(1));
  for (const Factor& f : b) {
    PolyTerms next;
    for (const auto& [m, c] : cur) mul_block(m, f, c, next);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Element::Element(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Element Element::monomial(Monomial m, const Scalar& c) {
  Element e;
  for (const Factor& f : m)
    if (f.x < 0 || f.y < 0 || f.x + f.y == 0) throw std::invalid_argument("invalid PBW factor");
  for (std::size_t k = 1; k < m.size(); ++k)
    if (m[k - 1].index >= m[k].index) throw std::invalid_argument("PBW factors must have increasing indices");
  if (!c.is_zero()) e.terms_.emplace(std::move(m), c);
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Element multiply_monomials(const Monomial& a, const Monomial& b) {
  Element r;
  for (auto& [m, c] : multiply_poly_terms(a, b)) r.add_term(m, Scalar(c));
  return r;
}

Element operator*(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return Element();
  std::map<Monomial, Scalar> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Scalar cab = ca * cb;
      for (auto& [m, c] : multiply_poly_terms(ma, mb)) {
        Scalar v = cab.is_polynomial() ? Scalar(cab.num() * c) : cab * Scalar(c);
        auto [it, ins] = acc.try_emplace(m, v);
        if (!ins) it->second += v;
      }
    }
  }
  Element r;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), m, std::move(c));
  return r;
}

Element Element::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of an element");
  Element r(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Word monomial_word(const Monomial& m) {
  Word w;
  for (const Factor& f : m) {
    for (int k = 0; k < f.x; ++k) w.push_back({LetterKind::X, f.index});
    for (int k = 0; k < f.y; ++k) w.push_back({LetterKind::Y, f.index});
  }
  return w;
}

Element normalize(const Word& w) {
  PolyTerms cur;
  cur.emplace(Monomial{}, LaurentPoly(1));
  for (const Letter& l : w) {
    Factor f{l.index, l.kind == LetterKind::X ? 1 : 0, l.kind == LetterKind::Y ? 1 : 0};
    PolyTerms next;
    for (const auto& [m, c] : cur) mul_block(m, f, c, next);
    cur = std::move(next);
  }
  Element r;
  for (auto& [m, c] : cur) r.add_term(m, Scalar(c));
  return r;
}

Element Element::star() const {
  Element r;
  for (const auto& [m, c] : terms_) {
    Word w = monomial_word(m);
    std::reverse(w.begin(), w.end());
    Element n = normalize(w);
    n *= c.star();
    r += n;
  }
  return r;
}

std::vector<int> Element::indices() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_)
    for (const Factor& f : m) s.insert(f.index);
  return {s.begin(), s.end()};
}

int monomial_degree_in(const Monomial& m, int index) {
  for (const Factor& f : m)
    if (f.index == index) return f.degree();
  return 0;
}

std::optional<std::map<int, int>> Element::multidegree() const {
  std::map<int, int> deg;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::map<int, int> d;
    for (const Factor& f : m) d[f.index] = f.degree();
    if (first) {
      deg = std::move(d);
      first = false;
    } else if (d != deg) {
      return std::nullopt;
    }
  }
  return deg;
}

std::optional<int> Element::degree_in(int index) const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int v = monomial_degree_in(m, index);
    if (d && *d != v) return std::nullopt;
    d = v;
  }
  return d.value_or(0);
}

std::optional<int> Element::weight() const {
  std::optional<int> w;
  for (const auto& [m, c] : terms_) {
    int v = 0;
    for (const Factor& f : m) v += f.y - f.x;
    if (w && *w != v) return std::nullopt;
    w = v;
  }
  return w.value_or(0);
}

Element Element::relabeled(const std::map<int, int>& increasing) const {
  Element r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    for (Factor& f : n) {
      auto it = increasing.find(f.index);
      if (it != increasing.end()) f.index = it->second;
    }
    for (std::size_t k = 1; k < n.size(); ++k)
      if (n[k - 1].index >= n[k].index) throw std::invalid_argument("relabeling does not preserve index order");
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  auto put = [&](char letter, int index, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += letter;
    s += "[" + std::to_string(index) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (const Factor& f : m) {
    put('x', f.index, f.x);
    put('y', f.index, f.y);
  }
  return s;
}

std::string format_sum(const std::vector<std::pair<Scalar, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    bool negative = false;
    std::string text;
    const LaurentPoly& n = c.num();
    if (n.is_monomial()) {
      negative = sgn(n.lowest_coefficient()) < 0;
      Scalar mag = negative ? -c : c;
      if (body.empty()) {
        text = mag.to_q_string();
      } else if (mag.is_one()) {
        text = body;
      } else {
        text = mag.to_q_string() + "*" + body;
      }
    } else {
      std::string sc = c.is_polynomial() ? "(" + n.to_q_string() + ")" : c.to_q_string();
      if (body.empty()) {
        text = terms.size() == 1 ? c.to_q_string() : sc;
      } else {
        text = sc + "*" + body;
      }
    }
    if (first) {
      out = negative ? "-" + text : text;
    } else {
      out += negative ? " - " : " + ";
      out += text;
    }
    first = false;
  }
  return out;
}

std::string Element::to_string() const {
  std::vector<std::pair<Scalar, std::string>> t;
  t.reserve(terms_.size());
  for (const auto& [m, c] : terms_) t.emplace_back(c, monomial_string(m));
  return format_sum(t);
}

}  // namespace qinv
