#include "qinv/bracket_poly.hpp"

#include "qinv/action.hpp"
#include "qinv/polarisation.hpp"

#include <stdexcept>

namespace qinv {

BracketPoly BracketPoly::constant(const Scalar& c) {
  BracketPoly p;
  p.add_term({}, c);
  return p;
}

BracketPoly BracketPoly::bracket(int i, int j) {
  BracketPoly p;
  if (i < j) p.add_term({{i, j}}, Scalar(1));
  if (i > j) p.add_term({{j, i}}, Scalar(-1));
  return p;
}

void BracketPoly::add_term(const BracketWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BracketPoly& BracketPoly::operator+=(const BracketPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

BracketPoly& BracketPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

BracketPoly operator*(const BracketPoly& a, const BracketPoly& b) {
  BracketPoly r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      BracketWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

Element BracketPoly::evaluate() const {
  std::map<std::pair<int, int>, Element> cache;
  Element sum;
  for (const auto& [w, c] : terms_) {
    Element prod(c);
    for (const auto& b : w) {
      auto it = cache.find(b);
      if (it == cache.end()) it = cache.emplace(b, qinv::bracket(b.first, b.second)).first;
      prod = prod * it->second;
    }
    sum += prod;
  }
  return sum;
}

std::string bracket_word_string(const BracketWord& w) {
  std::string s;
  for (const auto& [i, j] : w) {
    if (!s.empty()) s += "*";
    s += "b[" + std::to_string(i) + "," + std::to_string(j) + "]";
  }
  return s;
}

std::string BracketPoly::to_string() const {
  std::vector<std::pair<Scalar, std::string>> t;
  for (const auto& [w, c] : terms_) t.emplace_back(c, bracket_word_string(w));
  return format_sum(t);
}

BracketPoly polar_down(int hi, int lo, const BracketPoly& p) {
  BracketPoly out;
  for (const auto& [w, c] : p.terms()) {
    int n_hi = 0;
    for (const auto& [i, j] : w)
      if (i == hi || j == hi) ++n_hi;
    if (n_hi == 0) continue;
    Scalar norm = c / qparen(n_hi);
    // Twist q^2 for every bracket containing lo to the right of the replaced one.
    int lo_right = 0;
    for (std::size_t t = w.size(); t-- > 0;) {
      const auto [i, j] = w[t];
      const bool has_hi = i == hi || j == hi;
      const bool has_lo = i == lo || j == lo;
      if (has_hi && !has_lo) {
        int other = i == hi ? j : i;
        if (other < lo) throw std::invalid_argument("polar_down requires lo to be the lowest index");
        Scalar sign = i == hi ? Scalar(1) : Scalar(-1);
        BracketWord v = w;
        v[t] = {lo, other};
        out.add_term(v, norm * sign.shifted(4 * lo_right));
      }
      if (has_lo) ++lo_right;
    }
  }
  return out;
}

namespace {

BracketPoly decompose(const Element& f) {
  if (f.is_zero()) return {};
  auto deg = f.multidegree();
  if (!deg) throw std::invalid_argument("bracket decomposition requires a homogeneous element");
  if (deg->empty()) return BracketPoly::constant(f.coefficient({}));
  if (deg->size() == 1) throw std::logic_error("nonzero invariant supported on a single index");
  auto [a1, a2] = two_lowest_indices(f);
  const int n1 = deg->at(a1);
  const int n2 = deg->at(a2);

  // f = P21^{n1} P12^{n1} f + (12) g with g = sum_t q^{-t} [n2]/[n2+t] P21^t a_t,
  // where P12^t f = P21 P12^{t+1} f + (12) a_t and P21((12) h) = q^{-1} [n]/[n+1] (12) P21 h.
  Element tower = f;
  Element g;
  for (int t = 0; t < n1; ++t) {
    CofactorSplit s = extract_cofactor(a1, a2, tower);
    g += polar_power(a2, a1, s.cofactor, t) * (qnum(n2) / qnum(n2 + t)).shifted(-2 * t);
    tower = polar(a1, a2, tower);
  }
  BracketPoly result = decompose(tower);
  for (int t = 0; t < n1; ++t) result = polar_down(a2, a1, result);
  result += BracketPoly::bracket(a1, a2) * decompose(g);
  return result;
}

}  // namespace

BracketPoly bracket_decompose(const Element& f) {
  if (!is_invariant(f)) throw std::invalid_argument("bracket decomposition requires an invariant element");
  return decompose(f);
}

}  // namespace qinv
