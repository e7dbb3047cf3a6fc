#include "qinv/polarisation.hpp"

#include "qinv/action.hpp"

#include <stdexcept>

namespace qinv {

Element delta(int k, int l, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    int nk = monomial_degree_in(m, k);
    if (nk == 0) continue;
    if (k == l) {
      out.add_term(m, c * Scalar(nk));
      continue;
    }
    Word w = monomial_word(m);
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p].index != k) continue;
      Word v = w;
      v[p].index = l;
      out += normalize(v) * c;
    }
  }
  return out;
}

Element polar(int k, int l, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    int nk = monomial_degree_in(m, k);
    if (nk == 0) continue;
    Element single = Element::monomial(m, c);
    out += delta(k, l, single) * qparen(nk).inverse();
  }
  return out;
}

Element polar_power(int k, int l, const Element& a, int times) {
  Element r = a;
  for (int t = 0; t < times && !r.is_zero(); ++t) r = polar(k, l, r);
  return r;
}

std::pair<int, int> two_lowest_indices(const Element& f) {
  std::vector<int> idx = f.indices();
  if (idx.size() < 2) throw std::invalid_argument("element involves fewer than two indices");
  return {idx[0], idx[1]};
}

Element omega(int k, int l, const Element& a) {
  if (k >= l) throw std::invalid_argument("omega requires k < l");
  Element out;
  for (const auto& [mono, c] : a.terms()) {
    if (mono.size() < 2 || mono[0].index != k || mono[1].index != l)
      throw std::invalid_argument("omega: every monomial needs positive degree in both lowest indices " +
                                  std::to_string(k) + ", " + std::to_string(l));
    const int m = mono[0].degree(), n = mono[1].degree();
    const int i = mono[0].y, j = mono[1].y;
    Monomial beta(mono.begin() + 2, mono.end());
    Scalar norm = c / (qnum(m) * qnum(n));
    auto emit = [&](int xk, int yk, int xl, int yl, const Scalar& coef) {
      if (coef.is_zero()) return;
      Monomial r;
      if (xk + yk > 0) r.push_back({k, xk, yk});
      if (xl + yl > 0) r.push_back({l, xl, yl});
      r.insert(r.end(), beta.begin(), beta.end());
      out.add_term(r, coef * norm);
    };
    // Cofactor in f = P_{lk} P_{kl} f + (kl) a, scaled by [n+1]/[n].
    if (i >= 1 && n - j >= 1) emit(m - i, i - 1, n - j - 1, j, -(qnum(i) * qnum(n - j)).shifted(2 * (j - i) + 3));
    if (m - i >= 1 && j >= 1) emit(m - i - 1, i, n - j, j - 1, (qnum(m - i) * qnum(j)).shifted(1 - 2 * m));
  }
  return out;
}

Element omega(const Element& a) {
  if (a.is_zero()) return a;
  auto [k, l] = two_lowest_indices(a);
  return omega(k, l, a);
}

CofactorSplit extract_cofactor(int k, int l, const Element& f) {
  CofactorSplit s;
  s.polar_part = polar(l, k, polar(k, l, f));
  for (const auto& [m, c] : f.terms()) {
    int n = monomial_degree_in(m, l);
    s.cofactor += omega(k, l, Element::monomial(m, c)) * (qnum(n) / qnum(n + 1));
  }
  return s;
}

CofactorSplit extract_cofactor(const Element& f) {
  if (f.is_zero()) return {};
  auto [k, l] = two_lowest_indices(f);
  return extract_cofactor(k, l, f);
}

Scalar gordan_capelli_coefficient(int n1, int n2, int k) {
  if (k < 0 || k > n1 || k > n2) return Scalar();
  return qbinomial(n1, k) * qbinomial(n2, k) / qbinomial(n1 + n2 - k + 1, k);
}

Element PolarisationReport::recombine() const {
  Element sum;
  for (const GordanCapelliTerm& t : terms) {
    Element b = t.k == 0 ? Element(1) : bracket_power(low, high, t.k);
    sum += b * t.component * t.alpha;
  }
  return sum;
}

PolarisationReport gordan_capelli(const Element& f) {
  if (!is_invariant(f)) throw std::invalid_argument("Gordan-Capelli series requires an invariant element");
  auto deg = f.multidegree();
  if (!deg) throw std::invalid_argument("Gordan-Capelli series requires a homogeneous element");
  PolarisationReport rep;
  if (f.is_zero() || deg->empty()) {
    rep.terms.push_back({0, Scalar(1), f});
    return rep;
  }
  auto [a1, a2] = two_lowest_indices(f);
  rep.low = a1;
  rep.high = a2;
  rep.n1 = deg->at(a1);
  rep.n2 = deg->at(a2);
  const int kmax = std::min(rep.n1, rep.n2);
  Element om = f;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) om = omega(a1, a2, om);
    Element comp = polar_power(a2, a1, polar_power(a1, a2, om, rep.n1 - k), rep.n1 - k);
    rep.terms.push_back({k, gordan_capelli_coefficient(rep.n1, rep.n2, k), comp});
  }
  return rep;
}

}  // namespace qinv
