#include "qinv/valgebra.hpp"

#include "qinv/element.hpp"

#include <stdexcept>

namespace qinv {

namespace {

// m * v_j for a normal monomial m.
VElement times_letter(const VMonomial& m, int j) {
  if (m.empty() || m.back().first < j) {
    VMonomial r = m;
    r.emplace_back(j, 1);
    return VElement::monomial(std::move(r));
  }
  if (m.back().first == j) {
    VMonomial r = m;
    ++r.back().second;
    return VElement::monomial(std::move(r));
  }
  // m = m' v_l with l > j: m' v_l v_j = q^2 (m' v_j) v_l + (1-q^2) (m' v_j) v_j.
  const int l = m.back().first;
  VMonomial rest = m;
  if (--rest.back().second == 0) rest.pop_back();
  VElement left = times_letter(rest, j);
  VElement out;
  for (const auto& [w, c] : left.terms()) {
    out += times_letter(w, l) * (c * Scalar::q_power(2));
    out += times_letter(w, j) * (c * (Scalar(1) - Scalar::q_power(2)));
  }
  return out;
}

}  // namespace

VElement::VElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(VMonomial{}, c);
}

VElement VElement::monomial(VMonomial m, const Scalar& c) {
  for (std::size_t t = 0; t < m.size(); ++t) {
    if (m[t].second <= 0) throw std::invalid_argument("v-monomial exponents must be positive");
    if (t > 0 && m[t - 1].first >= m[t].first) throw std::invalid_argument("v-monomial indices must increase");
  }
  VElement e;
  e.add_term(m, c);
  return e;
}

Scalar VElement::coefficient(const VMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void VElement::add_term(const VMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

VElement VElement::operator-() const {
  VElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

VElement& VElement::operator+=(const VElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

VElement& VElement::operator-=(const VElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

VElement& VElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

VElement operator*(const VElement& a, const VElement& b) {
  VElement r;
  for (const auto& [mb, cb] : b.terms_) {
    VElement partial = a * cb;
    for (const auto& [j, e] : mb)
      for (int t = 0; t < e; ++t) {
        VElement next;
        for (const auto& [m, c] : partial.terms_) next += times_letter(m, j) * c;
        partial = std::move(next);
      }
    r += partial;
  }
  return r;
}

VElement VElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  VElement r(1);
  for (int t = 0; t < k; ++t) r = r * *this;
  return r;
}

VElement VElement::v0_coefficient(int k) const {
  VElement r;
  for (const auto& [m, c] : terms_) {
    const int e = !m.empty() && m.front().first == 0 ? m.front().second : 0;
    if (e != k) continue;
    r.add_term(e > 0 ? VMonomial(m.begin() + 1, m.end()) : m, c);
  }
  return r;
}

std::map<VMonomial, Rational> VElement::evaluate(const Rational& s0) const {
  std::map<VMonomial, Rational> r;
  for (const auto& [m, c] : terms_) {
    Rational v = c.evaluate(s0);
    if (v != 0) r.emplace(m, v);
  }
  return r;
}

std::string vmonomial_string(const VMonomial& m) {
  std::string s;
  for (const auto& [i, e] : m) {
    if (!s.empty()) s += "*";
    s += "v[" + std::to_string(i) + "]";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string VElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> t;
  for (const auto& [m, c] : terms_) t.emplace_back(c, vmonomial_string(m));
  return format_sum(t);
}

VElement v_normalize(const std::vector<int>& letters) {
  std::map<std::vector<int>, Scalar> pending{{letters, Scalar(1)}};
  VElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    std::vector<int>& w = node.key();
    const Scalar c = node.mapped();
    std::size_t t = 0;
    while (t + 1 < w.size() && w[t] <= w[t + 1]) ++t;
    if (t + 1 >= w.size()) {
      VMonomial m;
      for (int i : w) {
        if (!m.empty() && m.back().first == i) ++m.back().second;
        else m.emplace_back(i, 1);
      }
      out.add_term(m, c);
      continue;
    }
    auto push = [&](std::vector<int> v, const Scalar& k) {
      auto [it, inserted] = pending.try_emplace(std::move(v), k);
      if (!inserted) {
        it->second += k;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    std::vector<int> swapped = w;
    std::swap(swapped[t], swapped[t + 1]);
    std::vector<int> squared = w;
    squared[t] = w[t + 1];
    push(std::move(swapped), c * Scalar::q_power(2));
    push(std::move(squared), c * (Scalar(1) - Scalar::q_power(2)));
  }
  return out;
}

VElement poly(const std::vector<int>& indices) {
  VElement p(1);
  for (int i : indices) {
    if (i == 0) throw std::invalid_argument("polynomial zeros must have nonzero index");
    p = p * (VElement::v(0) - VElement::v(i));
  }
  return p;
}

VElement poly(int n) {
  if (n < 1) throw std::invalid_argument("poly requires n >= 1");
  std::vector<int> idx;
  for (int i = 1; i <= n; ++i) idx.push_back(i);
  return poly(idx);
}

VElement elementary_symmetric(int n, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("elementary symmetric index out of range");
  VElement r;
  std::vector<int> pick(j);
  auto rec = [&](auto&& self, int pos, int from, int sum) -> void {
    if (pos == j) {
      VMonomial m;
      for (int i : pick) m.emplace_back(i, 1);
      r.add_term(m, Scalar::q_power(2 * j - 2 * sum, j % 2 ? -1 : 1));
      return;
    }
    for (int i = from; i <= n; ++i) {
      pick[pos] = i;
      self(self, pos + 1, i + 1, sum + i);
    }
  };
  rec(rec, 0, 1, 0);
  return r;
}

VElement power_sum(int n, int j) {
  if (n < 1 || j < 1) throw std::invalid_argument("power sum requires n >= 1 and j >= 1");
  VElement r;
  for (int i = 1; i <= n; ++i) r += VElement::v(i, j) * Scalar::q_power(2 - 2 * i);
  return r;
}

VElement newton_residual(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("Newton relation requires n >= 1 and k >= 1");
  auto a = [&](int j) { return j < 0 || j > n ? VElement() : elementary_symmetric(n, j); };
  VElement r = power_sum(n, k) + a(k) * (Scalar::q_power(2 * (k - 1) * (n - 1)) * qparen(k));
  for (int i = 1; i < k; ++i) r += a(k - i) * power_sum(n, i) * Scalar::q_power(2 * (k - i) * (n - 1));
  return r;
}

}  // namespace qinv
