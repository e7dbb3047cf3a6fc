#include "qinv/symbolic.hpp"

#include <stdexcept>

namespace qinv {

namespace {

int k_exponent(const CoeffSymbol& c) { return c.n - 2 * c.i; }

// A^{(j)}_a = c_a x_j^a y_j^{n-a} for the realisation (0j)^n.
Scalar block_constant(int n, int a) { return Scalar::s_power(n * n + 2 * (a - n) * (1 + a), a % 2 ? -1 : 1); }

void raise_lower(bool raise, const FreeWord& w, const Scalar& c, FreeElement& out) {
  int right = 0;
  for (const CoeffSymbol& s : w) right += k_exponent(s);
  int left = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    const CoeffSymbol& s = w[t];
    right -= k_exponent(s);
    CoeffSymbol r = s;
    Scalar coef;
    if (raise && s.i > 0) {
      r.i = s.i - 1;
      coef = (-qnum(s.i)).shifted(2 * s.i - s.n + 2);
    } else if (!raise && s.i < s.n) {
      r.i = s.i + 1;
      coef = (-qnum(s.n - s.i)).shifted(s.n - 2 * s.i - 4);
    }
    if (!coef.is_zero()) {
      FreeWord v = w;
      v[t] = r;
      out.add_term(v, c * coef.shifted(right - left));
    }
    left += k_exponent(s);
  }
}

}  // namespace

FreeElement::FreeElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(FreeWord{}, c);
}

FreeElement FreeElement::word(FreeWord w, const Scalar& c) {
  for (const CoeffSymbol& s : w)
    if (s.n < 0 || s.i < 0 || s.i > s.n) throw std::invalid_argument("coefficient symbol needs 0 <= i <= n");
  FreeElement e;
  e.add_term(w, c);
  return e;
}

Scalar FreeElement::coefficient(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void FreeElement::add_term(const FreeWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      FreeWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

FreeElement FreeElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  FreeElement r(1);
  for (int t = 0; t < k; ++t) r = r * *this;
  return r;
}

FreeElement FreeElement::identified() const {
  FreeElement r;
  int n = -1;
  for (const auto& [w, c] : terms_) {
    FreeWord v = w;
    for (CoeffSymbol& s : v) {
      if (n >= 0 && s.n != n) throw std::invalid_argument("identified forms must have the same degree");
      n = s.n;
      s.form = 1;
    }
    r.add_term(v, c);
  }
  return r;
}

std::optional<Scalar> FreeElement::ratio_to(const FreeElement& o) const {
  if (o.is_zero()) return is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  if (terms_.size() != o.terms_.size()) return std::nullopt;
  const auto& [w0, c0] = *o.terms_.begin();
  Scalar r = coefficient(w0) / c0;
  if (r.is_zero() || o * r != *this) return std::nullopt;
  return r;
}

std::string free_word_string(const FreeWord& w) {
  std::string s;
  for (const CoeffSymbol& c : w) {
    if (!s.empty()) s += "*";
    s += c.i < 26 ? static_cast<char>('A' + c.i) : 'S';
    s += "[" + std::to_string(c.form) + "," + std::to_string(c.n) + "," + std::to_string(c.i) + "]";
  }
  return s;
}

std::string FreeElement::to_string() const {
  std::vector<std::pair<Scalar, std::string>> t;
  for (const auto& [w, c] : terms_) t.emplace_back(c, free_word_string(w));
  return format_sum(t);
}

FreeElement free_act(Generator g, const FreeElement& a) {
  FreeElement out;
  for (const auto& [w, c] : a.terms()) {
    int k = 0;
    for (const CoeffSymbol& s : w) k += k_exponent(s);
    switch (g) {
      case Generator::K: out.add_term(w, c.shifted(k)); break;
      case Generator::Kinv: out.add_term(w, c.shifted(-k)); break;
      case Generator::E: raise_lower(true, w, c, out); break;
      case Generator::F: raise_lower(false, w, c, out); break;
      case Generator::L:
      case Generator::Linv: throw std::invalid_argument("L acts on coefficients through the degree of the realisation");
    }
  }
  return out;
}

bool is_universal_invariant(const FreeElement& a) {
  return free_act(Generator::K, a) == a && free_act(Generator::E, a).is_zero() && free_act(Generator::F, a).is_zero();
}

UniversalCovariant UniversalCovariant::identified() const {
  UniversalCovariant u{order, {}};
  for (const FreeElement& c : components) u.components.push_back(c.identified());
  return u;
}

bool is_universal_covariant(const UniversalCovariant& u) {
  const int m = u.order;
  if (static_cast<int>(u.components.size()) != m + 1) return false;
  auto comp = [&](int a) { return a < 0 || a > m ? FreeElement() : u.components[a]; };
  for (int a = 0; a <= m; ++a) {
    const FreeElement& c = u.components[a];
    if (free_act(Generator::K, c) != c * Scalar::s_power(m - 2 * a)) return false;
    if (free_act(Generator::E, c) != comp(a - 1) * (-qnum(a)).shifted(2 * a - m + 2)) return false;
    if (free_act(Generator::F, c) != comp(a + 1) * (-qnum(m - a)).shifted(m - 2 * a - 4)) return false;
  }
  return true;
}

UniversalCovariant symbol_to_universal(const Element& d, const std::vector<int>& degrees, bool identify) {
  if (d.is_zero()) throw std::invalid_argument("symbol must be nonzero");
  auto deg = d.multidegree();
  if (!deg) throw std::invalid_argument("symbol must be homogeneous in every index");
  const int k = static_cast<int>(degrees.size());
  int m = 0;
  for (const auto& [idx, e] : *deg) {
    if (idx == 0) {
      m = e;
    } else if (idx < 0 || idx > k || degrees[idx - 1] != e) {
      throw std::invalid_argument("symbol index " + std::to_string(idx) + " has the wrong degree");
    }
  }
  for (int j = 1; j <= k; ++j)
    if (degrees[j - 1] > 0 && !deg->count(j))
      throw std::invalid_argument("symbol does not involve index " + std::to_string(j));
  if (!is_invariant(d)) throw std::invalid_argument("symbol must be an invariant element");

  UniversalCovariant u{m, std::vector<FreeElement>(m + 1)};
  for (const auto& [mono, c] : d.terms()) {
    int a = 0;
    Scalar coef = c;
    FreeWord w;
    for (const Factor& f : mono) {
      if (f.index == 0) {
        a = f.y;
        continue;
      }
      const int n = degrees[f.index - 1];
      w.push_back({f.index, n, f.x});
      coef /= block_constant(n, f.x);
    }
    u.components[a].add_term(w, coef / qbinomial(m, a));
  }
  return identify ? u.identified() : u;
}

UniversalCovariant symbol_to_universal(const Element& d, int n, int k, bool identify) {
  if (n < 0 || k < 0) throw std::invalid_argument("degree and arity must be nonnegative");
  return symbol_to_universal(d, std::vector<int>(k, n), identify);
}

Element realize(const FreeElement& a, const std::vector<NForm>& forms) {
  Element out;
  for (const auto& [w, c] : a.terms()) {
    Element prod(c);
    for (const CoeffSymbol& s : w) {
      if (s.form < 1 || s.form > static_cast<int>(forms.size()))
        throw std::invalid_argument("no form supplied for form id " + std::to_string(s.form));
      const NForm& f = forms[s.form - 1];
      if (f.n != s.n) throw std::invalid_argument("form " + std::to_string(s.form) + " has the wrong degree");
      prod = prod * f.coefficients.at(s.i);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

Element realize(const UniversalCovariant& u, const std::vector<NForm>& forms) {
  Element out;
  for (int a = 0; a <= u.order; ++a) {
    Element c = realize(u.components.at(a), forms);
    if (c.is_zero()) continue;
    Element head = u.order > 0 ? Element::monomial({{0, u.order - a, a}}) : Element(1);
    out += head * c * qbinomial(u.order, a);
  }
  return out;
}

std::vector<NForm> symbolic_realisations(const std::vector<int>& degrees) {
  std::vector<NForm> forms;
  for (std::size_t j = 0; j < degrees.size(); ++j)
    forms.push_back(extract(bracket_power(0, static_cast<int>(j) + 1, degrees[j]), degrees[j]));
  return forms;
}

bool roundtrip_check(const Element& d, const std::vector<int>& degrees) {
  return realize(symbol_to_universal(d, degrees, false), symbolic_realisations(degrees)) == d;
}

bool roundtrip_check(const Element& d, int n, int k) { return roundtrip_check(d, std::vector<int>(k, n)); }

}  // namespace qinv
