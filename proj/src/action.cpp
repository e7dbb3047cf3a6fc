#include "qinv/action.hpp"

#include <stdexcept>

namespace qinv {

std::optional<Generator> parse_generator(const std::string& name) {
  if (name == "E") return Generator::E;
  if (name == "F") return Generator::F;
  if (name == "K") return Generator::K;
  if (name == "Kinv" || name == "K^-1") return Generator::Kinv;
  if (name == "L") return Generator::L;
  if (name == "Linv" || name == "L^-1") return Generator::Linv;
  return std::nullopt;
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::E: return "E";
    case Generator::F: return "F";
    case Generator::K: return "K";
    case Generator::Kinv: return "Kinv";
    case Generator::L: return "L";
    case Generator::Linv: return "Linv";
  }
  return "?";
}

namespace {

int k_exponent(const Factor& f) { return f.y - f.x; }

// E or F on one monomial: sum over blocks t of
// K^{-1}(B_1..B_{t-1}) X(B_t) K(B_{t+1}..B_r).
void raise_lower(bool raise, const Monomial& m, const Scalar& c, Element& out) {
  int right = 0;
  for (const Factor& f : m) right += k_exponent(f);
  int left = 0;
  for (std::size_t t = 0; t < m.size(); ++t) {
    const Factor& f = m[t];
    right -= k_exponent(f);
    Factor g = f;
    int s_exp = 0;
    Scalar coef;
    if (raise) {
      if (f.x == 0) {
        left += k_exponent(f);
        continue;
      }
      // E(x^a y^b) = q^{(2-a+b)/2} [a] x^{a-1} y^{b+1}
      s_exp = 2 - f.x + f.y;
      coef = qnum(f.x);
      g.x -= 1;
      g.y += 1;
    } else {
      if (f.y == 0) {
        left += k_exponent(f);
        continue;
      }
      // F(x^a y^b) = q^{(a-b)/2} [b] x^{a+1} y^{b-1}
      s_exp = f.x - f.y;
      coef = qnum(f.y);
      g.x += 1;
      g.y -= 1;
    }
    Monomial n = m;
    n[t] = g;
    out.add_term(n, c * coef.shifted(s_exp - left + right));
    left += k_exponent(f);
  }
}

}  // namespace

Element act(Generator g, const Element& a) {
  Element out;
  for (const auto& [m, c] : a.terms()) {
    int w = 0, deg = 0;
    for (const Factor& f : m) {
      w += k_exponent(f);
      deg += f.degree();
    }
    switch (g) {
      case Generator::K: out.add_term(m, c.shifted(w)); break;
      case Generator::Kinv: out.add_term(m, c.shifted(-w)); break;
      case Generator::L: out.add_term(m, c.shifted(deg)); break;
      case Generator::Linv: out.add_term(m, c.shifted(-deg)); break;
      case Generator::E: raise_lower(true, m, c, out); break;
      case Generator::F: raise_lower(false, m, c, out); break;
    }
  }
  return out;
}

bool is_invariant(const Element& a) {
  return act(Generator::K, a) == a && act(Generator::E, a).is_zero() && act(Generator::F, a).is_zero();
}

Element bracket(int i, int j) {
  return Element::x(i) * Element::y(j) * Scalar::s_power(-1) - Element::y(i) * Element::x(j) * Scalar::s_power(1);
}

Element bracket_power(int i, int j, int n) {
  if (n < 0) throw std::invalid_argument("bracket power must be nonnegative");
  if (i >= j) throw std::invalid_argument("closed bracket power expansion requires i < j");
  Element r;
  for (int k = 0; k <= n; ++k) {
    // [n;k] (-1)^k q^{n^2/2 + (k-n)(1+k)} x_i^{n-k} y_i^k x_j^k y_j^{n-k}
    Monomial m;
    if (n > 0) m.push_back({i, n - k, k});
    if (n > 0) m.push_back({j, k, n - k});
    Scalar c = qbinomial(n, k).shifted(n * n + 2 * (k - n) * (1 + k));
    if (k % 2) c = -c;
    r.add_term(m, c);
  }
  return r;
}

}  // namespace qinv
