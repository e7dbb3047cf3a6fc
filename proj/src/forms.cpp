#include "qinv/forms.hpp"

#include "qinv/action.hpp"
#include "qinv/polarisation.hpp"

#include <stdexcept>

namespace qinv {

namespace {

Element form_variables(int a, int b) {
  if (a + b == 0) return Element(1);
  return Element::monomial({{0, a, b}});
}

// Splits a monomial at index 0 into (indices < 0, block of 0, indices > 0).
struct Split {
  Monomial minus;
  Factor zero{0, 0, 0};
  Monomial plus;
};

Split split_at_zero(const Monomial& m) {
  Split s;
  for (const Factor& f : m) {
    if (f.index < 0) s.minus.push_back(f);
    else if (f.index == 0) s.zero = f;
    else s.plus.push_back(f);
  }
  return s;
}

}  // namespace

Element assemble(const NForm& form) {
  if (static_cast<int>(form.coefficients.size()) != form.n + 1)
    throw std::invalid_argument("n-form needs n+1 coefficients");
  Element f;
  for (int i = 0; i <= form.n; ++i) {
    const Element& a = form.coefficients[i];
    if (a.is_zero()) continue;
    for (int idx : a.indices())
      if (idx == 0) throw std::invalid_argument("form coefficients must not involve index 0");
    f += form_variables(form.n - i, i) * a * qbinomial(form.n, i);
  }
  return f;
}

NForm extract(const Element& f, int n) {
  if (n < 0) throw std::invalid_argument("form degree must be nonnegative");
  NForm form;
  form.n = n;
  form.coefficients.assign(n + 1, Element());
  for (const auto& [m, c] : f.terms()) {
    Split s = split_at_zero(m);
    if (!s.minus.empty()) throw std::invalid_argument("extract requires all point indices to be positive");
    if (s.zero.degree() != n)
      throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(n) + " in index 0");
    form.coefficients[s.zero.y].add_term(s.plus, c / qbinomial(n, s.zero.y));
  }
  return form;
}

Element product_form(const std::vector<int>& indices, const Scalar& scale) {
  Element f(scale);
  for (int i : indices) {
    if (i == 0) throw std::invalid_argument("product form indices must be nonzero");
    f = f * bracket(0, i);
  }
  return f;
}

std::vector<RelationCheck> coefficient_action_check(const NForm& form) {
  const int n = form.n;
  const auto& a = form.coefficients;
  auto coef = [&](int i) { return i < 0 || i > n ? Element() : a[i]; };
  auto deg = assemble(form).multidegree();
  int d = -n;
  if (deg)
    for (const auto& [idx, k] : *deg) d += k;
  std::vector<RelationCheck> out;
  for (int i = 0; i <= n; ++i) {
    out.push_back({"L", i, deg.has_value() && act(Generator::L, a[i]) == a[i] * Scalar::s_power(d)});
    out.push_back({"K", i, act(Generator::K, a[i]) == a[i] * Scalar::s_power(n - 2 * i)});
    out.push_back({"E", i, act(Generator::E, a[i]) == coef(i - 1) * (-qnum(i)).shifted(2 * i - n + 2)});
    out.push_back({"F", i, act(Generator::F, a[i]) == coef(i + 1) * (-qnum(n - i)).shifted(n - 2 * i - 4)});
  }
  return out;
}

Element polar_form(const Element& f, int n, int p, int k) {
  if (p == 0) throw std::invalid_argument("polar index must differ from the form index 0");
  for (int idx : f.indices())
    if (idx == p) throw std::invalid_argument("polar index " + std::to_string(p) + " occurs in the form");
  if (k < 0) throw std::invalid_argument("polar order must be nonnegative");
  if (k > n) return Element();
  return polar_power(0, p, f, k);
}

std::vector<Element> polar_kernel(int n, int k, int p) {
  if (p <= 0) throw std::invalid_argument("polar kernel requires p > 0");
  if (k < 0 || k > n) throw std::invalid_argument("polar order out of range");
  const int r = p + 1;
  Element ref = (n - k > 0 ? bracket_power(0, r, n - k) : Element(1)) * (k > 0 ? bracket_power(p, r, k) : Element(1));
  std::vector<Element> kernel(n + 1);
  for (const auto& [m, c] : ref.terms()) {
    const Factor& last = m.back();
    if (last.index != r) throw std::logic_error("reference product lacks the auxiliary index");
    const int i = last.x;
    // A_i of (0r)^n is (-1)^i q^{n^2/2 + (i-n)(1+i)} x_r^i y_r^{n-i}.
    Scalar ci = Scalar::s_power(n * n + 2 * (i - n) * (1 + i), i % 2 ? -1 : 1);
    Monomial prefix(m.begin(), m.end() - 1);
    kernel[i].add_term(prefix, c / ci);
  }
  return kernel;
}

Element polar_form_closed(const Element& f, int n, int p, int k) {
  if (k > n) return Element();
  std::vector<Element> kernel = polar_kernel(n, k, p);
  Element out;
  for (const auto& [m, c] : f.terms()) {
    Split s = split_at_zero(m);
    if (s.zero.degree() != n)
      throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(n) + " in index 0");
    if (!s.plus.empty() && s.plus.front().index <= p)
      throw std::invalid_argument("closed polar requires no form index in (0, p]");
    out += Element::monomial(s.minus) * kernel[s.zero.y] * Element::monomial(s.plus) * (c / qbinomial(n, s.zero.y));
  }
  return out;
}

bool is_point(const Point& p) {
  if (p.X.is_zero() || p.Y.is_zero()) return false;
  for (const Element* e : {&p.X, &p.Y})
    for (int idx : e->indices())
      if (idx == 0) return false;
  auto dx = p.X.multidegree(), dy = p.Y.multidegree();
  if (!dx || !dy || *dx != *dy) return false;
  Element line = Element::x(0) * p.Y * Scalar::s_power(-1) - Element::y(0) * p.X * Scalar::s_power(1);
  return is_invariant(line);
}

Point point_of_linear_form(const NForm& form) {
  if (form.n != 1) throw std::invalid_argument("point_of_linear_form needs a linear form");
  return {form.coefficients[1] * Scalar::s_power(-1, -1), form.coefficients[0] * Scalar::s_power(1)};
}

}  // namespace qinv
