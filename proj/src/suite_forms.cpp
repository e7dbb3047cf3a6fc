#include "suite_registry.hpp"

#include "qinv/action.hpp"
#include "qinv/forms.hpp"
#include "qinv/polarisation.hpp"
#include "qinv/valgebra.hpp"

#include <algorithm>
#include <string>

namespace qinv::suites {

namespace {

Element b(int i, int j) { return bracket(i, j); }
Element x(int i) { return Element::x(i); }
Element y(int i) { return Element::y(i); }
Element mono(Monomial m, const Scalar& c = 1) { return Element::monomial(std::move(m), c); }
VElement v(int i, int e = 1) { return VElement::v(i, e); }

Element example42(long c, int sign) { return b(0, 1) * b(2, 3) + b(0, 3) * b(1, 2) * Scalar(sign * c); }

Element printed_a(long c) {
  return mono({{1, 1, 0}, {2, 0, 1}, {3, 0, 1}}, q(2) * Scalar(c)) + mono({{1, 0, 1}, {2, 1, 0}, {3, 0, 1}}, q(-1) - q(3) * Scalar(c)) -
         mono({{1, 0, 1}, {2, 0, 1}, {3, 1, 0}});
}

Element printed_b(long c) {
  return -mono({{1, 1, 0}, {2, 1, 0}, {3, 0, 1}}) + mono({{1, 1, 0}, {2, 0, 1}, {3, 1, 0}}, q() - q(3) * Scalar(c)) +
         mono({{1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, q(4) * Scalar(c));
}

Element printed_x(long c) {
  return mono({{1, 1, 0}, {2, 1, 0}, {3, 0, 1}}, s(-1)) - mono({{1, 1, 0}, {2, 0, 1}, {3, 1, 0}}, s(1) - s(5) * Scalar(c)) -
         mono({{1, 0, 1}, {2, 1, 0}, {3, 1, 0}}, s(7) * Scalar(c));
}

Element printed_y(long c) {
  return mono({{1, 1, 0}, {2, 0, 1}, {3, 0, 1}}, s(5) * Scalar(c)) + mono({{1, 0, 1}, {2, 1, 0}, {3, 0, 1}}, s(-1) - s(7) * Scalar(c)) -
         mono({{1, 0, 1}, {2, 0, 1}, {3, 1, 0}}, s(1));
}

struct NamedForm {
  std::string name;
  Element f;
  int n;
};

/// Every form the suite extracts coefficients from.
std::vector<NamedForm> extracted_forms() {
  std::vector<NamedForm> r = {
      {"(01)", b(0, 1), 1},
      {"(03)", b(0, 3), 1},
      {"q(01)(02)", b(0, 1) * b(0, 2) * q(), 2},
      {"(01)^2", b(0, 1).pow(2), 2},
      {"(02)^3", b(0, 2).pow(3), 3},
      {"(03)^4", b(0, 3).pow(4), 4},
      {"q^3(01)(02)(03)", product_form({1, 2, 3}, q(3)), 3},
      {"q^6(01)(02)(03)(04)", product_form({1, 2, 3, 4}, q(6)), 4},
      {"(01)(02)(13)", b(0, 1) * b(0, 2) * b(1, 3), 2},
  };
  for (long c : {1L, 2L})
    for (int sign : {1, -1})
      r.push_back({std::string("(01)(23)") + (sign > 0 ? "+" : "-") + std::to_string(c) + "(03)(12)", example42(c, sign), 1});
  return r;
}

/// The coefficient action as printed: L with q^{n/2} and F with q^{(-n-2)/2}.
Outcome printed_action(const Context& ctx, const NForm& form, const std::string& letter) {
  const int n = form.n;
  const auto& A = form.coefficients;
  std::vector<std::pair<std::string, Outcome>> parts;
  for (int i = 0; i <= n; ++i) {
    std::string at = "i=" + std::to_string(i);
    if (letter == "L") parts.emplace_back(at, same(ctx, act(Generator::L, A[i]), A[i] * s(n)));
    if (letter == "K") parts.emplace_back(at, same(ctx, act(Generator::K, A[i]), A[i] * s(n - 2 * i)));
    if (letter == "E") parts.emplace_back(at, same(ctx, act(Generator::E, A[i]), i > 0 ? A[i - 1] * -(s(2 * i - n + 2) * qnum(i)) : Element()));
    if (letter == "F") parts.emplace_back(at, same(ctx, act(Generator::F, A[i]), i < n ? A[i + 1] * -(s(-n - 2) * qnum(n - i)) : Element()));
  }
  return all_of(parts);
}

void add_printed_action(Registry& r, const std::string& letter) {
  r.push_back({"forms.action_printed." + letter, "printed coefficient action of " + letter + " on all extracted forms", [letter](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& nf : extracted_forms()) parts.emplace_back(nf.name, printed_action(ctx, extract(nf.f, nf.n), letter));
                 return all_of(parts);
               }});
}

VElement symmetric_sum(int n) {
  VElement r;
  for (int j = 0; j <= n; ++j) r += (n - j > 0 ? v(0, n - j) : VElement(1)) * elementary_symmetric(n, j);
  return r;
}

VElement printed_p12() { return v(0, 2) * q(-2) - v(0) * (v(1) * q(2) + v(2)) * q(-4) + v(1) * v(2) * q(-4); }

VElement printed_p21() {
  return v(0, 2) * q(-2) - v(0) * (v(1) + v(2) * q(2)) * q(-4) + v(1) * v(2) * q(-2) + v(1, 2) * (q(-4) * (Scalar(1) - q(2)));
}

}  // namespace

void add_forms(Registry& r) {
  r.push_back({"forms.roundtrip", "extract(assemble(f)) = f on random coefficient tables", [](const Context& ctx) {
                 Random rng("forms.roundtrip");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int trial = 0; trial < 30; ++trial) {
                   NForm form;
                   form.n = rng.uniform(0, 4);
                   for (int i = 0; i <= form.n; ++i) form.coefficients.push_back(rng.element(2, rng.uniform(1, 3), 3));
                   NForm back = extract(assemble(form), form.n);
                   for (int i = 0; i <= form.n; ++i)
                     parts.emplace_back("trial " + std::to_string(trial), same(ctx, back.coefficients[i], form.coefficients[i]));
                 }
                 for (const auto& nf : extracted_forms()) parts.emplace_back(nf.name, same(ctx, assemble(extract(nf.f, nf.n)), nf.f));
                 return all_of(parts);
               }});

  r.push_back({"forms.linear_0i", "(0i) has A = q^{-1/2} y_i, B = -q^{1/2} x_i", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int i : {1, 2, 5}) {
                   NForm f = extract(b(0, i), 1);
                   parts.emplace_back("A", same(ctx, f.coefficients[0], y(i) * s(-1)));
                   parts.emplace_back("B", same(ctx, f.coefficients[1], x(i) * -s(1)));
                 }
                 return all_of(parts);
               }});

  for (long c : {1L, 2L}) {
    std::string tag = "_c" + std::to_string(c);
    r.push_back({"forms.linear_pair.printed_coefficients" + tag, "printed A, B against (01)(23) - c(03)(12)", [c](const Context& ctx) {
                   NForm f = extract(example42(c, -1), 1);
                   return all_of({{"A", same(ctx, f.coefficients[0], printed_a(c))}, {"B", same(ctx, f.coefficients[1], printed_b(c))}});
                 }});
    r.push_back({"forms.linear_pair.coefficients_plus" + tag, "printed A, B are the coefficients of (01)(23) + c(03)(12)", [c](const Context& ctx) {
                   NForm f = extract(example42(c, 1), 1);
                   return all_of({{"A", same(ctx, f.coefficients[0], printed_a(c))}, {"B", same(ctx, f.coefficients[1], printed_b(c))}});
                 }});
    r.push_back({"forms.linear_pair.commutation" + tag, "BA = qAB + c q^{7/2}(q^2-1)(12)(13)(23) for (01)(23) - c(03)(12)", [c](const Context& ctx) {
                   NForm f = extract(example42(c, -1), 1);
                   const Element &A = f.coefficients[0], &B = f.coefficients[1];
                   return same(ctx, B * A, A * B * q() + b(1, 2) * b(1, 3) * b(2, 3) * (s(7) * (q(2) - Scalar(1)) * Scalar(c)));
                 }});
    r.push_back({"forms.point.printed" + tag, "printed X, Y against the point of (01)(23) - c(03)(12)", [c](const Context& ctx) {
                   Point p = point_of_linear_form(extract(example42(c, -1), 1));
                   return all_of({{"X", same(ctx, p.X, printed_x(c))}, {"Y", same(ctx, p.Y, printed_y(c))}});
                 }});
    r.push_back({"forms.point.plus" + tag, "printed X, Y form the point of (01)(23) + c(03)(12)", [c](const Context& ctx) {
                   Point p = point_of_linear_form(extract(example42(c, 1), 1));
                   return all_of({{"X", same(ctx, p.X, printed_x(c))}, {"Y", same(ctx, p.Y, printed_y(c))}, {"is_point", holds(is_point(p), "not a point")}});
                 }});
  }

  r.push_back({"forms.linear_0i.commutation_printed", "BA = q^2 AB for (0i)", [](const Context& ctx) {
                 NForm f = extract(b(0, 2), 1);
                 return same(ctx, f.coefficients[1] * f.coefficients[0], f.coefficients[0] * f.coefficients[1] * q(2));
               }});
  r.push_back({"forms.linear_0i.commutation_computed", "BA = q AB for (0i)", [](const Context& ctx) {
                 NForm f = extract(b(0, 2), 1);
                 return same(ctx, f.coefficients[1] * f.coefficients[0], f.coefficients[0] * f.coefficients[1] * q());
               }});

  r.push_back({"forms.quadratic_two_zeros", "q(01)(02): A = q y1 y2, B = -(q^2 x1 y2 + q y1 x2)/[2], C = q^3 x1 x2", [](const Context& ctx) {
                 NForm f = extract(b(0, 1) * b(0, 2) * q(), 2);
                 return all_of({{"A", same(ctx, f.coefficients[0], y(1) * y(2) * q())},
                                {"B", same(ctx, f.coefficients[1], (x(1) * y(2) * q(2) + y(1) * x(2) * q()) * -qnum(2).inverse())},
                                {"C", same(ctx, f.coefficients[2], x(1) * x(2) * q(3))}});
               }});
  r.push_back({"forms.quadratic_double_zero", "(01)^2: A = y1^2, B = -x1 y1, C = q^2 x1^2", [](const Context& ctx) {
                 NForm f = extract(b(0, 1).pow(2), 2);
                 return all_of({{"A", same(ctx, f.coefficients[0], y(1).pow(2))},
                                {"B", same(ctx, f.coefficients[1], -(x(1) * y(1)))},
                                {"C", same(ctx, f.coefficients[2], x(1).pow(2) * q(2))}});
               }});
  r.push_back({"forms.cubic_triple_zero", "(02)^3 coefficients", [](const Context& ctx) {
                 NForm f = extract(b(0, 2).pow(3), 3);
                 return all_of({{"A", same(ctx, f.coefficients[0], y(2).pow(3) * s(3))},
                                {"B", same(ctx, f.coefficients[1], x(2) * y(2).pow(2) * -s(1))},
                                {"C", same(ctx, f.coefficients[2], x(2).pow(2) * y(2) * s(3))},
                                {"D", same(ctx, f.coefficients[3], x(2).pow(3) * -s(9))}});
               }});
  r.push_back({"forms.quartic_quadruple_zero", "(03)^4 coefficients", [](const Context& ctx) {
                 NForm f = extract(b(0, 3).pow(4), 4);
                 return all_of({{"A", same(ctx, f.coefficients[0], y(3).pow(4) * q(4))},
                                {"B", same(ctx, f.coefficients[1], x(3) * y(3).pow(3) * -q(2))},
                                {"C", same(ctx, f.coefficients[2], x(3).pow(2) * y(3).pow(2) * q(2))},
                                {"D", same(ctx, f.coefficients[3], x(3).pow(3) * y(3) * -q(4))},
                                {"E", same(ctx, f.coefficients[4], x(3).pow(4) * q(8))}});
               }});

  r.push_back({"forms.product.reorder", "(0j)(0i) = q^2, q^4, q^2 (0i)(0j) for 0<i<j, i<0<j, i<j<0", [](const Context& ctx) {
                 return all_of({{"0<i<j", same(ctx, b(0, 3) * b(0, 1), b(0, 1) * b(0, 3) * q(2))},
                                {"i<0<j", same(ctx, b(0, 2) * b(0, -1), b(0, -1) * b(0, 2) * q(4))},
                                {"i<j<0", same(ctx, b(0, -1) * b(0, -3), b(0, -3) * b(0, -1) * q(2))}});
               }});
  r.push_back({"forms.product.real", "q^{n(n-1)/2}(0i_1)...(0i_n) is star-fixed for 0<i_1<...<i_n", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const std::vector<int>& idx : std::vector<std::vector<int>>{{1}, {1, 2}, {2, 5}, {1, 2, 3}, {1, 3, 4}, {1, 2, 3, 4}}) {
                   const int n = static_cast<int>(idx.size());
                   Element f = product_form(idx, q(n * (n - 1) / 2));
                   parts.emplace_back("n=" + std::to_string(n), same(ctx, f.star(), f));
                 }
                 return all_of(parts);
               }});

  for (const char* letter : {"L", "K", "E", "F"}) add_printed_action(r, letter);
  r.push_back({"forms.action_computed", "coefficient action with L = q^{d/2}, F = -q^{(n-2i-4)/2}[n-i] on all extracted forms", [](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& nf : extracted_forms())
                   for (const RelationCheck& c : coefficient_action_check(extract(nf.f, nf.n)))
                     parts.emplace_back(nf.name, holds(c.holds, c.relation + " i=" + std::to_string(c.i)));
                 return all_of(parts);
               }});

  r.push_back({"forms.polar.quadratic", "first polar of a quadratic form", [](const Context& ctx) {
                 Element f = product_form({2, 3}, q());
                 NForm c = extract(f, 2);
                 const Element &A = c.coefficients[0], &B = c.coefficients[1], &C = c.coefficients[2];
                 return same(ctx, polar_form(f, 2, 1, 1), x(0) * (x(1) * A + y(1) * B * q()) + y(0) * (x(1) * B + y(1) * C));
               }});
  r.push_back({"forms.polar.quadratic_example", "polar of q(02)(03) in two displayed forms", [](const Context& ctx) {
                 Element p = polar_form(product_form({2, 3}, q()), 2, 1, 1);
                 Element inner = x(2) * y(3) * q() + y(2) * x(3);
                 Element expanded = x(0) * x(1) * y(2) * y(3) * q() - (x(0) * y(1) * inner * q(2) + y(0) * x(1) * inner * q()) * qnum(2).inverse() +
                                    y(0) * y(1) * x(2) * x(3) * q(3);
                 return all_of({{"expanded", same(ctx, p, expanded)},
                                {"brackets", same(ctx, p, (b(0, 2) * b(1, 3) + b(1, 2) * b(0, 3)) * qnum(2).inverse())}});
               }});

  auto cubic = [](int k) {
    Element g = product_form({2, 3, 4}, q(3));
    return std::pair{polar_form(g, 3, 1, k), extract(g, 3)};
  };
  r.push_back({"forms.polar.cubic_first", "first polar of a cubic form", [cubic](const Context& ctx) {
                 auto [p, cf] = cubic(1);
                 const auto& a = cf.coefficients;
                 Element x0 = x(0), y0 = y(0), x1 = x(1), y1 = y(1);
                 Element grouped = x0 * x0 * (x1 * a[0] + y1 * a[1] * q(2)) + x0 * y0 * (x1 * a[1] + y1 * a[2] * q()) * qnum(2) + y0 * y0 * (x1 * a[2] + y1 * a[3]);
                 Element expanded = x0 * x0 * x1 * a[0] + (x0 * x0 * y1 * q(2) + x0 * y0 * x1 * (q(-1) + q())) * a[1] +
                                    (x0 * y0 * y1 * (Scalar(1) + q(2)) + y0 * y0 * x1) * a[2] + y0 * y0 * y1 * a[3];
                 return all_of({{"grouped", same(ctx, p, grouped)}, {"expanded", same(ctx, p, expanded)}});
               }});
  r.push_back({"forms.polar.cubic_second", "second polar of a cubic form", [cubic](const Context& ctx) {
                 auto [p, cf] = cubic(2);
                 const auto& a = cf.coefficients;
                 Element x0 = x(0), y0 = y(0), x1 = x(1), y1 = y(1);
                 Element grouped = x0 * (x1 * x1 * a[0] + x1 * y1 * a[1] * (q() * qnum(2)) + y1 * y1 * a[2] * q(2)) +
                                   y0 * (x1 * x1 * a[1] + x1 * y1 * a[2] * qnum(2) + y1 * y1 * a[3]);
                 return same(ctx, p, grouped);
               }});
  r.push_back({"forms.polar.cubic_second_printed", "second polar with the printed y1 x1 C term", [cubic](const Context& ctx) {
                 auto [p, cf] = cubic(2);
                 const auto& a = cf.coefficients;
                 Element x0 = x(0), y0 = y(0), x1 = x(1), y1 = y(1);
                 Element grouped = x0 * (x1 * x1 * a[0] + x1 * y1 * a[1] * (q() * qnum(2)) + y1 * y1 * a[2] * q(2)) +
                                   y0 * (x1 * x1 * a[1] + y1 * x1 * a[2] * qnum(2) + y1 * y1 * a[3]);
                 return same(ctx, p, grouped);
               }});
  r.push_back({"forms.polar.cubic_example", "polars of q^3(02)(03)(04) as bracket sums", [](const Context& ctx) {
                 Element g = product_form({2, 3, 4}, q(3));
                 Element first = (b(0, 2) * b(0, 3) * b(1, 4) + b(0, 2) * b(1, 3) * b(0, 4) + b(1, 2) * b(0, 3) * b(0, 4)) * (q() / qnum(3));
                 Element second = (b(0, 2) * b(1, 3) * b(1, 4) + b(1, 2) * b(0, 3) * b(1, 4) + b(1, 2) * b(1, 3) * b(0, 4)) * (q() / qnum(3));
                 return all_of({{"first", same(ctx, polar_form(g, 3, 1, 1), first)}, {"second", same(ctx, polar_form(g, 3, 1, 2), second)}});
               }});
  r.push_back({"forms.polar.closed_form", "polar through the kernel C_i^{n,k} equals (P_0p)^k f", [](const Context& ctx) {
                 Random rng("forms.polar.closed_form");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int trial = 0; trial < 12; ++trial) {
                   const int n = rng.uniform(1, 3);
                   std::vector<int> idx;
                   for (int t = 0; t < n; ++t) idx.push_back(rng.uniform(2, 4));
                   std::sort(idx.begin(), idx.end());
                   Element f = product_form(idx, Scalar(1)) * (Element(1) + b(3, 4) * rng.scalar());
                   for (int k = 0; k <= n + 1; ++k) parts.emplace_back("k=" + std::to_string(k), same(ctx, polar_form_closed(f, n, 1, k), polar_form(f, n, 1, k)));
                 }
                 Element twosided = b(-2, 0) * b(0, 3) * b(-1, 2);
                 for (int k = 0; k <= 2; ++k) parts.emplace_back("two-sided", same(ctx, polar_form_closed(twosided, 2, 1, k), polar_form(twosided, 2, 1, k)));
                 return all_of(parts);
               }});
  r.push_back({"forms.polar.composition", "(f^(k))^(l) = f^(k+l) and f^(k) = 0 for k > n", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& [f, n] : std::vector<std::pair<Element, int>>{{product_form({2, 3}, q()), 2}, {product_form({2, 3, 4}, q(3)), 3}, {b(0, 3).pow(3), 3}})
                   for (int k = 0; k <= n + 1; ++k)
                     for (int l = 0; k + l <= n + 1; ++l)
                       parts.emplace_back("k=" + std::to_string(k) + " l=" + std::to_string(l),
                                          same(ctx, polar_power(0, 1, polar_form(f, n, 1, k), l), polar_form(f, n, 1, k + l)));
                 return all_of(parts);
               }});
}

void add_newton(Registry& r) {
  r.push_back({"newton.expansion_printed", "p_{1..n} = q^{n(1-n)} sum v_0^{n-j} A_j, n <= 4", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 4; ++n) parts.emplace_back("n=" + std::to_string(n), same(ctx, poly(n), symmetric_sum(n) * q(n * (1 - n))));
                 return all_of(parts);
               }});
  r.push_back({"newton.expansion_computed", "p_{1..n} = q^{n(n-1)} sum v_0^{n-j} A_j, n <= 4", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 4; ++n) parts.emplace_back("n=" + std::to_string(n), same(ctx, poly(n), symmetric_sum(n) * q(n * (n - 1))));
                 return all_of(parts);
               }});
  r.push_back({"newton.residual", "Newton relations, 1 <= n <= 4, 1 <= k <= 6", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 4; ++n)
                   for (int k = 1; k <= 6; ++k) parts.emplace_back("n=" + std::to_string(n) + " k=" + std::to_string(k), same(ctx, newton_residual(n, k), VElement()));
                 return all_of(parts);
               }});
  r.push_back({"newton.order.printed", "p_{1,2} and p_{2,1} as displayed", [](const Context& ctx) {
                 return all_of({{"p12", same(ctx, poly({1, 2}), printed_p12())}, {"p21", same(ctx, poly({2, 1}), printed_p21())}});
               }});
  r.push_back({"newton.order.computed", "p_{1,2}, p_{2,1} equal q^4 times the displays and differ", [](const Context& ctx) {
                 VElement p12 = poly({1, 2}), p21 = poly({2, 1});
                 return all_of({{"p12", same(ctx, p12, printed_p12() * q(4))},
                                {"p21", same(ctx, p21, printed_p21() * q(4))},
                                {"order", holds(p12 != p21, "p12 = p21")},
                                {"not proportional", holds(p12 != p21 * (p12.v0_coefficient(2).terms().begin()->second / p21.v0_coefficient(2).terms().begin()->second), "proportional")}});
               }});
  r.push_back({"newton.classical", "at q = 1 the relations are the classical Newton identities", [](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 3; ++n)
                   for (int k = 1; k <= 4; ++k) {
                     VElement classical = power_sum(n, k);
                     if (k <= n) classical += elementary_symmetric(n, k) * Scalar(k);
                     for (int i = 1; i < k; ++i)
                       if (k - i <= n) classical += elementary_symmetric(n, k - i) * power_sum(n, i);
                     parts.emplace_back("n=" + std::to_string(n) + " k=" + std::to_string(k), holds(classical.evaluate(Rational(1)).empty(), "nonzero at q=1"));
                   }
                 return all_of(parts);
               }});
  r.push_back({"newton.base_relation", "v_j v_i = q^2 v_i v_j + (1-q^2) v_i^2 and the letter rewriting agrees", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 parts.emplace_back("v2 v1", same(ctx, v(2) * v(1), v(1) * v(2) * q(2) + v(1, 2) * (Scalar(1) - q(2))));
                 Random rng("newton.base_relation");
                 for (int trial = 0; trial < 100; ++trial) {
                   std::vector<int> w;
                   for (int t = rng.uniform(0, 6); t > 0; --t) w.push_back(rng.uniform(0, 3));
                   VElement prod(1);
                   for (int i : w) prod = prod * v(i);
                   parts.emplace_back("word", same(ctx, prod, v_normalize(w)));
                 }
                 return all_of(parts);
               }});
  r.push_back({"newton.bracket_relations", "y_0 (0i) = q^{-1}(0i) y_0, y_i (0i) = q (0i) y_i, y_j (0i) = q^3 (0i) y_j", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int i : {1, 2}) {
                   Element bi = b(0, i);
                   parts.emplace_back("y0", same(ctx, y(0) * bi, bi * y(0) * q(-1)));
                   parts.emplace_back("yi", same(ctx, y(i) * bi, bi * y(i) * q()));
                   parts.emplace_back("yj", same(ctx, y(i + 1) * bi, bi * y(i + 1) * q(3)));
                 }
                 return all_of(parts);
               }});
}

}  // namespace qinv::suites
