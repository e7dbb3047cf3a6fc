#include "suite_registry.hpp"

#include "qinv/action.hpp"
#include "qinv/bracket_poly.hpp"
#include "qinv/catalog.hpp"
#include "qinv/polarisation.hpp"
#include "qinv/rewrite.hpp"

#include <string>

namespace qinv::suites {

namespace {

Element b(int i, int j) { return bracket(i, j); }
Element x(int i) { return Element::x(i); }
Element y(int i) { return Element::y(i); }
Element mono(Monomial m) { return Element::monomial(std::move(m)); }

/// x_1^a y_1^b x_2^c y_2^d.
Element block(int a, int b, int c, int d) {
  Monomial m;
  if (a + b) m.push_back({1, a, b});
  if (c + d) m.push_back({2, c, d});
  return mono(m);
}

Element k_power(int power, const Element& a) {
  Element r = a;
  for (int i = 0; i < std::abs(power); ++i) r = act(power > 0 ? Generator::K : Generator::Kinv, r);
  return r;
}

std::string triple(int i, int j, int k) { return std::to_string(i) + std::to_string(j) + std::to_string(k); }

/// Ordered index tuples the bracket relations are checked on.
const std::vector<std::vector<int>> kTriples = {{1, 2, 3}, {2, 4, 5}, {1, 3, 6}};
const std::vector<std::vector<int>> kQuads = {{1, 2, 3, 4}, {1, 3, 4, 6}, {2, 3, 5, 7}};

void letter_relation(Registry& r, const std::string& name, const std::string& text,
                     std::function<Outcome(const Context&, int, int, int)> f) {
  r.push_back({"bracket.letter." + name, text, [f](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& t : kTriples) parts.emplace_back(triple(t[0], t[1], t[2]), f(ctx, t[0], t[1], t[2]));
                 return all_of(parts);
               }});
}

void pair_relation(Registry& r, const std::string& name, const std::string& text,
                   std::function<Outcome(const Context&, int, int, int, int)> f) {
  r.push_back({"bracket.pair." + name, text, [f](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& t : kQuads) parts.emplace_back(triple(t[0], t[1], t[2]) + std::to_string(t[3]), f(ctx, t[0], t[1], t[2], t[3]));
                 return all_of(parts);
               }});
}

/// Product (1,2n)(2,2n-1)...(n,n+1) expanded as a sum over choices of x/y,
/// with an explicit overall s-power.
Element product_expansion(int n, int s_exponent) {
  Element r;
  for (int m = 0; m < (1 << n); ++m) {
    Element w(1);
    int ones = 0;
    for (int a = 0; a < n; ++a) {
      bool one = (m >> a) & 1;
      ones += one;
      w = w * (one ? y(a + 1) : x(a + 1));
    }
    for (int a = n - 1; a >= 0; --a) w = w * (((m >> a) & 1) ? x(2 * n - a) : y(2 * n - a));
    r += w * (s(s_exponent) * q(ones) * Scalar(ones % 2 ? -1 : 1));
  }
  return r;
}

Element bracket_chain(int n) {
  Element lhs(1);
  for (int a = 1; a <= n; ++a) lhs = lhs * b(a, 2 * n + 1 - a);
  return lhs;
}

}  // namespace

void add_bracket_calculus(Registry& r) {
  letter_relation(r, "jk_x_i", "(jk) x_i = q^3 x_i (jk), i<j<k", [](const Context& c, int i, int j, int k) { return same(c, b(j, k) * x(i), x(i) * b(j, k) * q(3)); });
  letter_relation(r, "jk_y_i", "(jk) y_i = q^3 y_i (jk), i<j<k", [](const Context& c, int i, int j, int k) { return same(c, b(j, k) * y(i), y(i) * b(j, k) * q(3)); });
  letter_relation(r, "jk_x_j", "(jk) x_j = q x_j (jk), j<k", [](const Context& c, int, int j, int k) { return same(c, b(j, k) * x(j), x(j) * b(j, k) * q()); });
  letter_relation(r, "jk_y_j", "(jk) y_j = q y_j (jk), j<k", [](const Context& c, int, int j, int k) { return same(c, b(j, k) * y(j), y(j) * b(j, k) * q()); });
  letter_relation(r, "x_j_ij", "x_j (ij) = q (ij) x_j, i<j", [](const Context& c, int i, int j, int) { return same(c, x(j) * b(i, j), b(i, j) * x(j) * q()); });
  letter_relation(r, "y_j_ij", "y_j (ij) = q (ij) y_j, i<j", [](const Context& c, int i, int j, int) { return same(c, y(j) * b(i, j), b(i, j) * y(j) * q()); });
  letter_relation(r, "x_k_ij", "x_k (ij) = q^3 (ij) x_k, i<j<k", [](const Context& c, int i, int j, int k) { return same(c, x(k) * b(i, j), b(i, j) * x(k) * q(3)); });
  letter_relation(r, "y_k_ij", "y_k (ij) = q^3 (ij) y_k, i<j<k", [](const Context& c, int i, int j, int k) { return same(c, y(k) * b(i, j), b(i, j) * y(k) * q(3)); });

  pair_relation(r, "kl_ij", "(kl)(ij) = q^6 (ij)(kl)", [](const Context& c, int i, int j, int k, int l) { return same(c, b(k, l) * b(i, j), b(i, j) * b(k, l) * q(6)); });
  pair_relation(r, "jk_il", "(jk)(il) = (il)(jk)", [](const Context& c, int i, int j, int k, int l) { return same(c, b(j, k) * b(i, l), b(i, l) * b(j, k)); });
  pair_relation(r, "jl_ik", "(jl)(ik) = q^4 (ik)(jl) + (q^4-q^6)(ij)(kl)", [](const Context& c, int i, int j, int k, int l) {
    return same(c, b(j, l) * b(i, k), b(i, k) * b(j, l) * q(4) + b(i, j) * b(k, l) * (q(4) - q(6)));
  });
  pair_relation(r, "jk_ij", "(jk)(ij) = q^4 (ij)(jk)", [](const Context& c, int i, int j, int k, int) { return same(c, b(j, k) * b(i, j), b(i, j) * b(j, k) * q(4)); });
  pair_relation(r, "ik_ij", "(ik)(ij) = q^2 (ij)(ik)", [](const Context& c, int i, int j, int k, int) { return same(c, b(i, k) * b(i, j), b(i, j) * b(i, k) * q(2)); });
  pair_relation(r, "jk_ik", "(jk)(ik) = q^2 (ik)(jk)", [](const Context& c, int i, int j, int k, int) { return same(c, b(j, k) * b(i, k), b(i, k) * b(j, k) * q(2)); });
  pair_relation(r, "plucker", "q^4 (ij)(kl) + q^2 (ik)(lj) + (il)(jk) = 0", [](const Context& c, int i, int j, int k, int l) {
    return same(c, b(i, j) * b(k, l) * q(4) + b(i, k) * b(l, j) * q(2) + b(i, l) * b(j, k), Element());
  });
  pair_relation(r, "products_commute", "(ij)(kl), (ik)(jl), (il)(kj) pairwise commute", [](const Context& c, int i, int j, int k, int l) {
    Element u = b(i, j) * b(k, l), v = b(i, k) * b(j, l), w = b(i, l) * b(k, j);
    return all_of({{"uv", same(c, u * v, v * u)}, {"uw", same(c, u * w, w * u)}, {"vw", same(c, v * w, w * v)}});
  });

  auto z = [](int which, const std::vector<int>& t) { return z_element(which, t[0], t[1], t[2], t[3]); };
  r.push_back({"bracket.z.sum", "Z1 + Z2 + Z3 = 0", [z](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& t : kQuads) parts.emplace_back("quad", same(c, z(1, t) + z(2, t) + z(3, t), Element()));
                 return all_of(parts);
               }});
  r.push_back({"bracket.z.commute", "Z1, Z2, Z3 pairwise commute", [z](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& t : kQuads) {
                   parts.emplace_back("Z1Z2", same(c, z(1, t) * z(2, t), z(2, t) * z(1, t)));
                   parts.emplace_back("Z1Z3", same(c, z(1, t) * z(3, t), z(3, t) * z(1, t)));
                   parts.emplace_back("Z2Z3", same(c, z(2, t) * z(3, t), z(3, t) * z(2, t)));
                 }
                 return all_of(parts);
               }});
  r.push_back({"bracket.z.star", "Z1, Z2, Z3 are star-fixed", [z](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& t : kQuads)
                   for (int w = 1; w <= 3; ++w) parts.emplace_back("Z" + std::to_string(w), same(c, z(w, t).star(), z(w, t)));
                 return all_of(parts);
               }});

  const int i = 1, j = 2, k = 3;
  r.push_back({"bracket.expand.ij_ik", "(ij)(ik) expansion", [=](const Context& c) {
                 return same(c, b(i, j) * b(i, k),
                             x(i) * x(i) * y(j) * y(k) - x(i) * y(i) * (x(j) * y(k) * q() + y(j) * x(k)) + y(i) * y(i) * x(j) * x(k) * q(2));
               }});
  r.push_back({"bracket.expand.ik_jk", "(ik)(jk) expansion", [=](const Context& c) {
                 return same(c, b(i, k) * b(j, k),
                             x(i) * x(j) * y(k) * y(k) - (x(i) * y(j) * q() + y(i) * x(j)) * x(k) * y(k) + y(i) * y(j) * x(k) * x(k) * q(2));
               }});
  r.push_back({"bracket.expand.ij_jk", "(ij)(jk) expansion", [=](const Context& c) {
                 return same(c, b(i, j) * b(j, k),
                             x(i) * x(j) * y(j) * y(k) * q(-2) - (x(i) * y(j) * y(j) * x(k) + y(i) * x(j) * x(j) * y(k)) +
                                 y(i) * x(j) * y(j) * x(k) * q());
               }});
  r.push_back({"bracket.expand.ij_ij", "(ij)^2 expansion, both orders", [=](const Context& c) {
                 Element sq = b(i, j) * b(i, j);
                 return all_of({{"xy first", same(c, sq, x(i) * x(i) * y(j) * y(j) - x(i) * y(i) * x(j) * y(j) * qnum(2) + y(i) * y(i) * x(j) * x(j) * q(2))},
                                {"j first", same(c, sq, x(j) * x(j) * y(i) * y(i) * q(-2) - x(j) * y(j) * x(i) * y(i) * (qnum(2) * q(-2)) + y(j) * y(j) * x(i) * x(i))}});
               }});
  for (int n = 1; n <= 4; ++n)
    r.push_back({"bracket.expand.power_n" + std::to_string(n), "(ij)^n binomial expansion, n=" + std::to_string(n), [=](const Context& c) {
                   Element rhs;
                   for (int t = 0; t <= n; ++t)
                     rhs += x(i).pow(n - t) * y(i).pow(t) * x(j).pow(t) * y(j).pow(n - t) *
                            (qbinomial(n, t) * Scalar(t % 2 ? -1 : 1) * s(n * n + 2 * (t - n) * (1 + t)));
                   return same(c, b(i, j).pow(n), rhs);
                 }});
  r.push_back({"bracket.expand.triangle", "(ij)(ik)(jk) eight-term expansion", [=](const Context& c) {
                 Element rhs = x(i) * x(i) * x(j) * y(j) * y(k) * y(k) * s(-1) - x(i) * x(i) * y(j) * y(j) * x(k) * y(k) * s(3) -
                               x(i) * y(i) * x(j) * x(j) * y(k) * y(k) * s(3) - x(i) * y(i) * x(j) * y(j) * x(k) * y(k) * s(-3) +
                               x(i) * y(i) * x(j) * y(j) * x(k) * y(k) * s(5) + x(i) * y(i) * y(j) * y(j) * x(k) * x(k) * s(3) +
                               y(i) * y(i) * x(j) * x(j) * x(k) * y(k) * s(3) - y(i) * y(i) * x(j) * y(j) * x(k) * x(k) * s(7);
                 return same(c, b(i, j) * b(i, k) * b(j, k), rhs);
               }});
  for (int n = 1; n <= 4; ++n) {
    r.push_back({"bracket.expand.nested_n" + std::to_string(n),
                 "(1,2n)(2,2n-1)...(n,n+1) expansion with the printed prefactor q^{3n(n-1)/2}, n=" + std::to_string(n),
                 [=](const Context& c) { return same(c, bracket_chain(n), product_expansion(n, 3 * n * (n - 1))); }});
    r.push_back({"bracket.expand.nested_computed_n" + std::to_string(n),
                 "(1,2n)(2,2n-1)...(n,n+1) expansion with prefactor q^{3n(n-1)/2 - n/2}, n=" + std::to_string(n),
                 [=](const Context& c) { return same(c, bracket_chain(n), product_expansion(n, 3 * n * (n - 1) - n)); }});
  }
}

void add_polarisation(Registry& r) {
  r.push_back({"polar.bracket", "P_ij (ik) = (jk) and P_ij (ki) = (kj)", [](const Context& c) {
                 return all_of({{"P12(13)", same(c, polar(1, 2, b(1, 3)), b(2, 3))},
                                {"P13(12)", same(c, polar(1, 3, b(1, 2)), b(3, 2))},
                                {"P21(23)", same(c, polar(2, 1, b(2, 3)), b(1, 3))},
                                {"P31(23)", same(c, polar(3, 1, b(2, 3)), b(2, 1))},
                                {"P24(14)", same(c, polar(2, 4, b(1, 2)), b(1, 4))},
                                {"P12(12)", same(c, polar(1, 2, b(1, 2)), Element())}});
               }});
  r.push_back({"polar.two_term", "two-term formulas for P_kl and P_lk on x_k^{m-i} y_k^i x_l^{n-j} y_l^j beta", [](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 Element beta = y(3) * x(4);
                 for (int m = 1; m <= 3; ++m)
                   for (int n = 1; n <= 3; ++n)
                     for (int i = 0; i <= m; ++i)
                       for (int j = 0; j <= n; ++j) {
                         Element f = mono({{1, m - i, i}, {2, n - j, j}}) * beta;
                         auto part = [&](int a, int bb, int cc, int d) { return block(a, bb, cc, d) * beta; };
                         Element pkl, plk;
                         if (m - i >= 1) pkl += part(m - i - 1, i, n - j + 1, j) * qnum(m - i);
                         if (i >= 1) pkl += part(m - i, i - 1, n - j, j + 1) * (qnum(i) * q(m - i - n + j));
                         if (n - j >= 1) plk += part(m - i + 1, i, n - j - 1, j) * (qnum(n - j) * q(j - i));
                         if (j >= 1) plk += part(m - i, i + 1, n - j, j - 1) * qnum(j);
                         std::string tag = std::to_string(m) + std::to_string(n) + std::to_string(i) + std::to_string(j);
                         parts.emplace_back("P12 " + tag, same(c, polar(1, 2, f), pkl * qnum(m).inverse()));
                         parts.emplace_back("P21 " + tag, same(c, polar(2, 1, f), plk * qnum(n).inverse()));
                       }
                 return all_of(parts);
               }});
  r.push_back({"polar.action", "P_kl commutes with E, F, K; polars of invariants are invariant", [](const Context& c) {
                 Random rng("polar.action");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int t = 0; t < 20; ++t) {
                   Element f = rng.invariant(rng.uniform(2, 3), 4);
                   parts.emplace_back("P12 invariant", holds(is_invariant(polar(1, 2, f)), "P12 f not invariant"));
                   parts.emplace_back("P31 invariant", holds(is_invariant(polar(3, 1, f)), "P31 f not invariant"));
                   Element g = rng.bihomogeneous(2, 2, 1);
                   for (Generator gen : {Generator::E, Generator::F, Generator::K})
                     parts.emplace_back(generator_name(gen), same(c, act(gen, polar(1, 2, g)), polar(1, 2, act(gen, g))));
                 }
                 return all_of(parts);
               }});

  auto random_cases = [](const std::string& id, std::function<Outcome(const Context&, const Element&, int, int)> f) {
    return [id, f](const Context& c) {
      Random rng(id);
      std::vector<std::pair<std::string, Outcome>> parts;
      for (int t = 0; t < 100; ++t) {
        int m = rng.uniform(1, 3), n = rng.uniform(1, 3);
        int beta = rng.uniform(0, 6 - m - n);
        Element e = rng.bihomogeneous(m, n, beta);
        parts.emplace_back("sample " + std::to_string(t), f(c, e, m, n));
      }
      return all_of(parts);
    };
  };
  r.push_back({"polar.split", "f = P21 P12 f + (12) a = P12 P21 f + (12) b with b = [m][n+1]/([m+1][n]) a (100 samples)",
               random_cases("polar.split", [](const Context& c, const Element& f, int m, int n) {
                 CofactorSplit sp = extract_cofactor(1, 2, f);
                 Scalar ratio = qnum(m) * qnum(n + 1) / (qnum(m + 1) * qnum(n));
                 return all_of({{"a", same(c, sp.polar_part + b(1, 2) * sp.cofactor, f)},
                                {"b", same(c, polar(1, 2, polar(2, 1, f)) + b(1, 2) * sp.cofactor * ratio, f)}});
               })});
  r.push_back({"polar.difference", "[m][n+1] P21 P12 f - [n][m+1] P12 P21 f = [m-n] f (100 samples)",
               random_cases("polar.difference", [](const Context& c, const Element& f, int m, int n) {
                 return same(c, polar(2, 1, polar(1, 2, f)) * (qnum(m) * qnum(n + 1)) - polar(1, 2, polar(2, 1, f)) * (qnum(n) * qnum(m + 1)),
                             f * qnum(m - n));
               })});
  r.push_back({"polar.omega_first", "f = P21 P12 f + [n]/[n+1] (12) Omega f (100 samples)",
               random_cases("polar.omega_first", [](const Context& c, const Element& f, int, int n) {
                 return same(c, polar(2, 1, polar(1, 2, f)) + b(1, 2) * omega(1, 2, f) * (qnum(n) / qnum(n + 1)), f);
               })});
  r.push_back({"polar.omega_second", "f = P12 P21 f + [m]/[m+1] (12) Omega f (100 samples)",
               random_cases("polar.omega_second", [](const Context& c, const Element& f, int m, int) {
                 return same(c, polar(1, 2, polar(2, 1, f)) + b(1, 2) * omega(1, 2, f) * (qnum(m) / qnum(m + 1)), f);
               })});
  r.push_back({"polar.omega_monomial", "printed two-term formula for Omega on x_1^{m-i} y_1^i x_2^{n-j} y_2^j beta", [](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 Element beta = x(3);
                 for (int m = 1; m <= 3; ++m)
                   for (int n = 1; n <= 3; ++n)
                     for (int i = 0; i <= m; ++i)
                       for (int j = 0; j <= n; ++j) {
                         Element f = mono({{1, m - i, i}, {2, n - j, j}}) * beta;
                         Element rhs;
                         if (i >= 1 && n - j >= 1) rhs += block(m - i, i - 1, n - j - 1, j) * beta * (s(2 * (j - i) + 3) * qnum(i) * qnum(n - j));
                         if (m - i >= 1 && j >= 1) rhs -= block(m - i - 1, i, n - j, j - 1) * beta * (s(1 - 2 * m) * qnum(m - i) * qnum(j));
                         std::string tag = std::to_string(m) + std::to_string(n) + std::to_string(i) + std::to_string(j);
                         parts.emplace_back(tag, same(c, omega(1, 2, f), rhs * (qnum(m) * qnum(n)).inverse()));
                       }
                 return all_of(parts);
               }});
  r.push_back({"polar.cofactor_invariant", "the cofactor of an invariant is invariant", [](const Context&) {
                 Random rng("polar.cofactor_invariant");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int t = 0; t < 20; ++t) {
                   Element f = rng.invariant(rng.uniform(2, 3), 4);
                   if (f.is_zero() || f.degree_in(1).value_or(0) == 0 || f.degree_in(2).value_or(0) == 0) continue;
                   parts.emplace_back("sample", holds(is_invariant(extract_cofactor(1, 2, f).cofactor), "cofactor not invariant"));
                 }
                 return all_of(parts);
               }});

  auto commutation = [](const std::string& id, const std::string& text, bool printed, int which) {
    return Identity{id, text, [=](const Context& c) {
                      Random rng(id);
                      std::vector<std::pair<std::string, Outcome>> parts;
                      for (int t = 0; t < 40; ++t) {
                        int m = rng.uniform(1, 3), n = rng.uniform(1, 3);
                        Element f = rng.bihomogeneous(m, n, 1);
                        switch (which) {
                          case 0:
                            parts.emplace_back("P12", same(c, polar(1, 2, b(1, 2) * f), b(1, 2) * polar(1, 2, f) * (q() * qnum(m) / qnum(m + 1))));
                            break;
                          case 1:
                            parts.emplace_back("P21", same(c, polar(2, 1, b(1, 2) * f), b(1, 2) * polar(2, 1, f) * (q(printed ? 1 : -1) * qnum(n) / qnum(n + 1))));
                            break;
                          case 2:
                            if (m >= 2)
                              parts.emplace_back("Omega P12", same(c, omega(1, 2, polar(1, 2, f)), polar(1, 2, omega(1, 2, f)) * (q(printed ? -1 : 1) * qnum(n) / qnum(n + 1))));
                            break;
                          default:
                            if (n >= 2)
                              parts.emplace_back("Omega P21", same(c, omega(1, 2, polar(2, 1, f)), polar(2, 1, omega(1, 2, f)) * (q(printed ? 1 : -1) * qnum(m) / qnum(m + 1))));
                        }
                      }
                      return all_of(parts);
                    }};
  };
  r.push_back(commutation("polar.commute.p12_bracket", "P12((12)f) = q [m]/[m+1] (12) P12 f", true, 0));
  r.push_back(commutation("polar.commute.p21_bracket", "P21((12)f) = q [n]/[n+1] (12) P21 f (printed q-power)", true, 1));
  r.push_back(commutation("polar.commute.omega_p12", "Omega P12 = q^-1 [n]/[n+1] P12 Omega (printed q-power)", true, 2));
  r.push_back(commutation("polar.commute.omega_p21", "Omega P21 = q [m]/[m+1] P21 Omega (printed q-power)", true, 3));
  r.push_back(commutation("polar.commute.p21_bracket_computed", "P21((12)f) = q^-1 [n]/[n+1] (12) P21 f", false, 1));
  r.push_back(commutation("polar.commute.omega_p12_computed", "Omega P12 = q [n]/[n+1] P12 Omega", false, 2));
  r.push_back(commutation("polar.commute.omega_p21_computed", "Omega P21 = q^-1 [m]/[m+1] P21 Omega", false, 3));
}

void add_gordan_capelli(Registry& r) {
  auto samples = [](const std::string& id) {
    Random rng(id);
    std::vector<Element> out;
    while (out.size() < 24) {
      Element f = rng.invariant(rng.uniform(1, 4), rng.uniform(2, 4));
      if (!f.is_zero()) out.push_back(f);
    }
    return out;
  };
  r.push_back({"gc.recombine", "Gordan-Capelli series recombines exactly (24 random invariants, <= 4 indices, degree <= 8)", [samples](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const Element& f : samples("gc.samples")) parts.emplace_back("sample", same(c, gordan_capelli(f).recombine(), f));
                 return all_of(parts);
               }});
  r.push_back({"gc.components_invariant", "Gordan-Capelli components are invariant", [samples](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const Element& f : samples("gc.samples"))
                   for (const auto& term : gordan_capelli(f).terms)
                     parts.emplace_back("k=" + std::to_string(term.k), holds(is_invariant(term.component), "component not invariant"));
                 return all_of(parts);
               }});
  r.push_back({"gc.decompose", "bracket_decompose round-trips on the same invariants", [samples](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const Element& f : samples("gc.samples")) parts.emplace_back("sample", same(c, bracket_decompose(f).evaluate(), f));
                 return all_of(parts);
               }});
  r.push_back({"gc.examples", "series of (12)(13)(23) and (12)^2", [](const Context& c) {
                 Element t = b(1, 2) * b(1, 3) * b(2, 3);
                 return all_of({{"triangle", same(c, gordan_capelli(t).recombine(), t)},
                                {"square", same(c, gordan_capelli(b(1, 2).pow(2)).recombine(), b(1, 2).pow(2))}});
               }});
  r.push_back({"gc.coefficient_recursion", "alpha coefficients satisfy their recursion in the degree", [](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n2 = 0; n2 <= 5; ++n2)
                   for (int l = 0; l <= 5; ++l)
                     for (int k = 0; k <= l + 1; ++k) {
                       Scalar rhs = gordan_capelli_coefficient(l, n2, k);
                       if (k >= 1 && k <= n2 && k - 1 <= l)
                         rhs += gordan_capelli_coefficient(l, n2, k - 1) * qnum(n2 - k + 1) * qnum(n2 - k + 1) /
                                (qnum(n2 + l - 2 * k + 2) * qnum(n2 + l - 2 * k + 3));
                       parts.emplace_back("alpha", same(gordan_capelli_coefficient(l + 1, n2, k), rhs));
                     }
                 return all_of(parts);
               }});
}

void add_properties(Registry& r) {
  r.push_back({"pbw.confluence", "1000 random words: fast product, leftmost and rightmost rewriting agree", [](const Context& c) {
                 Random rng("pbw.confluence");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int t = 0; t < 1000; ++t) {
                   Word w = rng.word(rng.uniform(0, 7), 3);
                   Element fast = normalize(w);
                   parts.emplace_back("leftmost", same(c, fast, rewrite_normalize(w, RedexStrategy::Leftmost)));
                   parts.emplace_back("rightmost", same(c, fast, rewrite_normalize(w, RedexStrategy::Rightmost)));
                 }
                 return all_of(parts);
               }});
  r.push_back({"pbw.associativity", "associativity and distributivity on random elements", [](const Context& c) {
                 Random rng("pbw.associativity");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int t = 0; t < 100; ++t) {
                   Element a = rng.element(2, 3, 3), bb = rng.element(2, 3, 3), cc = rng.element(2, 2, 3);
                   parts.emplace_back("assoc", same(c, (a * bb) * cc, a * (bb * cc)));
                   parts.emplace_back("distrib", same(c, a * (bb + cc), a * bb + a * cc));
                 }
                 return all_of(parts);
               }});
  r.push_back({"action.relations", "200 random elements: KE = qEK, KF = q^-1 FK, [E,F] = (K^2-K^-2)/(q-q^-1), twisted Leibniz rule", [](const Context& c) {
                 Random rng("action.relations");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int t = 0; t < 200; ++t) {
                   Element a = rng.element(2, 3, 3), bb = rng.element(2, 2, 3);
                   parts.emplace_back("KE", same(c, act(Generator::K, act(Generator::E, a)), act(Generator::E, act(Generator::K, a)) * q()));
                   parts.emplace_back("KF", same(c, act(Generator::K, act(Generator::F, a)), act(Generator::F, act(Generator::K, a)) * q(-1)));
                   parts.emplace_back("EF", same(c, act(Generator::E, act(Generator::F, a)) - act(Generator::F, act(Generator::E, a)),
                                                 (k_power(2, a) - k_power(-2, a)) * (q() - q(-1)).inverse()));
                   parts.emplace_back("K product", same(c, act(Generator::K, a * bb), act(Generator::K, a) * act(Generator::K, bb)));
                   parts.emplace_back("E product", same(c, act(Generator::E, a * bb),
                                                        act(Generator::E, a) * act(Generator::K, bb) + act(Generator::Kinv, a) * act(Generator::E, bb)));
                   parts.emplace_back("F product", same(c, act(Generator::F, a * bb),
                                                        act(Generator::F, a) * act(Generator::K, bb) + act(Generator::Kinv, a) * act(Generator::F, bb)));
                 }
                 return all_of(parts);
               }});
  r.push_back({"star.antihomomorphism", "200 random pairs: (ab)* = b* a* and a** = a", [](const Context& c) {
                 Random rng("star.antihomomorphism");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int t = 0; t < 200; ++t) {
                   Element a = rng.element(2, 3, 3), bb = rng.element(2, 3, 3);
                   parts.emplace_back("anti", same(c, (a * bb).star(), bb.star() * a.star()));
                   parts.emplace_back("involution", same(c, a.star().star(), a));
                 }
                 return all_of(parts);
               }});
  r.push_back({"bracket.invariant", "brackets are invariant with (ji) = -(ij), (ij)* = (ij), (ii) = 0", [](const Context& c) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int i = 0; i <= 3; ++i)
                   for (int j = 0; j <= 3; ++j) {
                     parts.emplace_back("antisymmetric", same(c, b(j, i), -b(i, j)));
                     parts.emplace_back("star", same(c, b(i, j).star(), b(i, j)));
                     parts.emplace_back("invariant", holds(is_invariant(b(i, j)), "bracket not invariant"));
                   }
                 return all_of(parts);
               }});
}

}  // namespace qinv::suites
