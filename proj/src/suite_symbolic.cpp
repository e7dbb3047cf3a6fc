#include "suite_registry.hpp"

#include "qinv/action.hpp"
#include "qinv/catalog.hpp"
#include "qinv/forms.hpp"
#include "qinv/symbolic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace qinv::suites {

namespace {

Element b(int i, int j) { return bracket(i, j); }

NForm form(const std::vector<int>& indices, const Scalar& scale) {
  return extract(product_form(indices, scale), static_cast<int>(indices.size()));
}

const FreeElement& inv(const std::string& name) { return catalog(name).invariant(); }

Element realize_inv(const std::string& name, const std::vector<NForm>& forms) { return realize(inv(name), forms); }

Scalar qpoly(std::initializer_list<std::pair<int, long>> terms) {
  Scalar r;
  for (const auto& [e, c] : terms) r += Scalar::q_power(e, c);
  return r;
}

/// Derived catalog entry against its printed display, component by component.
void add_display(Registry& r, const std::string& prefix, const std::string& name) {
  r.push_back({prefix + ".display." + name, "derived " + name + " equals the printed display", [name](const Context& ctx) {
                 auto display = catalog_display(name);
                 if (!display) return holds(false, "no display");
                 const UniversalCovariant& u = catalog(name);
                 if (u.components.size() != display->components.size()) return holds(false, "order differs");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (std::size_t a = 0; a < u.components.size(); ++a)
                   parts.emplace_back("C" + std::to_string(a), same(ctx, u.components[a], display->components[a]));
                 return all_of(parts);
               }});
}

void add_roundtrip(Registry& r, const std::string& prefix, const std::vector<std::string>& names) {
  r.push_back({prefix + ".roundtrip", "realising each symbol-derived entry on (0j)^n returns its symbol", [names](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& name : names) {
                   const CatalogEntry& e = catalog_entry(name);
                   if (!e.symbol) continue;
                   parts.emplace_back(name, holds(roundtrip_check(*e.symbol, e.degrees), "round trip differs"));
                 }
                 return all_of(parts);
               }});
}

void add_universal(Registry& r, const std::string& prefix, const std::vector<std::string>& names) {
  r.push_back({prefix + ".universal", "catalog entries are universal invariants or covariants", [names](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& name : names) {
                   const UniversalCovariant& u = catalog(name);
                   bool ok = u.order == 0 ? is_universal_invariant(u.invariant()) : is_universal_covariant(u);
                   parts.emplace_back(name, holds(ok, "not invariant"));
                 }
                 return all_of(parts);
               }});
}

/// Rank over Q(s) of a list of free-algebra elements.
std::size_t rank(const std::vector<FreeElement>& elements) {
  std::vector<std::map<FreeWord, Scalar>> rows;
  for (const auto& e : elements) rows.emplace_back(e.terms().begin(), e.terms().end());
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) continue;
    auto [pivot, c] = *rows[i].begin();
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      auto it = rows[j].find(pivot);
      if (it == rows[j].end()) continue;
      Scalar factor = it->second / c;
      for (const auto& [w, v] : rows[i]) {
        Scalar& t = rows[j][w];
        t -= factor * v;
        if (t.is_zero()) rows[j].erase(w);
      }
    }
    ++r;
  }
  return r;
}

FreeElement random_free(Random& rng, int forms, int n) {
  FreeElement a;
  for (int t = rng.uniform(1, 3); t > 0; --t) {
    FreeWord w;
    for (int k = rng.uniform(1, 3); k > 0; --k) w.push_back({rng.uniform(1, forms), n, rng.uniform(0, n)});
    a += FreeElement::word(w, rng.scalar());
  }
  return a;
}

/// sum over i in {0,1}^n of -q^{3n(n-1)/2} (-q)^{|i|} U^{(i_1)}..U^{(i_n)} U^{(1-i_n)}..U^{(1-i_1)},
/// U^{(0)} = B, U^{(1)} = A.
FreeElement linear_family(int n) {
  FreeElement r;
  for (int mask = 0; mask < (1 << n); ++mask) {
    FreeWord w(2 * n);
    int ones = 0;
    for (int t = 0; t < n; ++t) {
      const int it = (mask >> t) & 1;
      ones += it;
      w[t] = {1, 1, it ? 0 : 1};
      w[2 * n - 1 - t] = {1, 1, it ? 1 : 0};
    }
    r.add_term(w, -q(3 * n * (n - 1) / 2) * q(ones) * Scalar(ones % 2 ? -1 : 1));
  }
  return r;
}

/// Component k of the covariant realised as a quadratic form.
NForm realize_quadratic(const UniversalCovariant& u, const std::vector<NForm>& forms) { return extract(realize(u, forms), 2); }

NForm difference(const NForm& a, const NForm& b) {
  NForm r = a;
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) r.coefficients[i] -= b.coefficients[i];
  return r;
}

}  // namespace

void add_symbolic_linear(Registry& r) {
  const std::vector<std::string> names = {"linear.I1", "linear.I2", "linear.I3"};
  r.push_back({"linear.simultaneous_pair", "q^{-1/2} B'A'' - q^{1/2} A'B'' on (01), (02) is -(12)", [](const Context& ctx) {
                 FreeElement a = display_word("BA'", 1, s(-1)) - display_word("AB'", 1, s(1));
                 return same(ctx, realize(a, {form({1}, 1), form({2}, 1)}), -b(1, 2));
               }});
  add_display(r, "linear", "linear.I1");
  r.push_back({"linear.family_printed", "symbol (1,2n)(2,2n-1)...(n,n+1) gives the displayed sum over {0,1}^n, n <= 3", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 3; ++n) parts.emplace_back("n=" + std::to_string(n), same(ctx, inv("linear.I" + std::to_string(n)), linear_family(n)));
                 return all_of(parts);
               }});
  r.push_back({"linear.family_computed", "symbol (1,2n)(2,2n-1)...(n,n+1) gives (-1)^{n+1} q^{-n/2} times the displayed sum, n <= 3", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 3; ++n)
                   parts.emplace_back("n=" + std::to_string(n), same(ctx, inv("linear.I" + std::to_string(n)), linear_family(n) * (s(-n) * Scalar(n % 2 ? 1 : -1))));
                 return all_of(parts);
               }});
  r.push_back({"linear.leading_word", "displayed I_n contains -q^{3n(n-1)/2} B^n A^n, and the derived I_n contains B^n A^n", [](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (int n = 1; n <= 3; ++n) {
                   FreeWord w;
                   for (int t = 0; t < n; ++t) w.push_back({1, 1, 1});
                   for (int t = 0; t < n; ++t) w.push_back({1, 1, 0});
                   std::string name = "linear.I" + std::to_string(n);
                   parts.emplace_back(name, same(linear_family(n).coefficient(w), -q(3 * n * (n - 1) / 2)));
                   parts.emplace_back(name + " derived", holds(!inv(name).coefficient(w).is_zero(), "B^n A^n missing"));
                 }
                 return all_of(parts);
               }});
  r.push_back({"linear.vanish_on_0i", "every linear invariant vanishes on (0i)", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& name : {"linear.I1", "linear.I2", "linear.I3"})
                   for (int i : {1, 3}) parts.emplace_back(name, same(ctx, realize_inv(name, {form({i}, 1)}), Element()));
                 return all_of(parts);
               }});
  for (long c : {1L, 2L}) {
    r.push_back({"linear.I1_on_pair_c" + std::to_string(c), "I_1 on (01)(23) - c(03)(12) is c(q^3-q^5)(12)(13)(23)", [c](const Context& ctx) {
                   Element f = b(0, 1) * b(2, 3) - b(0, 3) * b(1, 2) * Scalar(c);
                   return same(ctx, realize_inv("linear.I1", {extract(f, 1)}), b(1, 2) * b(1, 3) * b(2, 3) * ((q(3) - q(5)) * Scalar(c)));
                 }});
  }
  add_roundtrip(r, "linear", names);
  add_universal(r, "linear", names);
}

void add_symbolic_quadratic(Registry& r) {
  const std::vector<std::string> names = {"quadratic.I1", "quadratic.I2", "quadratic.I3_1", "quadratic.I3_2", "quadratic.I3_3",
                                          "twoform.I1", "twoform.Delta", "threeform.combinant"};
  auto A = FreeElement::symbol(1, 2, 0), B = FreeElement::symbol(1, 2, 1), C = FreeElement::symbol(1, 2, 2);
  r.push_back({"quadratic.coefficient_action", "E(A) = 0, E(B) = -qA, K(A) = qA, K(B) = B, K(C) = q^{-1}C", [=](const Context& ctx) {
                 return all_of({{"EA", same(ctx, free_act(Generator::E, A), FreeElement())},
                                {"EB", same(ctx, free_act(Generator::E, B), A * -q())},
                                {"KA", same(ctx, free_act(Generator::K, A), A * q())},
                                {"KB", same(ctx, free_act(Generator::K, B), B)},
                                {"KC", same(ctx, free_act(Generator::K, C), C * q(-1))}});
               }});
  r.push_back({"quadratic.coefficient_action.EC_printed", "E(C) = -q^2 B", [=](const Context& ctx) { return same(ctx, free_act(Generator::E, C), B * -q(2)); }});
  r.push_back({"quadratic.coefficient_action.EC_computed", "E(C) = -q^2 [2] B", [=](const Context& ctx) {
                 return same(ctx, free_act(Generator::E, C), B * -(q(2) * qnum(2)));
               }});
  r.push_back({"quadratic.I1_universal", "q^{-1} AC + q^{-3} CA - q^{-1}[2] BB is a universal invariant", [=](const Context&) {
                 FreeElement i = A * C * q(-1) + C * A * q(-3) - B * B * (q(-1) * qnum(2));
                 return holds(is_universal_invariant(i), "not invariant");
               }});
  r.push_back({"quadratic.symbol_to_universal", "q^{-1}(12)^2 gives the simultaneous I' and, identified, I_1", [](const Context& ctx) {
                 Element d = b(1, 2).pow(2) * q(-1);
                 UniversalCovariant two = symbol_to_universal(d, {2, 2}, false);
                 return all_of({{"two forms", same(ctx, two.invariant(), catalog_display("twoform.I1")->invariant())},
                                {"identified", same(ctx, two.identified().invariant(), catalog_display("quadratic.I1")->invariant())},
                                {"realised", same(ctx, realize(catalog_display("twoform.I1")->invariant(), {form({1, 1}, 1), form({2, 2}, 1)}), d)}});
               }});
  r.push_back({"quadratic.I1_on_prod12", "I_1 on q(01)(02) is -(12)^2/[2]", [](const Context& ctx) {
                 return same(ctx, realize_inv("quadratic.I1", {form({1, 2}, q())}), b(1, 2).pow(2) * -qnum(2).inverse());
               }});
  r.push_back({"quadratic.I1_on_square", "I_1 on (01)^2 vanishes", [](const Context& ctx) { return same(ctx, realize_inv("quadratic.I1", {form({1, 1}, 1)}), Element()); }});
  r.push_back({"quadratic.I2_on_prod12", "I_2 on q(01)(02) is (q^2 - q^{-2})(12)^3", [](const Context& ctx) {
                 return same(ctx, realize_inv("quadratic.I2", {form({1, 2}, q())}), b(1, 2).pow(3) * (q(2) - q(-2)));
               }});
  r.push_back({"quadratic.relation_printed", "q^2[2] I_2^2 + (q^2-1)^2 I_1^3 = 0 on q(01)(02)", [](const Context& ctx) {
                 NForm f = form({1, 2}, q());
                 Element i1 = realize_inv("quadratic.I1", {f}), i2 = realize_inv("quadratic.I2", {f});
                 return same(ctx, i2 * i2 * (q(2) * qnum(2)), -(i1 * i1 * i1) * (q(2) - Scalar(1)).pow(2));
               }});
  r.push_back({"quadratic.relation_computed", "q^6[2] I_2^2 + (q^2-1)^2 I_1^3 = 0 on q(01)(02)", [](const Context& ctx) {
                 NForm f = form({1, 2}, q());
                 Element i1 = realize_inv("quadratic.I1", {f}), i2 = realize_inv("quadratic.I2", {f});
                 return same(ctx, i2 * i2 * (q(6) * qnum(2)), -(i1 * i1 * i1) * (q(2) - Scalar(1)).pow(2));
               }});
  r.push_back({"quadratic.I3_1_square", "I_{3,1} = q^10 I_1^2", [](const Context& ctx) {
                 return same(ctx, inv("quadratic.I3_1"), inv("quadratic.I1") * inv("quadratic.I1") * q(10));
               }});
  r.push_back({"quadratic.I3_independent", "I_{3,1}, I_{3,2}, I_{3,3} are linearly independent", [](const Context&) {
                 return holds(rank({inv("quadratic.I3_1"), inv("quadratic.I3_2"), inv("quadratic.I3_3")}) == 3, "dependent");
               }});
  for (const auto& name : names) add_display(r, "quadratic", name);

  r.push_back({"quadratic.pair_printed", "I_1(f, f') and I_1(f', f) for f = q(01)(03), f' = q(02)(04)", [](const Context& ctx) {
                 NForm f = form({1, 3}, q()), g = form({2, 4}, q());
                 const FreeElement& t = inv("twoform.I1");
                 Scalar inv2 = qnum(2).inverse();
                 return all_of({{"ff'", same(ctx, realize(t, {f, g}), (b(1, 2) * b(3, 4) * q(5) - b(1, 4) * b(2, 3) * q(-1)) * inv2)},
                                {"f'f", same(ctx, realize(t, {g, f}), (b(1, 2) * b(3, 4) * q(3) - b(1, 4) * b(2, 3) * q(3)) * inv2)}});
               }});
  r.push_back({"quadratic.pair_asymmetric", "I_1(f, f') differs from I_1(f', f) and Delta_{f,f'} from -Delta_{f',f}", [](const Context&) {
                 NForm f = form({1, 3}, q()), g = form({2, 4}, q());
                 const FreeElement& t = inv("twoform.I1");
                 const UniversalCovariant& d = catalog("twoform.Delta");
                 return all_of({{"I_1", holds(realize(t, {f, g}) != realize(t, {g, f}), "symmetric")},
                                {"Delta", holds(realize(d, {f, g}) != -realize(d, {g, f}), "antisymmetric")}});
               }});
  r.push_back({"quadratic.Delta_ff", "Delta_{f,f} = (q^{23/2} - q^{15/2})(01)(02)(12) for f = q(01)(02)", [](const Context& ctx) {
                 NForm f = form({1, 2}, q());
                 return same(ctx, realize(catalog("twoform.Delta"), {f, f}), b(0, 1) * b(0, 2) * b(1, 2) * (s(23) - s(15)));
               }});
  r.push_back({"quadratic.Delta_ff_discriminant", "discriminant of Delta_{f,f} is -q^15 (q^2-1)^2 [2]^3 (12)^4", [](const Context& ctx) {
                 NForm f = form({1, 2}, q());
                 NForm delta = realize_quadratic(catalog("twoform.Delta"), {f, f});
                 return same(ctx, realize_inv("quadratic.I1", {delta}), b(1, 2).pow(4) * -(q(15) * (q(2) - Scalar(1)).pow(2) * qnum(2).pow(3)));
               }});
  r.push_back({"quadratic.intertwining", "realisation commutes with E, F, K on random free elements", [](const Context& ctx) {
                 Random rng("quadratic.intertwining");
                 std::vector<std::pair<std::string, Outcome>> parts;
                 std::vector<std::vector<NForm>> realisations = {{form({1, 2}, q()), form({1, 1}, 1)},
                                                                 {extract(b(0, 1) * b(0, 2) * b(1, 3), 2), form({2, 3}, q())}};
                 for (int trial = 0; trial < 20; ++trial) {
                   FreeElement a = random_free(rng, 2, 2);
                   const auto& forms = realisations[trial % realisations.size()];
                   Element h = realize(a, forms);
                   for (Generator g : {Generator::E, Generator::F, Generator::K})
                     parts.emplace_back("trial " + std::to_string(trial), same(ctx, realize(free_act(g, a), forms), act(g, h)));
                 }
                 return all_of(parts);
               }});
  add_roundtrip(r, "quadratic", names);
  add_universal(r, "quadratic", names);
}

void add_symbolic_cubic(Registry& r) {
  const std::vector<std::string> names = {"cubic.I1", "cubic.D1", "cubic.D2", "cubic.D3", "cubic.D4", "cubic.Delta", "cubic.IDelta"};
  for (const auto& name : names) add_display(r, "cubic", name);
  r.push_back({"cubic.D1_square", "D_1 = q^37 I_1^2", [](const Context& ctx) {
                 return same(ctx, inv("cubic.D1"), inv("cubic.I1") * inv("cubic.I1") * q(37));
               }});
  r.push_back({"cubic.IDelta_combination", "I_Delta = D_1 + [2] D_2", [](const Context& ctx) {
                 return same(ctx, inv("cubic.IDelta"), inv("cubic.D1") + inv("cubic.D2") * qnum(2));
               }});
  r.push_back({"cubic.I1_on_prod123", "I_1 on q^3(01)(02)(03) is (q^{-3} - q^3)(12)(13)(23)", [](const Context& ctx) {
                 return same(ctx, realize_inv("cubic.I1", {form({1, 2, 3}, q(3))}), b(1, 2) * b(1, 3) * b(2, 3) * (q(-3) - q(3)));
               }});
  r.push_back({"cubic.I1_nonzero", "I_1 on q^3(01)(02)(03) is a nonzero multiple of (12)(13)(23)", [](const Context&) {
                 Element got = realize_inv("cubic.I1", {form({1, 2, 3}, q(3))});
                 Element t = b(1, 2) * b(1, 3) * b(2, 3);
                 const auto& [m, c] = *t.terms().begin();
                 return holds(!got.is_zero() && got == t * (got.coefficient(m) / c), "not a multiple");
               }});
  r.push_back({"cubic.degenerate", "I_1, D_1..D_4 and I_Delta vanish on q^2(01)(01)(02), q^2(01)(02)(02), (01)^3", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& [label, f] : std::vector<std::pair<std::string, NForm>>{
                          {"iij", form({1, 1, 2}, q(2))}, {"ijj", form({1, 2, 2}, q(2))}, {"iii", form({1, 1, 1}, 1)}})
                   for (const auto& name : {"cubic.I1", "cubic.D1", "cubic.D2", "cubic.D3", "cubic.D4", "cubic.IDelta"})
                     parts.emplace_back(label + " " + name, same(ctx, realize_inv(name, {f}), Element()));
                 return all_of(parts);
               }});
  r.push_back({"cubic.Delta_on_prod123", "Delta_f for f = q^3(01)(02)(03)", [](const Context& ctx) {
                 Element want = b(0, 1) * b(0, 2) * b(1, 3) * b(2, 3) * -(s(31) * qnum(2)) + b(0, 1) * b(0, 3) * b(1, 2) * b(2, 3) * (s(21) * (Scalar(1) + q(8))) -
                                b(0, 2) * b(0, 3) * b(1, 2) * b(1, 3) * (s(23) * qnum(2));
                 return same(ctx, realize(catalog("cubic.Delta"), {form({1, 2, 3}, q(3))}), want);
               }});
  r.push_back({"cubic.D_independent", "D_1, D_2, D_3, D_4 are linearly independent", [](const Context&) {
                 return holds(rank({inv("cubic.D1"), inv("cubic.D2"), inv("cubic.D3"), inv("cubic.D4")}) == 4, "dependent");
               }});
  add_roundtrip(r, "cubic", names);
  add_universal(r, "cubic", names);
}

namespace {

Element z(int which) { return z_element(which, 1, 2, 3, 4); }

struct DoubleZero {
  std::string name;
  std::vector<int> indices;
  int scale;
  Element i1;
  Element i2;
  bool d_zero;
};

/// q^{-4} - 2q^{-2} + 1 - 2q^2 + q^4.
Scalar hankel_t() { return qpoly({{-4, 1}, {-2, -2}, {0, 1}, {2, -2}, {4, 1}}); }

std::vector<DoubleZero> double_zero_table() {
  Scalar t = hankel_t();
  Scalar t2 = qpoly({{-6, -1}, {-4, -1}, {-2, 1}, {2, 1}, {4, -1}, {6, -1}});
  Scalar den = qnum(4).pow(3) * qnum(3).pow(2);
  Scalar g = qnum(2) / (qnum(3) * qnum(4));
  auto sq = [](int i, int j, int k, int l) { return b(i, j).pow(2) * b(k, l).pow(2); };
  auto cube = [](int i, int j, int k, int l) { return b(i, j).pow(3) * b(k, l).pow(3); };
  return {
      {"iijk", {1, 1, 2, 3}, 5, sq(1, 2, 1, 3) * (g * q(4)), cube(1, 2, 1, 3) * (qnum(2).pow(4) * t / den * q(9)), true},
      {"ijjk", {1, 2, 2, 3}, 5, sq(1, 2, 2, 3) * (g * q(8)), cube(1, 2, 2, 3) * (qnum(2).pow(3) * t2 / den * q(18)), false},
      {"ijkk", {1, 2, 3, 3}, 5, sq(1, 3, 2, 3) * (g * q(4)), cube(1, 3, 2, 3) * (qnum(2).pow(4) * t / den * q(9)), true},
      {"iijj", {1, 1, 2, 2}, 4, b(1, 2).pow(4) * g, b(1, 2).pow(6) * (qnum(2).pow(4) * t / den), true},
      {"iiij", {1, 1, 1, 2}, 3, Element(), Element(), true},
      {"ijjj", {1, 2, 2, 2}, 3, Element(), Element(), true},
      {"iiii", {1, 1, 1, 1}, 0, Element(), Element(), true},
  };
}

struct Realised {
  std::once_flag once;
  Element i1;
  Element i2;
};

/// I_1, I_2 realised on q^scale (0 i_1)...(0 i_4), computed once per form.
const Realised& quartic_realised(const std::vector<int>& indices, int scale) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, int>, std::unique_ptr<Realised>> cache;
  Realised* r;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{indices, scale}];
    if (!slot) slot = std::make_unique<Realised>();
    r = slot.get();
  }
  std::call_once(r->once, [&] {
    NForm f = form(indices, q(scale));
    r->i1 = realize_inv("quartic.I1", {f});
    r->i2 = realize_inv("quartic.I2", {f});
  });
  return *r;
}

/// [3][4]^3 / ([2]^5 t^2) I_2^2 - I_1^3 from the realised I_1, I_2.
Element quartic_d(const Element& i1, const Element& i2) {
  Scalar t = hankel_t();
  return i2 * i2 * (qnum(3) * qnum(4).pow(3) / (qnum(2).pow(5) * t * t)) - i1 * i1 * i1;
}

}  // namespace

void add_symbolic_quartic(Registry& r) {
  const std::vector<std::string> names = {"quartic.I1", "quartic.I2"};
  for (const auto& name : names) add_display(r, "quartic", name);
  r.push_back({"quartic.I1_generic", "I_1 on q^6(01)(02)(03)(04) in Z_1, Z_3", [](const Context& ctx) {
                 Scalar k = qpoly({{-4, -1}, {-2, 1}, {0, 2}, {2, 1}, {4, -1}});
                 Element want = (z(1) * z(1) * qnum(2) + z(3) * z(3) * qnum(2) + z(1) * z(3) * k) * (qnum(3) * qnum(4)).inverse();
                 return same(ctx, quartic_realised({1, 2, 3, 4}, 6).i1, want);
               }});
  r.push_back({"quartic.I2_generic", "I_2 on q^6(01)(02)(03)(04) in Z_1, Z_3 with a, b, c, d", [](const Context& ctx) {
                 Scalar a = q(-6) * qnum(2) * qnum(3) * qpoly({{0, 1}, {2, 1}, {4, -1}, {8, -1}, {10, 1}, {12, 1}});
                 Scalar bb = q(-12) * qpoly({{0, -2}, {4, 7}, {6, 14}, {8, 7}, {10, -8}, {12, -18}, {14, -8}, {16, 7}, {18, 14}, {20, 7}, {24, -2}});
                 Scalar c = q(-12) * qnum(2) *
                            qpoly({{0, -1}, {2, -1}, {4, 3}, {6, 6}, {8, 2}, {10, -7}, {12, -13}, {14, -7}, {16, 2}, {18, 6}, {20, 3}, {22, -1}, {24, -1}});
                 Scalar d = q(-4) * qnum(2).pow(2) * qnum(3) * qpoly({{0, 1}, {2, -2}, {4, 1}, {6, -2}, {8, 1}});
                 Scalar pre = qnum(2).pow(2) / (qnum(3).pow(3) * qnum(4).pow(3));
                 Element want = (z(1).pow(3) * a + z(1) * z(1) * z(3) * bb + z(1) * z(3) * z(3) * c + z(3).pow(3) * d) * pre;
                 return same(ctx, quartic_realised({1, 2, 3, 4}, 6).i2, want);
               }});
  for (const auto& row : double_zero_table()) {
    r.push_back({"quartic.double_zero." + row.name + ".I1", "I_1 on f_" + row.name, [row](const Context& ctx) {
                   return same(ctx, quartic_realised(row.indices, row.scale).i1, row.i1);
                 }});
    r.push_back({"quartic.double_zero." + row.name + ".I2", "I_2 on f_" + row.name, [row](const Context& ctx) {
                   return same(ctx, quartic_realised(row.indices, row.scale).i2, row.i2);
                 }});
  }
  r.push_back({"quartic.D_pattern", "D vanishes on f_iijk, f_ijkk, f_iijj, f_iiij, f_ijjj, f_iiii and not on f_ijjk", [](const Context&) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 for (const auto& row : double_zero_table()) {
                   const Realised& f = quartic_realised(row.indices, row.scale);
                   bool zero = quartic_d(f.i1, f.i2).is_zero();
                   parts.emplace_back(row.name, holds(zero == row.d_zero, row.d_zero ? "D does not vanish" : "D vanishes"));
                 }
                 return all_of(parts);
               }});
  r.push_back({"quartic.commute", "realised I_1 and I_2 commute on all eight realisations", [](const Context& ctx) {
                 std::vector<std::pair<std::string, Outcome>> parts;
                 std::vector<std::pair<std::string, const Realised*>> forms = {{"generic", &quartic_realised({1, 2, 3, 4}, 6)}};
                 for (const auto& row : double_zero_table()) forms.emplace_back(row.name, &quartic_realised(row.indices, row.scale));
                 for (const auto& [label, f] : forms) parts.emplace_back(label, same(ctx, f->i1 * f->i2, f->i2 * f->i1));
                 return all_of(parts);
               }});
  add_roundtrip(r, "quartic", names);
  add_universal(r, "quartic", names);
}

void add_configuration(Registry& r) {
  struct Setup {
    NForm f11, f22, f33, f12, f13, f23, g1, g2, g3;
  };
  auto setup = [] {
    Setup s;
    s.f11 = form({1, 1}, 1);
    s.f22 = form({2, 2}, 1);
    s.f33 = form({3, 3}, 1);
    s.f12 = form({1, 2}, q());
    s.f13 = form({1, 3}, q());
    s.f23 = form({2, 3}, q());
    const UniversalCovariant& d = catalog("twoform.Delta");
    auto bar = [&](const NForm& a, const NForm& b2) { return difference(realize_quadratic(d, {a, b2}), realize_quadratic(d, {b2, a})); };
    s.g1 = bar(s.f11, s.f23);
    s.g2 = bar(s.f22, s.f13);
    s.g3 = bar(s.f33, s.f12);
    return s;
  };
  auto I = [](const NForm& a, const NForm& b2) { return realize_inv("twoform.I1", {a, b2}); };
  auto C = [](const NForm& a, const NForm& b2, const NForm& c) { return realize_inv("threeform.combinant", {a, b2, c}); };

  r.push_back({"configuration.harmonic", "I vanishing and q^4 relations between f_{ii|jk} and f_ii, f_jk", [=](const Context& ctx) {
                 Setup s = setup();
                 Element zero;
                 return all_of({{"I(g1,f11)", same(ctx, I(s.g1, s.f11), zero)},
                                {"I(f11,g1)", same(ctx, I(s.f11, s.g1), zero)},
                                {"q^4 I(g1,f23) + I(f23,g1)", same(ctx, I(s.g1, s.f23) * q(4) + I(s.f23, s.g1), zero)},
                                {"I(g2,f22)", same(ctx, I(s.g2, s.f22), zero)},
                                {"I(f22,g2)", same(ctx, I(s.f22, s.g2), zero)},
                                {"I(g2,f13)", same(ctx, I(s.g2, s.f13), zero)},
                                {"I(f13,g2)", same(ctx, I(s.f13, s.g2), zero)},
                                {"I(g3,f33)", same(ctx, I(s.g3, s.f33), zero)},
                                {"I(f33,g3)", same(ctx, I(s.f33, s.g3), zero)},
                                {"I(g3,f12) + q^4 I(f12,g3)", same(ctx, I(s.g3, s.f12) + I(s.f12, s.g3) * q(4), zero)}});
               }});
  r.push_back({"configuration.combinant_relations", "combinant orderings: a = -b = c/q^4 = -d/q^4, two vanish, two sums vanish", [=](const Context& ctx) {
                 Setup s = setup();
                 Element a = C(s.g1, s.g3, s.g2), bb = C(s.g2, s.g1, s.g3), c = C(s.g2, s.g3, s.g1), d = C(s.g3, s.g1, s.g2);
                 Element zero;
                 return all_of({{"a = -b", same(ctx, a, -bb)},
                                {"a = c/q^4", same(ctx, a, c * q(-4))},
                                {"a = -d/q^4", same(ctx, a, d * -q(-4))},
                                {"C(g1,g2,g3)", same(ctx, C(s.g1, s.g2, s.g3), zero)},
                                {"C(g3,g2,g1)", same(ctx, C(s.g3, s.g2, s.g1), zero)},
                                {"d + c", same(ctx, d + c, zero)},
                                {"a + b", same(ctx, a + bb, zero)}});
               }});
  r.push_back({"configuration.combinant_value", "common value q^7[2]^2(q^4+1)(q^6-1)((12)(13)(23))^2", [=](const Context& ctx) {
                 Setup s = setup();
                 Element t = b(1, 2) * b(1, 3) * b(2, 3);
                 return same(ctx, C(s.g1, s.g3, s.g2), t * t * (q(7) * qnum(2).pow(2) * (q(4) + Scalar(1)) * (q(6) - Scalar(1))));
               }});
  r.push_back({"configuration.combinant_nonzero", "the common value is a nonzero multiple of ((12)(13)(23))^2", [=](const Context&) {
                 Setup s = setup();
                 Element got = C(s.g1, s.g3, s.g2);
                 Element t = b(1, 2) * b(1, 3) * b(2, 3);
                 t = t * t;
                 const auto& [m, c] = *t.terms().begin();
                 return holds(!got.is_zero() && got == t * (got.coefficient(m) / c), "not a multiple");
               }});
}

}  // namespace qinv::suites
