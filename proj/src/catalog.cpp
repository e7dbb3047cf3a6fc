#include "qinv/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qinv {

namespace {

Scalar s(int k) { return Scalar::s_power(k); }
Scalar q(int k) { return Scalar::q_power(k); }
Scalar qn(int k) { return qnum(k); }

// Laurent polynomial in q from (exponent, coefficient) pairs.
Scalar qpoly(std::initializer_list<std::pair<int, long>> terms) {
  Scalar r;
  for (const auto& [e, c] : terms) r += Scalar::q_power(e, c);
  return r;
}

Element b(int i, int j) { return bracket(i, j); }

using Terms = std::vector<std::pair<Scalar, std::string>>;

FreeElement sum(const Terms& terms, int n) {
  FreeElement r;
  for (const auto& [c, w] : terms) r += display_word(w, n, c);
  return r;
}

UniversalCovariant invariant(FreeElement a) { return {0, {std::move(a)}}; }

// x^2 K + xy L + y^2 M with L = [2] C_1.
UniversalCovariant quadratic_covariant(FreeElement k, FreeElement l, FreeElement m) {
  return {2, {std::move(k), l * qn(2).inverse(), std::move(m)}};
}

Element linear_family_symbol(int n) {
  Element d(1);
  for (int t = 1; t <= n; ++t) d = d * b(t, 2 * n + 1 - t);
  return d;
}

FreeElement linear_family_display(int n) {
  // sum over i in {0,1}^n of -q^{3n(n-1)/2} (-q)^{|i|} U^{(i_1)}..U^{(i_n)} U^{(1-i_n)}..U^{(1-i_1)}
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
    Scalar c = q(3 * n * (n - 1) / 2 + ones);
    r.add_term(w, ones % 2 ? c : -c);
  }
  return r;
}

Scalar quartic_d_factor() {
  Scalar t = qpoly({{-4, -1}, {-2, 2}, {0, -1}, {2, 2}, {4, -1}});
  return qn(3) * qn(4).pow(3) / (qn(2).pow(5) * t * t);
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> e;
  Element z1 = z_element(1, 1, 2, 3, 4), z3 = z_element(3, 1, 2, 3, 4);
  e.push_back({"linear.I1", "linear form, symbol (12)", b(1, 2), {1, 1}, true});
  e.push_back({"linear.I2", "linear form, symbol (14)(23)", linear_family_symbol(2), {1, 1, 1, 1}, true});
  e.push_back({"linear.I3", "linear form, symbol (16)(25)(34)", linear_family_symbol(3), std::vector<int>(6, 1), true});
  e.push_back({"quadratic.I1", "quadratic form, symbol q^-1 (12)^2", b(1, 2).pow(2) * q(-1), {2, 2}, true});
  e.push_back({"quadratic.I2", "quadratic form, symbol -q^-4 (12)(13)(23)", b(1, 2) * b(1, 3) * b(2, 3) * -q(-4), {2, 2, 2}, true});
  e.push_back({"quadratic.I3_1", "quadratic form, symbol q^-4 Z1^2", z1 * z1 * q(-4), {2, 2, 2, 2}, true});
  e.push_back({"quadratic.I3_2", "quadratic form, symbol q^-4 Z1 Z3", z1 * z3 * q(-4), {2, 2, 2, 2}, true});
  e.push_back({"quadratic.I3_3", "quadratic form, symbol q^-4 Z3^2", z3 * z3 * q(-4), {2, 2, 2, 2}, true});
  e.push_back({"twoform.I1", "two quadratic forms, symbol q^-1 (12)^2", b(1, 2).pow(2) * q(-1), {2, 2}, false});
  e.push_back({"twoform.Delta", "two quadratic forms, covariant from (12)(01)(02)", b(1, 2) * b(0, 1) * b(0, 2), {2, 2}, false});
  e.push_back({"threeform.combinant", "three quadratic forms, symbol -q^-4 (12)(13)(23)", b(1, 2) * b(1, 3) * b(2, 3) * -q(-4), {2, 2, 2}, false});
  e.push_back({"cubic.I1", "cubic form, symbol q^-5 (12)^3", b(1, 2).pow(3) * q(-5), {3, 3}, true});
  e.push_back({"cubic.D1", "cubic form, symbol Z1^3", z1 * z1 * z1, {3, 3, 3, 3}, true});
  e.push_back({"cubic.D2", "cubic form, symbol Z1^2 Z3", z1 * z1 * z3, {3, 3, 3, 3}, true});
  e.push_back({"cubic.D3", "cubic form, symbol Z1 Z3^2", z1 * z3 * z3, {3, 3, 3, 3}, true});
  e.push_back({"cubic.D4", "cubic form, symbol Z3^3", z3 * z3 * z3, {3, 3, 3, 3}, true});
  e.push_back({"cubic.Delta", "cubic form, covariant from (12)^2 (01)(02)", b(1, 2).pow(2) * b(0, 1) * b(0, 2), {3, 3}, true});
  e.push_back({"cubic.IDelta", "cubic form, [2] M K - q^2 L L + q^2 [2] K M of Delta", std::nullopt, {}, true});
  e.push_back({"quartic.I1", "quartic form, symbol q^-6 (12)^4", b(1, 2).pow(4) * q(-6), {4, 4}, true});
  e.push_back({"quartic.I2", "quartic form, symbol q^-12 (12)^2 (13)^2 (23)^2",
               b(1, 2).pow(2) * b(1, 3).pow(2) * b(2, 3).pow(2) * q(-12), {4, 4, 4}, true});
  e.push_back({"quartic.D", "quartic form, [3][4]^3/([2]^5 t^2) I2^2 - I1^3", std::nullopt, {}, true});
  return e;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> e = build_entries();
  return e;
}

UniversalCovariant derive(const CatalogEntry& entry) {
  if (entry.symbol) return symbol_to_universal(*entry.symbol, entry.degrees, entry.identify);
  if (entry.name == "cubic.IDelta") {
    const UniversalCovariant& d = catalog("cubic.Delta");
    const FreeElement& k = d.components[0];
    FreeElement l = d.components[1] * qn(2);
    const FreeElement& m = d.components[2];
    return invariant(m * k * qn(2) - l * l * q(2) + k * m * (q(2) * qn(2)));
  }
  if (entry.name == "quartic.D") {
    const FreeElement& i1 = catalog("quartic.I1").invariant();
    const FreeElement& i2 = catalog("quartic.I2").invariant();
    return invariant(i2 * i2 * quartic_d_factor() - i1 * i1 * i1);
  }
  throw std::logic_error("catalog entry without a construction: " + entry.name);
}

}  // namespace

FreeElement display_word(const std::string& letters, int n, const Scalar& c) {
  FreeWord w;
  for (char ch : letters) {
    if (ch == '\'') {
      if (w.empty()) throw std::invalid_argument("prime without a letter");
      ++w.back().form;
      continue;
    }
    if (ch < 'A' || ch > 'Z') throw std::invalid_argument(std::string("bad display letter ") + ch);
    w.push_back({1, n, ch - 'A'});
  }
  return FreeElement::word(w, c);
}

Element z_element(int which, int i, int j, int k, int l) {
  switch (which) {
    case 1: return b(i, j) * b(k, l) * q(3);
    case 2: return b(i, k) * b(l, j) * q(2) + b(i, j) * b(k, l) * (q(4) - q(3));
    case 3: return b(i, l) * b(j, k);
  }
  throw std::invalid_argument("Z element index must be 1, 2 or 3");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : entries())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

const UniversalCovariant& catalog(const std::string& name) {
  static std::recursive_mutex mutex;
  static std::map<std::string, UniversalCovariant> cache;
  const CatalogEntry& entry = catalog_entry(name);
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, derive(entry)).first;
  return it->second;
}

std::optional<UniversalCovariant> catalog_display(const std::string& name) {
  catalog_entry(name);
  if (name == "linear.I1") return invariant(sum({{-s(-1), "BA"}, {s(1), "AB"}}, 1));
  if (name == "linear.I2") return invariant(linear_family_display(2));
  if (name == "linear.I3") return invariant(linear_family_display(3));
  if (name == "quadratic.I1") return invariant(sum({{q(-3), "CA"}, {-q(-1) * qn(2), "BB"}, {q(-1), "AC"}}, 2));
  if (name == "quadratic.I2")
    return invariant(sum({{s(-5), "ABC"},
                          {-s(-9), "ACB"},
                          {-s(-9), "BAC"},
                          {s(-9), "BCA"},
                          {s(-9), "CAB"},
                          {-s(-13), "CBA"},
                          {-(s(-7) - s(-15)), "BBB"}},
                         2));
  if (name == "quadratic.I3_1")
    return invariant(sum({{q(8), "ACAC"},
                          {-q(10) * qn(2), "ACBB"},
                          {q(6), "ACCA"},
                          {-q(10) * qn(2), "BBAC"},
                          {q(12) * qn(2).pow(2), "BBBB"},
                          {-q(8) * qn(2), "BBCA"},
                          {q(6), "CAAC"},
                          {-q(8) * qn(2), "CABB"},
                          {q(4), "CACA"}},
                         2));
  if (name == "quadratic.I3_2")
    return invariant(sum({{q(12), "ABBC"},
                          {-q(10), "ABCB"},
                          {-q(7), "ACAC"},
                          {q(8), "ACBB"},
                          {-q(10), "BABC"},
                          {q(8), "BACB"},
                          {q(8), "BBAC"},
                          {-(q(9) + q(15)), "BBBB"},
                          {q(10), "BBCA"},
                          {q(10), "BCAB"},
                          {-q(8), "BCBA"},
                          {q(10), "CABB"},
                          {-q(5), "CACA"},
                          {-q(8), "CBAB"},
                          {q(6), "CBBA"}},
                         2));
  if (name == "quadratic.I3_3")
    return invariant(sum({{q(8), "AACC"},
                          {-q(10) * qn(2), "ABBC"},
                          {q(6), "ACAC"},
                          {-q(10) * qn(2), "BACB"},
                          {q(12) * qn(2).pow(2), "BBBB"},
                          {-q(8) * qn(2), "BCAB"},
                          {q(6), "CACA"},
                          {-q(8) * qn(2), "CBBA"},
                          {q(4), "CCAA"}},
                         2));
  if (name == "twoform.I1")
    return invariant(sum({{q(-3), "CA'"}, {-(Scalar(1) + q(-2)), "BB'"}, {q(-1), "AC'"}}, 2));
  if (name == "twoform.Delta")
    return quadratic_covariant(sum({{-q(7), "BA'"}, {q(9), "AB'"}}, 2),
                               sum({{-q(7), "CA'"}, {-q(6), "BB'"}, {q(10), "BB'"}, {q(7), "AC'"}}, 2),
                               sum({{-q(7), "CB'"}, {q(9), "BC'"}}, 2));
  if (name == "threeform.combinant")
    return invariant(sum({{s(-5), "AB'C''"},
                          {-s(-9), "AC'B''"},
                          {-s(-9), "BA'C''"},
                          {s(-9), "BC'A''"},
                          {s(-9), "CA'B''"},
                          {-s(-13), "CB'A''"},
                          {-(s(-7) - s(-15)), "BB'B''"}},
                         2));
  if (name == "cubic.I1")
    return invariant(
        sum({{-s(-19), "DA"}, {s(-13), "AD"}, {qn(3) * s(-13), "CB"}, {-qn(3) * s(-11), "BC"}}, 3));
  const Scalar p8 = qpoly({{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}});
  if (name == "cubic.D1")
    return invariant(sum({{q(24), "ADAD"},       {-q(21), "ADDA"},      {-q(21), "DAAD"},
                          {q(18), "DADA"},       {-qn(3) * q(25), "ADBC"}, {qn(3) * q(24), "ADCB"},
                          {-qn(3) * q(25), "BCAD"}, {qn(3) * q(22), "BCDA"}, {qn(3) * q(22), "CBAD"},
                          {-qn(3) * q(19), "CBDA"}, {qn(3) * q(20), "DABC"}, {-qn(3) * q(19), "DACB"},
                          {p8 * q(22), "BCBC"},  {-p8 * q(21), "BCCB"},  {-p8 * q(21), "CBBC"},
                          {p8 * q(20), "CBCB"}},
                         3));
  if (name == "cubic.D2")
    return invariant(sum({{-q(19), "DADA"},
                          {-q(23), "ADAD"},
                          {-qn(2) * q(27), "ACCC"},
                          {-qn(2) * q(23), "CACC"},
                          {-qn(2) * q(25), "CCAC"},
                          {-qn(2) * q(21), "CCCA"},
                          {q(28), "ACBD"},
                          {q(24), "ACDB"},
                          {q(23) * qn(2), "ADBC"},
                          {-q(21), "ADCB"},
                          {q(23) * qn(2), "BCAD"},
                          {-q(25), "BCDA"},
                          {q(26), "BDAC"},
                          {q(22), "BDCA"},
                          {q(24), "CABD"},
                          {q(20), "CADB"},
                          {-q(21), "CBAD"},
                          {q(23) * qn(2), "CBDA"},
                          {-q(25), "DABC"},
                          {q(23) * qn(2), "DACB"},
                          {q(22), "DBAC"},
                          {q(18), "DBCA"},
                          {-qn(2) * q(27), "BBBD"},
                          {-qn(2) * q(23), "BBDB"},
                          {-qn(2) * q(25), "BDBB"},
                          {-qn(2) * q(21), "DBBB"},
                          {q(26) * qn(2).pow(2), "BBCC"},
                          {-q(21) * qpoly({{0, 1}, {2, 2}, {4, 1}, {10, 1}}), "BCBC"},
                          {q(21) * qn(2) * qpoly({{0, 1}, {8, 1}}), "BCCB"},
                          {q(21) * qn(2) * qpoly({{0, 1}, {8, 1}}), "CBBC"},
                          {-q(19) * qpoly({{0, 1}, {6, 1}, {8, 2}, {10, 1}}), "CBCB"},
                          {q(24) * qn(2).pow(2), "CCBB"}},
                         3));
  if (name == "cubic.D3")
    return invariant(sum({{q(22), "ADAD"},
                          {q(20), "DADA"},
                          {qn(2) * q(24), "ACCC"},
                          {qn(2) * q(26), "CACC"},
                          {qn(2) * q(22), "CCAC"},
                          {qn(2) * q(24), "CCCA"},
                          {q(28), "ABCD"},
                          {-q(25), "ABDC"},
                          {-q(26) * qn(2), "ACBD"},
                          {-q(21), "ADBC"},
                          {-q(25), "BACD"},
                          {q(22), "BADC"},
                          {-q(21), "BCAD"},
                          {-q(24) * qn(2), "BDAC"},
                          {-q(22) * qn(2), "CADB"},
                          {-q(25), "CBDA"},
                          {q(24), "CDAB"},
                          {-q(21), "CDBA"},
                          {-q(25), "DACB"},
                          {-q(20) * qn(2), "DBCA"},
                          {-q(21), "DCAB"},
                          {q(18), "DCBA"},
                          {qn(2) * q(24), "BBBD"},
                          {qn(2) * q(26), "BBDB"},
                          {qn(2) * q(22), "BDBB"},
                          {qn(2) * q(24), "DBBB"},
                          {-q(22) * qn(2) * qpoly({{0, 1}, {8, 1}}), "BBCC"},
                          {q(20) * qpoly({{0, 1}, {6, 1}, {8, 2}, {10, 1}}), "BCBC"},
                          {-q(25) * qn(2).pow(2), "BCCB"},
                          {-q(25) * qn(2).pow(2), "CBBC"},
                          {q(20) * qpoly({{0, 1}, {2, 2}, {4, 1}, {10, 1}}), "CBCB"},
                          {-q(20) * qn(2) * qpoly({{0, 1}, {8, 1}}), "CCBB"}},
                         3));
  if (name == "cubic.D4")
    return invariant(sum({{q(24), "AADD"},       {-q(21), "ADAD"},      {-q(21), "DADA"},
                          {q(18), "DDAA"},       {-qn(3) * q(25), "ABCD"}, {qn(3) * q(24), "ACBD"},
                          {-qn(3) * q(25), "BADC"}, {qn(3) * q(22), "BDAC"}, {qn(3) * q(22), "CADB"},
                          {-qn(3) * q(19), "CDAB"}, {qn(3) * q(20), "DBCA"}, {-qn(3) * q(19), "DCBA"},
                          {p8 * q(22), "BBCC"},  {-p8 * q(21), "BCBC"},  {-p8 * q(21), "CBCB"},
                          {p8 * q(20), "CCBB"}},
                         3));
  if (name == "cubic.Delta")
    return quadratic_covariant(
        sum({{q(9), "CA"}, {-q(12) * qn(2), "BB"}, {q(13), "AC"}}, 3),
        sum({{q(9), "DA"},
             {-qpoly({{8, -1}, {12, 1}, {14, 1}}), "CB"},
             {-qpoly({{9, 1}, {11, 1}, {15, -1}}), "BC"},
             {q(10), "AD"}},
            3),
        sum({{q(9), "DB"}, {-q(12) * qn(2), "CC"}, {q(13), "BD"}}, 3));
  if (name == "cubic.IDelta") {
    const Scalar c1 = qpoly({{20, 1}, {22, 1}, {26, -1}});
    const Scalar c2 = qpoly({{19, -1}, {23, 1}, {25, 1}});
    return invariant(sum({{-q(22), "ADAD"},
                          {-q(21), "ADDA"},
                          {-q(20), "DADA"},
                          {-q(21), "DAAD"},
                          {-q(27) * qn(2).pow(2), "ACCC"},
                          {-q(23) * qn(2).pow(2), "CACC"},
                          {-q(25) * qn(2).pow(2), "CCAC"},
                          {-q(21) * qn(2).pow(2), "CCCA"},
                          {q(28) * qn(2), "ACBD"},
                          {q(24) * qn(2), "ACDB"},
                          {c1 * q(1), "ADBC"},
                          {c1, "DABC"},
                          {c1 * q(1), "BCAD"},
                          {c1, "BCDA"},
                          {q(26) * qn(2), "BDAC"},
                          {q(22) * qn(2), "BDCA"},
                          {q(24) * qn(2), "CABD"},
                          {q(20) * qn(2), "CADB"},
                          {c2 * q(1), "CBAD"},
                          {c2, "CBDA"},
                          {c2 * q(1), "ADCB"},
                          {c2, "DACB"},
                          {q(22) * qn(2), "DBAC"},
                          {q(18) * qn(2), "DBCA"},
                          {-q(27) * qn(2).pow(2), "BBBD"},
                          {-q(23) * qn(2).pow(2), "BBDB"},
                          {-q(25) * qn(2).pow(2), "BDBB"},
                          {-q(21) * qn(2).pow(2), "DBBB"},
                          {q(26) * qn(2).pow(3), "BBCC"},
                          {q(24) * qn(2).pow(3), "CCBB"},
                          {qpoly({{20, -1}, {22, -2}, {24, -1}, {26, 2}, {28, 2}, {32, -1}}), "BCBC"},
                          {qpoly({{18, -1}, {22, 2}, {24, 2}, {26, -1}, {28, -2}, {30, -1}}), "CBCB"},
                          {qpoly({{19, 1}, {21, 1}, {23, -1}, {25, -3}, {27, -1}, {29, 1}, {31, 1}}), "CBBC"}},
                         3));
  }
  if (name == "quartic.I1")
    return invariant(sum({{q(-10), "AE"},
                          {-q(-8) * qn(4), "BD"},
                          {q(-8) * qn(3) * qn(4) / qn(2), "CC"},
                          {-q(-10) * qn(4), "DB"},
                          {q(-14), "EA"}},
                         4));
  if (name == "quartic.I2") {
    const Scalar u = qpoly({{0, 1}, {2, 2}, {4, 1}, {8, -1}, {10, -1}});
    const Scalar v = qpoly({{0, -1}, {2, -1}, {6, 1}, {8, 2}, {10, 1}});
    return invariant(sum({{q(-12), "ACE"},
                          {q(-18), "AEC"},
                          {q(-18), "CAE"},
                          {q(-16), "CEA"},
                          {q(-16), "EAC"},
                          {q(-22), "ECA"},
                          {q(-19) * u * q(2), "BCD"},
                          {q(-19) * u, "CDB"},
                          {q(-19) * u, "DBC"},
                          {q(-21) * v * q(2), "BDC"},
                          {q(-21) * v * q(2), "CBD"},
                          {q(-21) * v, "DCB"},
                          {-q(-18) * qn(2) * q(4), "BBE"},
                          {-q(-18) * qn(2) * q(2), "BEB"},
                          {-q(-18) * qn(2), "EBB"},
                          {-q(-18) * qn(2) * q(4), "ADD"},
                          {-q(-18) * qn(2) * q(2), "DAD"},
                          {-q(-18) * qn(2), "DDA"},
                          {q(-20) * qpoly({{0, 1}, {4, -1}, {6, -3}, {8, -3}, {10, -1}, {14, 1}}), "CCC"}},
                         4));
  }
  return std::nullopt;
}

}  // namespace qinv
