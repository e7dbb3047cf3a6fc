#pragma once

#include "qinv/action.hpp"
#include "qinv/element.hpp"
#include "qinv/forms.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qinv {

/// Abstract coefficient A_i of the universal n-form with the given id.
struct CoeffSymbol {
  int form;
  int n;
  int i;
  friend auto operator<=>(const CoeffSymbol&, const CoeffSymbol&) = default;
};

using FreeWord = std::vector<CoeffSymbol>;

/// Element of the free algebra F_I on the coefficient symbols.
class FreeElement {
 public:
  using TermMap = std::map<FreeWord, Scalar>;

  FreeElement() = default;
  FreeElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  FreeElement(long c) : FreeElement(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static FreeElement word(FreeWord w, const Scalar& c = 1);
  static FreeElement symbol(int form, int n, int i) { return word({{form, n, i}}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const FreeWord& w) const;
  void add_term(const FreeWord& w, const Scalar& c);

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement& operator*=(const Scalar& c);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const Scalar& c) { return a *= c; }
  friend FreeElement operator*(const Scalar& c, FreeElement a) { return a *= c; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  FreeElement pow(int k) const;

  /// Identifies all forms with form 1; the degrees must agree.
  FreeElement identified() const;

  /// If *this = c * o for a scalar c, returns c.
  std::optional<Scalar> ratio_to(const FreeElement& o) const;

  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FreeElement& a, const FreeElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

std::string free_word_string(const FreeWord& w);

/// E A_i = -q^{(2i-n+2)/2}[i] A_{i-1}, F A_i = -q^{(n-2i-4)/2}[n-i] A_{i+1},
/// K A_i = q^{(n-2i)/2} A_i, extended by the twisted Leibniz rule.
/// L depends on the realisation and is rejected.
FreeElement free_act(Generator g, const FreeElement& a);

/// E I = F I = 0 and K I = I.
bool is_universal_invariant(const FreeElement& a);

/// sum_a [m;a] x^{m-a} y^a C_a; order 0 is an invariant.
struct UniversalCovariant {
  int order = 0;
  std::vector<FreeElement> components;

  const FreeElement& invariant() const { return components.at(0); }
  UniversalCovariant identified() const;
  friend bool operator==(const UniversalCovariant&, const UniversalCovariant&) = default;
};

/// The coefficient table of an m-form: K C_a = q^{(m-2a)/2} C_a and the E, F
/// relations of the form coefficients; equivalent to invariance of the form.
bool is_universal_covariant(const UniversalCovariant& u);

/// Clebsch-Gordan symbolic method. d is invariant, homogeneous of degree
/// degrees[j-1] in index j = 1..k and of some degree m in index 0. Blocks
/// x_j^a y_j^b become A^{(j)}_a / ((-1)^a q^{n^2/2 + (a-n)(1+a)}).
UniversalCovariant symbol_to_universal(const Element& d, const std::vector<int>& degrees, bool identify);
UniversalCovariant symbol_to_universal(const Element& d, int n, int k, bool identify = true);

/// Substitutes forms[id-1].coefficients[i] for A^{(id)}_i.
Element realize(const FreeElement& a, const std::vector<NForm>& forms);
/// Assembles sum_a [m;a] x_0^{m-a} y_0^a h(C_a).
Element realize(const UniversalCovariant& u, const std::vector<NForm>& forms);

/// The forms (01)^n, ..., (0k)^n.
std::vector<NForm> symbolic_realisations(const std::vector<int>& degrees);

/// realize(symbol_to_universal(d), (0j)^{n_j}) == d.
bool roundtrip_check(const Element& d, const std::vector<int>& degrees);
bool roundtrip_check(const Element& d, int n, int k);

}  // namespace qinv
