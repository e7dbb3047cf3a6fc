#pragma once

#include "qinv/element.hpp"
#include "qinv/symbolic.hpp"
#include "qinv/valgebra.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace qinv::suites {

struct Outcome {
  bool pass = true;
  std::string residual;
  std::string note;
};

struct Context {
  bool precheck = false;
  Rational point;
};

struct Identity {
  std::string id;
  std::string description;
  std::function<Outcome(const Context&)> run;
};

using Registry = std::vector<Identity>;

void add_bracket_calculus(Registry& r);
void add_polarisation(Registry& r);
void add_gordan_capelli(Registry& r);
void add_properties(Registry& r);
void add_forms(Registry& r);
void add_newton(Registry& r);
void add_symbolic_linear(Registry& r);
void add_symbolic_quadratic(Registry& r);
void add_symbolic_cubic(Registry& r);
void add_symbolic_quartic(Registry& r);
void add_configuration(Registry& r);

Outcome same(const Context& ctx, const Element& lhs, const Element& rhs);
Outcome same(const Context& ctx, const VElement& lhs, const VElement& rhs);
Outcome same(const Context& ctx, const FreeElement& lhs, const FreeElement& rhs);
Outcome same(const Scalar& lhs, const Scalar& rhs);
Outcome holds(bool ok, const std::string& what);
/// Fails with the first failing outcome, prefixed by its label.
Outcome all_of(const std::vector<std::pair<std::string, Outcome>>& parts);

inline Scalar q(int k = 1) { return Scalar::q_power(k); }
inline Scalar s(int k) { return Scalar::s_power(k); }

/// Deterministic generator seeded from an identity id.
class Random {
 public:
  explicit Random(const std::string& seed);
  int uniform(int lo, int hi);
  Scalar scalar();
  Word word(int length, int max_index);
  Element element(int terms, int length, int max_index);
  /// Combination of x_1^{m-i} y_1^i x_2^{n-j} y_2^j beta, beta in indices 3, 4.
  Element bihomogeneous(int m, int n, int beta_length, int terms = 3);
  /// Combination of reorderings of one random product of brackets.
  Element invariant(int brackets, int max_index, int terms = 3);

 private:
  std::mt19937_64 gen_;
};

}  // namespace qinv::suites
