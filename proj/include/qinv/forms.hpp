#pragma once

#include "qinv/element.hpp"

#include <string>
#include <vector>

namespace qinv {

/// n-form x^n A_0 + [n;1] x^{n-1} y A_1 + ... + y^n A_n with x = x_0, y = y_0.
struct NForm {
  int n = 0;
  std::vector<Element> coefficients;
};

/// Sum of [n;i] x_0^{n-i} y_0^i A_i.
Element assemble(const NForm& form);

/// Unique coefficients of an n-form whose other indices are all positive.
/// Throws if f is not homogeneous of degree n in 0 or has negative indices.
NForm extract(const Element& f, int n);

/// scale * (0 i_1)(0 i_2)...(0 i_n).
Element product_form(const std::vector<int>& indices, const Scalar& scale);

struct RelationCheck {
  std::string relation;
  int i;
  bool holds;
};

/// Checks the action on the coefficients, d the common degree of the A_i:
///   L A_i = q^{d/2} A_i,  K A_i = q^{(n-2i)/2} A_i,
///   E A_i = -q^{(2i-n+2)/2} [i] A_{i-1},  F A_i = -q^{(n-2i-4)/2} [n-i] A_{i+1}.
std::vector<RelationCheck> coefficient_action_check(const NForm& form);

/// k-th polar (P_{0p})^k f of an n-form; p must not occur in f.
Element polar_form(const Element& f, int n, int p, int k);

/// Closed polar: for f = sum [n;i] A_i^- x^{n-i} y^i A_i^+ the k-th polar is
/// sum A_i^- C_i^{n,k} A_i^+ with sum_i C_i^{n,k} A_i = (0r)^{n-k} (pr)^k,
/// A_i the coefficients of (0r)^n. Requires no index of f strictly between
/// 0 and p, and p > 0.
Element polar_form_closed(const Element& f, int n, int p, int k);

/// The elements C_i^{n,k} in indices 0, p, read off from (0r)^{n-k} (pr)^k.
std::vector<Element> polar_kernel(int n, int k, int p);

struct Point {
  Element X;
  Element Y;
};

/// X, Y nonzero off index 0, equal multidegree, and
/// q^{-1/2} x_0 Y - q^{1/2} y_0 X invariant.
bool is_point(const Point& p);

/// The point (-q^{-1/2} B, q^{1/2} A) of a linear form.
Point point_of_linear_form(const NForm& form);

}  // namespace qinv
