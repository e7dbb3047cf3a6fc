#pragma once

#include "qinv/element.hpp"

#include <map>
#include <vector>

namespace qinv {

/// Delta_{kl}: replaces one index-k letter by the index-l letter of the same
/// kind, summed over all positions of the PBW word, then normalizes.
/// Delta_{kk} is the Euler operator.
Element delta(int k, int l, const Element& a);

/// P_{kl} = Delta_{kl} / (n_k), applied monomial-wise; monomials of degree 0
/// in k are sent to 0.
Element polar(int k, int l, const Element& a);
Element polar_power(int k, int l, const Element& a, int times);

/// Omega-process for the index pair k < l. Every monomial must have positive
/// degree in k and l, and no index below k or between k and l.
Element omega(int k, int l, const Element& a);
/// Omega for the two lowest indices present.
Element omega(const Element& a);

struct CofactorSplit {
  Element polar_part;  // P_{lk} P_{kl} f
  Element cofactor;    // a with f = P_{lk} P_{kl} f + (kl) a
};

/// Decomposition f = P_{lk} P_{kl} f + (kl) a for the two lowest indices.
CofactorSplit extract_cofactor(int k, int l, const Element& f);
CofactorSplit extract_cofactor(const Element& f);

struct GordanCapelliTerm {
  int k;
  Scalar alpha;
  Element component;  // P_{21}^{n1-k} P_{12}^{n1-k} Omega^k f
};

struct PolarisationReport {
  int low = 0;
  int high = 0;
  int n1 = 0;
  int n2 = 0;
  std::vector<GordanCapelliTerm> terms;

  /// Sum of alpha_k (low high)^k component_k.
  Element recombine() const;
};

/// Gordan-Capelli series of an invariant with respect to its two lowest
/// indices. Throws on non-invariant or inhomogeneous input.
PolarisationReport gordan_capelli(const Element& f);

/// alpha_k = [n1;k][n2;k]/[n1+n2-k+1;k], zero for k > min(n1, n2).
Scalar gordan_capelli_coefficient(int n1, int n2, int k);

/// The two lowest indices of a nonzero element.
std::pair<int, int> two_lowest_indices(const Element& f);

}  // namespace qinv
