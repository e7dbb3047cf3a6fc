#pragma once

#include "qinv/symbolic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qinv {

struct CatalogEntry {
  std::string name;
  std::string description;
  /// Generating symbol, empty for entries combined from other entries.
  std::optional<Element> symbol;
  std::vector<int> degrees;
  bool identify = true;
};

std::vector<std::string> catalog_names();
const CatalogEntry& catalog_entry(const std::string& name);

/// The universal invariant or covariant, derived from its symbol (or from
/// other entries). Cached; throws on an unknown name.
const UniversalCovariant& catalog(const std::string& name);

/// The printed coefficient list in component form, if the entry has one.
std::optional<UniversalCovariant> catalog_display(const std::string& name);

/// Words of the printed displays: letters A, B, C, ... for A_0, A_1, ...,
/// each followed by primes selecting the form (none = form 1).
FreeElement display_word(const std::string& letters, int n, const Scalar& c = 1);

/// Z_1 = q^3 (ij)(kl), Z_2 = q^2 (ik)(lj) + (q^4 - q^3)(ij)(kl), Z_3 = (il)(jk).
Element z_element(int which, int i, int j, int k, int l);

}  // namespace qinv
