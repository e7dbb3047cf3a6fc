#pragma once

#include "qinv/element.hpp"
#include "qinv/forms.hpp"
#include "qinv/polarisation.hpp"
#include "qinv/symbolic.hpp"
#include "qinv/valgebra.hpp"

#include "json.hpp"

namespace qinv {

using Json = nlohmann::json;

/// [p, q]; integers that do not fit in 64 bits are written as strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"exponent": [p, q], ...} with exponents of s = q^{1/2}.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {num, den}.
Json to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j);

/// [{monomial: [[i, a, b], ...], coef}, ...].
Json to_json(const Element& e);
Element element_from_json(const Json& j);

/// [{monomial: [[i, e], ...], coef}, ...].
Json to_json(const VElement& e);
VElement velement_from_json(const Json& j);

/// [{word: [[form, n, i], ...], coef}, ...].
Json to_json(const FreeElement& e);
FreeElement free_from_json(const Json& j);

/// {n, coefficients: [Element, ...]}.
Json to_json(const NForm& f);
NForm form_from_json(const Json& j);

/// [{k, alpha, component}, ...].
Json to_json(const PolarisationReport& r);

/// {order, components: [FreeElement, ...]}.
Json to_json(const UniversalCovariant& u);

}  // namespace qinv
