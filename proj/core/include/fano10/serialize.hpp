#pragma once

#include <nlohmann/json.hpp>

#include "fano10/linear.hpp"
#include "fano10/poly.hpp"
#include "fano10/poly_matrix.hpp"

namespace fano10 {

using Json = nlohmann::ordered_json;

/// Rationals are written as decimal strings "p" or "p/q" so no precision is
/// lost; parsing also accepts JSON integers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"variables": [...], "order": "grlex", "terms": [[exponents, "coeff"], ...]}
/// with terms ascending in grlex order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"rows": r, "cols": c, "variables": [...], "entries": row-major polys}
Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

Json rational_vector_to_json(const RationalVector& v);
RationalVector rational_vector_from_json(const Json& j);
/// Accepts a nested array of rationals.
RationalMatrix rational_matrix_from_json(const Json& j);

}  // namespace fano10
