#pragma once

#include <json.hpp>

#include "orbitkit/laurent.hpp"
#include "orbitkit/liealg.hpp"
#include "orbitkit/nc_forms.hpp"
#include "orbitkit/scalar.hpp"
#include "orbitkit/simplicial.hpp"
#include "orbitkit/symbol.hpp"

namespace orbitkit {

using Json = nlohmann::json;

/// Scalars are strings ("1/2-3i") or JSON numbers (integers only).
ScalarQ scalar_from_json(const Json& j);
Json scalar_to_json(const ScalarQ& s);
Rational rational_from_json(const Json& j);

/// {"chart": "affR", "terms": [{"coeff": "1", "pow": {"p": 1}, "exp": {"q": "1"}}]}
Symbol symbol_from_json(const Json& j);
Json symbol_to_json(const Symbol& s);
/// Compact form {"terms":[{"c":[re,im],"p":[..],"q":[..],"exp":[..]}]}; also accepted by symbol_from_json.
Json symbol_to_compact_json(const Symbol& s);

/// {"name": .., "basis": [...], "brackets": [{"i": 0, "j": 1, "coeffs": [...]}]}
LieAlgebraPtr lie_algebra_from_json(const Json& j);
Json lie_algebra_to_json(const LieAlgebraSpec& a);

/// {"name": .., "labels": [...], "mult": [[[...]]], "unit": [...]}
FDAlgebra fd_algebra_from_json(const Json& j);

/// {"simplices": {"0": [0, 1, ...], "1": [[0, 1], ...], "2": [[0, 1, 2], ...]}}
SimplicialComplex complex_from_json(const Json& j, const std::string& name = "json");

/// {"matrix": [[entry, ...], ...]}, entry = [[exponent, coeff], ...] or a constant scalar.
LaurentMatrix laurent_matrix_from_json(const Json& j);

/// Reads a file and parses it as JSON (InvalidInput on I/O or syntax errors).
Json read_json_file(const std::string& path);

}  // namespace orbitkit
