#pragma once

/**
 * JSON interchange. Key order is fixed, integers are unquoted, rationals are
 * "p/q" strings.
 *
 *   BundleSpec      {"n": 3, "weights": [[1,0,-1],[1,0]]}
 *   H-rep           {"dim": D, "order": "row-major-u", "ineqs": [{"a": [...], "b": int}],
 *                    "eqs": [...], "labels": [...]}   (labels optional)
 *   MinkowskiSpec   {"dim": D, "summands": [<hrep>, ...]}
 *   Character       {"n": 3, "terms": [{"exp": [...], "coeff": int}, ...]}
 */

#include "nok/demazure.hpp"
#include "nok/exact.hpp"
#include "nok/lattice.hpp"
#include "nok/minkowski.hpp"
#include "nok/polytope.hpp"
#include "nok/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nok {

using Json = nlohmann::ordered_json;

Json to_json(const BundleSpec& spec);
BundleSpec bundle_spec_from_json(const Json& json);

Json to_json(const HPolytope& polytope, const std::vector<std::string>& labels = {});
HPolytope hpolytope_from_json(const Json& json);

Json to_json(const MinkowskiSpec& spec);
MinkowskiSpec minkowski_spec_from_json(const Json& json);

Json to_json(const LaurentPolynomial& character);
LaurentPolynomial character_from_json(const Json& json);

/// Coefficients as "p/q" strings, constant term first.
Json to_json(const EhrhartPolynomial& polynomial);

Json to_json(const VerificationReport& report);
Json to_json(const CheckReport& report);

/// Aligned plain-text renderings.
std::string to_text(const HPolytope& polytope, const std::vector<std::string>& labels = {});
std::string to_text(const VerificationReport& report);
std::string to_text(const CheckReport& report);

/// Parses JSON text; malformed input or missing keys throw Errc::Parse.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace nok
