#pragma once

#include "liftlab/behavioural.hpp"
#include "liftlab/convex_powerset.hpp"
#include "liftlab/levy_prokhorov.hpp"
#include "liftlab/liftings.hpp"
#include "liftlab/modalities.hpp"
#include "liftlab/spaces.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace liftlab {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ValidationError.
Json load_json_file(const std::string& path);

/// "p/q" strings or JSON integers.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& value);

/// {"exact": "p/q", "decimal": "..."} or, for decimals, {"decimal": "...", "digits": n}.
Json scalar_to_json(const Scalar& value, int digits = kDefaultDecimalDigits);

/// {"points": [...], "d": [[...], ...]}
PseudometricSpace space_from_json(const Json& j);
Json to_json(const PseudometricSpace& space);

/// {"points": [...], "targets": [...], "d": [[...]]}; "r" is accepted for "d".
/// Without "targets" the relation is square over "points".
FuzzyRelation relation_from_json(const Json& j);

/// {"space": <name or inline space>, "mass": {"a": "2/3", ...}}; omitted points have mass 0.
Distribution distribution_from_json(const Json& j, const std::vector<std::string>& points);
Json to_json(const Distribution& mu, const std::vector<std::string>& points);

/// {"space": ..., "set": ["a", "c"]}
PointSet point_set_from_json(const Json& j, const std::vector<std::string>& points);
Json to_json(const PointSet& set, const std::vector<std::string>& points);

/// {"space": ..., "generators": [<distribution>, ...]}
ConvexSet convex_set_from_json(const Json& j, const std::vector<std::string>& points);

/// {"kind": ..., "states": [...], "gamma": {...}}
Coalgebra coalgebra_from_json(const Json& j);

/// "expectation" | "sup" | "inf" | "generally" | "convex_sup_expectation" |
/// {"p_moment": "2", "digits": 30}
Modality modality_from_json(const Json& j);

/// Command-line spelling: a name, "p_moment:2", "p_moment:2:40", or JSON text.
Modality parse_modality(const std::string& text);

Json to_json(const FuzzyPredicate& f, const std::vector<std::string>& points);
Json to_json(const RationalMatrix& m);
Json to_json(const Coupling& c, const std::vector<std::string>& xs, const std::vector<std::string>& ys);

Json to_json(const LiftedValue& v, const std::vector<std::string>& xs, const std::vector<std::string>& ys,
             int digits, bool with_witness);
Json to_json(const HkResult& hk, const std::vector<std::string>& points);
Json to_json(const CrispPricePair& pair, const std::vector<std::string>& xs, const std::vector<std::string>& ys);
Json to_json(const DualityWitness& w, const std::vector<std::string>& xs, const std::vector<std::string>& ys);

}  // namespace liftlab
