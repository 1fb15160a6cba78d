#pragma once

#include <json.hpp>

#include "quadric/analysis.hpp"
#include "quadric/reduce.hpp"

namespace quadric {

using Json = nlohmann::ordered_json;

/// `[a, b, c]`, or the string "-inf".
Json to_json(const TriDegree& d);
Json to_json(const Tri& t);
Json to_json(const ParachuteReport& r);
Json to_json(const std::optional<LeadingRelation>& r);
Json to_json(const Obstruction& o);
Json to_json(const CoordinateReduction& r);
Json to_json(const ElementarySearch& s);
Json to_json(const ReductionStep& s);
Json to_json(const Decomposition& d);
Json to_json(const WildCertificate& c);
Json to_json(const DecompositionResult& r);
Json to_json(const Autom& F);

}  // namespace quadric
