#pragma once

#include <json.hpp>
#include <string>

#include "rtq/lfd.hpp"
#include "rtq/quiver.hpp"
#include "rtq/roots.hpp"
#include "rtq/tree.hpp"

namespace rtq {

using json = nlohmann::json;

json tree_to_json(const WeightedTree& t);
WeightedTree tree_from_json(const json& j);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const json& j);

json report_to_json(const RationalityReport& r);
json rootset_to_json(const RootSet& rs, bool positive_only);
json certificate_to_json(const LfdCertificate& c);
json trail_to_json(const ReductionTrail& t);

/// Graphviz rendering: vertices of weight >= 3 as boxes, weight 2 as circles;
/// divisor coefficients become labels when supplied.
std::string tree_to_dot(const WeightedTree& t, const Divisor* divisor = nullptr);
std::string quiver_to_dot(const Quiver& q, const DimensionVector* dims = nullptr);

}  // namespace rtq
