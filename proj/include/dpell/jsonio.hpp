#pragma once

#include <json.hpp>

#include "dpell/abelian.hpp"
#include "dpell/chambers.hpp"
#include "dpell/coxcheck.hpp"
#include "dpell/graphs.hpp"
#include "dpell/polycone.hpp"

namespace dpell {

using ordered_json = nlohmann::ordered_json;

ordered_json json_of(const Vec& v);
ordered_json json_of(const std::vector<Vec>& vs);
ordered_json json_of(const FgAbelianGroup& g);
ordered_json json_of(const RationalCone& c);
ordered_json json_of(const NefDecomposition& d);
ordered_json json_of(const IntersectionGraph& g);
ordered_json json_of(const ChamberDecomposition& d);
ordered_json json_of(const HomogeneityReport& r);

} // namespace dpell
