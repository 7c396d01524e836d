#ifndef NILGROWTH_REPORT_HPP
#define NILGROWTH_REPORT_HPP

#include <string>

#include "nilgrowth/concrete_group.hpp"
#include "nilgrowth/explore.hpp"
#include "nilgrowth/harmonious.hpp"
#include "nilgrowth/lie_element.hpp"
#include "nilgrowth/minima.hpp"
#include "nilgrowth/scales.hpp"
#include "nilgrowth/box_growth.hpp"

#include "json.hpp"

namespace nilgrowth {

using Json = nlohmann::json;

/// 64-bit FNV-1a of a canonical string, hex-encoded; the stable fingerprint
/// used in CSV rows.
std::string canonical_hash(const std::string& s);

/// Floating values print with 6 significant digits; exact values as "p/q".
std::string format_double(double v);

Json lie_element_to_json(const LieElement& x);
LieElement lie_element_from_json(const Json& j);

/// (index, degree, tree) rows followed by the structure table rows
/// (i, j, k, coeff).
std::string hall_basis_csv(const HallBasis& basis);
std::string zassenhaus_terms_json(unsigned step);

Json lattice_to_json(const IntegerLattice& lattice);

/// Columns: scale, rank, covolume, changed, index_from_previous.
std::string exploration_csv(const ExplorationReport& rep);
Json exploration_to_json(const ExplorationReport& rep);

Json minkowski_to_json(const MinkowskiReport& rep);

/// Columns: scale, canonical_hash, changed.
std::string scale_report_csv(const ScaleReport& rep);
Json scale_report_to_json(const ScaleReport& rep);

/// Columns: radius, size.
std::string growth_csv(const GrowthProfile& profile);
Json growth_to_json(const GrowthProfile& profile);

std::string box_growth_csv(const BoxGrowthProfile& profile);
Json box_growth_to_json(const BoxGrowthProfile& profile);

Json sandwich_to_json(const SandwichReport& rep);

/// Serializes with sorted keys and no whitespace drift; byte-stable.
std::string json_to_string(const Json& j);

/// Writes the payload; failures carry the path context.
void write_text_file(const std::string& path, const std::string& payload);

}  // namespace nilgrowth

#endif
