#ifndef NILGROWTH_HEIS_MODELS_HPP
#define NILGROWTH_HEIS_MODELS_HPP

#include <optional>

#include "nilgrowth/harmonious.hpp"
#include "nilgrowth/heis_group.hpp"

namespace nilgrowth {

/// Log coordinates (a, b, c - ab/2) of a unipotent integer matrix.
RatVec heis_log_coords(const HeisEl& g);

/// Matrix element recovered from log coordinates when the exponential has
/// integer entries; nullopt otherwise.
std::optional<HeisEl> heis_from_log_coords(const RatVec& v);

/// Group model (log coordinates + exact membership) of a finitely generated
/// subgroup of the discrete Heisenberg group.
GroupModel heis_subgroup_model(const HeisenbergSubgroup& h,
                               const std::string& name);

/// The full integer Heisenberg group as a group model.
GroupModel integer_heisenberg_model();

}  // namespace nilgrowth

#endif
