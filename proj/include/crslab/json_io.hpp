#pragma once

#include <string>

#include "crslab/crs.hpp"

namespace crslab::crs {

// {"modulus": N, "rank": k, "entries": [{"gens": [[..]], "prob": "num/den"}]}
// with gens in Howell form and entries sorted by canonical key.
std::string distribution_to_json(const SubgroupDistribution& dist, int indent = 2);
SubgroupDistribution distribution_from_json(const std::string& text);

// One sampled subgroup: {"modulus": N, "rank": k, "gens": [[..]]}.
std::string subgroup_to_json_line(const TruncSubgroup& s);

// {"n_trend": "constant"|"diverges", "n": int, "stable": [ints],
//  "growing": [ints], "maxorder_trend": "bounded"|"diverges"}.
SequenceDescriptor descriptor_from_json(const std::string& text);

}  // namespace crslab::crs
