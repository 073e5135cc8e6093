#pragma once

#include "setlim/infratype.hpp"
#include "setlim/partition.hpp"
#include "setlim/radstrom.hpp"
#include "setlim/riemann.hpp"
#include "setlim/sets.hpp"
#include "setlim/space.hpp"

#include <json.hpp>

#include <string>

namespace setlim {

using Json = nlohmann::ordered_json;

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

Json set_to_json(const CompactSet& s);
CompactSet set_from_json(const Json& j);

Json partition_to_json(const TaggedPartition& p);
Json tag_to_json(const Tag& t);

Json space_to_json(const Space& s);
Space space_from_json(const Json& j);
/// Space spec strings: "l2:3", "l1:2", "linf:2", "lp:3/2:2", "sparse".
Space parse_space(const std::string& spec);

/// Partition spec strings: "uniform:8[:left|right|mid]", "prime:5",
/// "random:0.1:seed".
TaggedPartition parse_partition(const std::string& spec);

Json trace_to_json(const SumTrace& t);
Json estimate_to_json(const LimitEstimate& e);
Json probe_to_json(const ProbeReport& r);
Json star_to_json(const StarReport& r);
Json certificate_to_json(const EmptyCertificate& c);
Json compare_to_json(const ConvCompareResult& c);
Json infratype_to_json(const InfratypeEstimate& e);
Json support_sample_to_json(const SupportSample& s);

std::string trace_to_csv(const SumTrace& t);
std::string infratype_to_csv(const InfratypeEstimate& e);
/// (direction angle, value) rows; planar direction sets only.
std::string support_sample_to_csv(const SupportSample& s);

}  // namespace setlim
