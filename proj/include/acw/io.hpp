#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "acw/pipeline.hpp"

namespace acw {

using json = nlohmann::json;

GroupSpec group_from_json(const json& j);
json group_to_json(const GroupSpec& g);
GroupSpec read_group_file(const std::string& path);

/// "r1,r2,...,rk" (whitespace tolerated).
std::string format_element(const GroupSpec& g, Index x);
Index parse_element(const GroupSpec& g, const std::string& text);
json element_to_json(const GroupSpec& g, Index x);
json elements_to_json(const GroupSpec& g, std::span<const Index> xs);

/// One element per line; blank lines and '#' comments skipped.
std::vector<Index> parse_set(const GroupSpec& g, std::istream& in);
std::vector<Index> read_set_file(const GroupSpec& g, const std::string& path);
void write_set(const GroupSpec& g, std::span<const Index> s, std::ostream& out);

/// Lines "r1,...,rk : p"; masses are normalized.
Dist parse_dist(const GroupSpec& g, std::istream& in);
Dist read_dist_file(const GroupSpec& g, const std::string& path);
void write_dist(const Dist& p, std::ostream& out);
json dist_to_json(const Dist& p);

/// {"chars": [[...], ...], "radius": delta}; members are enumerated.
BohrSetDesc bohr_from_json(const GroupSpec& g, const json& j);
BohrSetDesc read_bohr_file(const GroupSpec& g, const std::string& path);
json bohr_to_json(const BohrSetDesc& b, bool with_members = true);

json growth_to_json(const GrowthCertificate& c);
json trace_to_json(const GroupSpec& g, const TauTrace& t);
json params_to_json(const ParamChoice& p);
json progression_to_json(const ProgressionCertificate& p);
/// Schema "acw-cert/1".
json certificate_to_json(const CoveringCertificate& c);

}  // namespace acw
