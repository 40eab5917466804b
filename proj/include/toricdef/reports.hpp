// JSON payloads for the command-line reports. Ray indices are 1-based and
// rationals are "p/q" strings.

#ifndef TORICDEF_REPORTS_HPP
#define TORICDEF_REPORTS_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "toricdef/deformation.hpp"
#include "toricdef/lattice_fan.hpp"
#include "toricdef/tangent.hpp"

namespace toricdef {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// 64-bit FNV-1a of the bytes, as "fnv1a64:<16 hex digits>".
std::string input_digest(const std::string& bytes);

Json to_json(const LatticeVector& v);
Json to_json(const Weight& u);
Weight weight_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const IsoClass& iso);

Json to_json(const T1Entry& entry);
Json to_json(const T1Report& report);
T1Report t1_report_from_json(const Json& j);

Json to_json(const RigidityResult& result);

Json to_json(const Interval& interval);
Interval interval_from_json(const Json& j);
Json to_json(const Slice& slice);
Json to_json(const Slice& slice, const Decomposition& d);
/// Rebuilds a decomposition from (a, lambda0) and checks the stored fields.
Decomposition decomposition_from_json(const Slice& slice, const Json& j);
Json to_json(const Slice& slice, const KSCocycle& ks);
Json to_json(const ChartData& chart);
Json to_json(const GeneralFiber& fiber);

Json make_report(const std::string& command, const std::vector<std::string>& args, const std::string& digest,
                 Json result, const std::vector<std::string>& warnings = {});

}  // namespace toricdef

#endif  // TORICDEF_REPORTS_HPP
