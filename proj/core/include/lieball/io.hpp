#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieball/metric.hpp"
#include "lieball/moebius.hpp"
#include "lieball/oracles.hpp"
#include "lieball/types.hpp"

namespace lieball::io {

using nlohmann::json;

json to_json(const RealVec& v);
RealVec real_vec_from_json(const json& j);

/// {"re": [...], "im": [...]}
json to_json(const CplxPoint& z);
CplxPoint cplx_point_from_json(const json& j);

/// {"x": [...], "v": [...]}
json to_json(const TangentVector& tv);
TangentVector tangent_vector_from_json(const json& j);

/// {"center": [...], "radius_vector": [...]}
json to_json(const OrientedSphere& s);
OrientedSphere sphere_from_json(const json& j);

/// {"orthogonal_part": row-major array, "a": [...], "n": n}. Orthogonality is
/// checked again on load.
json to_json(const HyperbolicMotion& g);
HyperbolicMotion motion_from_json(const json& j);

/// {"x": ..., "v": ..., "matrix": row-major array, "dim": 2n}
json to_json(const MetricTensor& m);

/// {"suite", "n", "trials", "seed", "max_error", "pass"}
json to_json(const oracles::VerificationReport& r);
oracles::VerificationReport report_from_json(const json& j);

enum class PathFormat { kJsonLines, kCsv };

/// One sample per line: {"x", "v", "xdot", "vdot"}, or CSV with header
/// x1..xn,v1..vn,xdot1..xdotn,vdot1..vdotn.
void emit_path(const GeodesicPath& path, PathFormat format, std::ostream& out);
std::vector<GeodesicSample> read_path_json_lines(std::istream& in);

/// "a,b,c" -> real vector.
RealVec parse_real_list(std::string_view text);
/// "re,im;re,im;..." -> complex vector.
CplxPoint parse_complex_list(std::string_view text);

}  // namespace lieball::io
