// JSON serialization for the wire formats: rationals as "p/q" strings,
// 1-based index sets, sign vectors as strings over {+,0,-}.
#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include "hsl/arrangement.hpp"
#include "hsl/deformations.hpp"
#include "hsl/derived.hpp"
#include "hsl/feasibility.hpp"
#include "hsl/polyhedron.hpp"

namespace hsl {

using Json = nlohmann::json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j);

/// {"U": [[...], ...], "a": [...]}
Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

/// {"a": [...], "I": [...], "J": [...], "K": [...]} with 1-based indices.
Json tetrad_to_json(const Tetrad& t);
Tetrad tetrad_from_json(const Json& j);

/// {"n": int, "rows": [{"normal": [...], "rel": "LE", "rhs": "p/q"}, ...]}
Json mixed_system_to_json(const MixedSystem& sys);
MixedSystem mixed_system_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);          // 1-based support
Json circuits_to_json(const std::vector<Circuit>& cs);

Json face_count_report_to_json(const FaceCountReport& rep);

/// Comma-separated rationals, e.g. "0,1,0,1" or "0, 3/2, 0, 1".
Vec parse_rat_list(const std::string& text);

/// Configuration file: {"U": [[...]], "offsets": {name: [...]},
/// "tetrads": {name: {...}}}; offsets and tetrads optional.
struct ConfigFile {
  Mat u;
  std::map<std::string, Vec> offsets;
  std::map<std::string, Tetrad> tetrads;
};

ConfigFile config_from_json(const Json& j);
Json config_to_json(const ConfigFile& c);
ConfigFile load_config(const std::string& path);

}  // namespace hsl
