// JSON file formats and canonical (byte-stable) serialization.
//
// Vertices are written as arrays of decimal integer strings so arbitrary
// precision coordinates survive any JSON reader.  All emitted objects have
// alphabetically ordered keys and lexicographically sorted vertex lists,
// so re-serialization is byte-identical.

#ifndef NEFKIT_SERIALIZE_HPP
#define NEFKIT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "nefkit/polytope.hpp"

namespace nefkit {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "nefkit 1.0.0";

Json vecToJson(const Vec& v);
Vec vecFromJson(const Json& j, int expectDim, const std::string& where);

// {"dim": d, "schemaVersion": "1", "vertices": [["0","1"], ...]}
Json polytopeToJson(const LatticePolytope& p);
LatticePolytope polytopeFromJson(const Json& j);

// {"dim": d, "parts": [[...], ...], "schemaVersion": "1"}
Json partitionToJson(const std::vector<LatticePolytope>& parts);
std::vector<LatticePolytope> partitionFromJson(const Json& j);

Json parseJsonText(const std::string& text, const std::string& where);
std::string dumpJson(const Json& j);  // canonical: sorted keys, 2-space indent

// FNV-1a 64-bit digest of the input bytes, lowercase hex.
std::string inputDigest(const std::string& bytes);

// {"command": ..., "inputDigest": ..., "results": ..., "toolVersion": ...}
Json reportFile(const std::string& command, const std::string& inputBytes, Json results);

}  // namespace nefkit

#endif
