#include "nefkit/serialize.hpp"

#include <cstdint>
#include <cstdio>

namespace nefkit {

Json vecToJson(const Vec& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(x.str());
    return arr;
}

Vec vecFromJson(const Json& j, int expectDim, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": vertex is not an array");
    if (expectDim >= 0 && static_cast<int>(j.size()) != expectDim)
        throw InputError(where + ": vertex has " + std::to_string(j.size()) +
                         " coordinates, expected " + std::to_string(expectDim));
    Vec v;
    for (const Json& c : j) {
        if (!c.is_string())
            throw InputError(where + ": coordinate must be a decimal integer string");
        const std::string s = c.get<std::string>();
        try {
            v.emplace_back(s);
        } catch (const std::exception&) {
            throw InputError(where + ": '" + s + "' is not a decimal integer");
        }
        // cpp_int accepts forms we do not (hex, whitespace); insist on canonical
        if (v.back().str() != s)
            throw InputError(where + ": '" + s + "' is not a canonical decimal integer");
    }
    return v;
}

Json polytopeToJson(const LatticePolytope& p) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["dim"] = p.ambientDim;
    Json verts = Json::array();
    for (const Vec& v : p.vertices) verts.push_back(vecToJson(v));
    j["vertices"] = std::move(verts);
    return j;
}

namespace {

int readDim(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": not a JSON object");
    if (!j.contains("schemaVersion") || j["schemaVersion"] != kSchemaVersion)
        throw InputError(where + ": missing or unsupported schemaVersion (want \"1\")");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError(where + ": missing integer field 'dim'");
    int d = j["dim"].get<int>();
    if (d < 1) throw InputError(where + ": dim must be positive");
    return d;
}

}  // namespace

LatticePolytope polytopeFromJson(const Json& j) {
    const std::string where = "polytope file";
    int d = readDim(j, where);
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw InputError(where + ": missing nonempty array 'vertices'");
    std::vector<Vec> pts;
    for (const Json& v : j["vertices"]) pts.push_back(vecFromJson(v, d, where));
    return hullFromVertices(pts, d);
}

Json partitionToJson(const std::vector<LatticePolytope>& parts) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["dim"] = parts.empty() ? 0 : parts[0].ambientDim;
    Json arr = Json::array();
    for (const LatticePolytope& p : parts) {
        Json verts = Json::array();
        for (const Vec& v : p.vertices) verts.push_back(vecToJson(v));
        arr.push_back(std::move(verts));
    }
    j["parts"] = std::move(arr);
    return j;
}

std::vector<LatticePolytope> partitionFromJson(const Json& j) {
    const std::string where = "partition file";
    int d = readDim(j, where);
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty())
        throw InputError(where + ": missing nonempty array 'parts'");
    std::vector<LatticePolytope> parts;
    for (const Json& pj : j["parts"]) {
        if (!pj.is_array() || pj.empty())
            throw InputError(where + ": each part must be a nonempty vertex list");
        std::vector<Vec> pts;
        for (const Json& v : pj) pts.push_back(vecFromJson(v, d, where));
        parts.push_back(hullFromVertices(pts, d));
    }
    return parts;
}

Json parseJsonText(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(where + ": " + e.what());
    }
}

std::string dumpJson(const Json& j) { return j.dump(2) + "\n"; }

std::string inputDigest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json reportFile(const std::string& command, const std::string& inputBytes, Json results) {
    Json j;
    j["command"] = command;
    j["inputDigest"] = inputDigest(inputBytes);
    j["results"] = std::move(results);
    j["toolVersion"] = kToolVersion;
    return j;
}

}  // namespace nefkit
