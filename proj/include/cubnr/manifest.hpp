#ifndef CUBNR_MANIFEST_HPP
#define CUBNR_MANIFEST_HPP

#include <cubnr/bundle.hpp>

#include <json.hpp>

#include <map>
#include <string>

namespace cubnr {

using json = nlohmann::json;

struct ManifestOptions {
    GammaConvention convention = GammaConvention::LaterOverEarlier;
    bool reduce_cubes = false;
};

// Parsed bundle description:
//   variables: exactly three names
//   coefficients a, b, c, d: { "scalar": "1", "factors": [["x", 1], ...] }
//   attestations: expression text -> "geometrically-irreducible"
//   options: { "convention": ..., "reduce_cubes": ... }
struct Manifest {
    VarSet vars;
    DiagonalBundle bundle;
    std::map<std::string, std::string> attestations;
    ManifestOptions options;
};

Manifest manifest_from_json(const json& j);
Manifest load_manifest(const std::string& path);

GammaConvention convention_from_string(const std::string& s);

}  // namespace cubnr

#endif
