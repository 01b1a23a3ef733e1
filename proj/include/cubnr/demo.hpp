#ifndef CUBNR_DEMO_HPP
#define CUBNR_DEMO_HPP

#include <cubnr/manifest.hpp>
#include <cubnr/engine.hpp>

#include <string>

namespace cubnr {

// The built-in reference bundle x*z^2 u^3 + y^2*z v^3 + x*y^2 w^3 + f t^3
// with f = (x + y + z)^3 - 6xyz expanded.
extern const char* const kRefvManifestJson;

Manifest refv_manifest();

// The fields pinned by the golden output: locus, gamma classes, minimality,
// condition (i) verdicts, group and certificate status.
json demo_summary(const EngineResult& r, const VarSet& vars);

// Pinned golden summary for the built-in bundle.
extern const char* const kRefvGoldenSummary;

}  // namespace cubnr

#endif
