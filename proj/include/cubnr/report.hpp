#ifndef CUBNR_REPORT_HPP
#define CUBNR_REPORT_HPP

#include <cubnr/engine.hpp>
#include <cubnr/manifest.hpp>

#include <string>

namespace cubnr {

// Machine-report fragments. Everything is strings and integers, so dumps are
// byte-identical across platforms.
json cube_class_json(const CubeClass& c);
json curve_json(const Curve& c, const VarSet& vars);
json factored_json(const FactoredFn& f, const VarSet& vars);
json symbol_json(const Symbol2& s, const VarSet& vars);
json verdict_json(const Verdict& v);
json fiber_type_json(const FiberType& t);
json locus_json(const LocusResult& l, const VarSet& vars);
json minimality_json(const MinimalityVerdict& m, const VarSet& vars);
json snc_json(const SncReport& r);
json validation_json(const ValidationReport& r);
json group_json(const HnrGroup& g);
json engine_result_json(const EngineResult& r, const VarSet& vars);
json bundle_json(const DiagonalBundle& b, const VarSet& vars);

json report_envelope(const std::string& command, const ManifestOptions& opts,
                     const VarSet& vars);

// Human-readable rendering of a machine report section.
std::string human_locus(const LocusResult& l, const VarSet& vars);
std::string human_minimality(const MinimalityVerdict& m, const VarSet& vars);
std::string human_engine_result(const EngineResult& r, const VarSet& vars);
std::string human_validation(const ValidationReport& r);

}  // namespace cubnr

#endif
