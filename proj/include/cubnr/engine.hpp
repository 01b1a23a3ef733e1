#ifndef CUBNR_ENGINE_HPP
#define CUBNR_ENGINE_HPP

#include <cubnr/bundle.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cubnr {

// Candidate residue vector over the three-planes components, entries in
// {-1, 0, 1}.
struct HnrVector {
    std::vector<int> a;

    bool is_zero() const;
    bool operator==(const HnrVector&) const = default;
    bool operator<(const HnrVector& o) const { return a < o.a; }
    std::string to_string() const;  // "(1,1,-1)"
};

struct Verdict {
    enum class S { Yes, No, Unknown } s = S::Unknown;
    std::string reason;  // witness for No, blocker for Unknown

    static Verdict yes() { return {S::Yes, ""}; }
    static Verdict no(std::string r) { return {S::No, std::move(r)}; }
    static Verdict unknown(std::string r) { return {S::Unknown, std::move(r)}; }
};
std::string to_string(Verdict::S s);

// Local non-minimality over the completion at the generic point of the
// component: a Severi-Brauer normal form with nonvanishing class gives Yes,
// anything else stays Unknown (the criterion is sufficient, not necessary).
Verdict condition_i(const DiagonalBundle& b, const LocusComponent& comp,
                    SbResult* sb_out = nullptr);

// Precomputed point-level data for condition (ii) over a fixed locus.
class GroupComputation {
public:
    GroupComputation(DiagonalBundle b, LocusResult locus);

    const LocusResult& locus() const { return locus_; }
    const std::vector<Verdict>& condition_i_verdicts() const { return cond_i_; }
    const std::vector<SbResult>& condition_i_results() const { return cond_i_sb_; }

    // Per-point sums of a_i * residue_P(gamma_i) must vanish, and every
    // crossing with opposite nonzero residues needs a local Severi-Brauer
    // normal form over K_P.
    Verdict condition_ii(const HnrVector& v);

    // condition (i) for every touched component plus condition (ii).
    Verdict classify(const HnrVector& v);

    // Relevant points (divisor supports of the gamma classes).
    struct PointInfo {
        PlanePoint p;
        std::vector<std::pair<int, int>> residues;  // (component, residue of gamma_i at p)
    };
    const std::vector<PointInfo>& points() const { return points_; }

private:
    const SbResult& kp_result(const PlanePoint& p);

    DiagonalBundle bundle_;
    LocusResult locus_;
    std::vector<Verdict> cond_i_;
    std::vector<SbResult> cond_i_sb_;
    std::vector<PointInfo> points_;
    std::vector<std::string> component_blockers_;  // irrational support, per component
    std::map<PlanePoint, SbResult> kp_cache_;
};

struct HnrGroup {
    std::vector<HnrVector> proven;      // canonical order, contains the zero vector
    std::vector<HnrVector> undecided;
    std::vector<HnrVector> generators;  // minimal generating set of the proven subgroup
    std::size_t order = 1;
};

struct Certificate {
    bool attached = false;
    std::string conclusion;
    std::vector<std::pair<std::string, std::string>> checklist;  // hypothesis -> status
};

struct MemberInfo {
    HnrVector v;
    std::optional<Symbol2> witness;
};

struct EngineResult {
    LocusResult locus;
    MinimalityVerdict minimality;
    SncReport snc;
    std::vector<Verdict> cond_i;
    std::vector<SbResult> cond_i_sb;
    HnrGroup group;
    std::vector<MemberInfo> members;  // proven, with optional symbol witnesses
    std::vector<std::pair<HnrVector, std::string>> undecided;
    Certificate certificate;
};

// Full enumeration per the combinatorial formula. Throws Failure(Hypothesis)
// when the generic fibre is not provably minimal, a fibre over a
// codimension-1 point is non-reduced, or the locus is not SNC; throws
// Failure(Unsupported) past the enumeration bound (n > 20) or on
// unverifiable geometry; throws Failure(Input) on bundle invariant
// violations.
EngineResult compute_group(const DiagonalBundle& b,
                           GammaConvention conv = GammaConvention::LaterOverEarlier);

// Searches pairs of monomials in the coefficient factor curves with
// exponents in {-2..2} whose residues reproduce gamma_i^{a_i} on every
// component and vanish along every other factor curve. Absence of a witness
// is a legitimate outcome.
std::optional<Symbol2> symbol_witness(const DiagonalBundle& b, const LocusResult& locus,
                                      const HnrVector& v);

}  // namespace cubnr

#endif
