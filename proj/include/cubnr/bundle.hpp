#ifndef CUBNR_BUNDLE_HPP
#define CUBNR_BUNDLE_HPP

#include <cubnr/symbols.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cubnr {

// Diagonal cubic surface bundle a*u^3 + b*v^3 + c*w^3 + d*t^3 = 0 over the
// plane. Coefficients are nonzero polynomials in factored form with a shared
// total degree and trivial common divisor.
struct DiagonalBundle {
    std::array<FactoredFn, 4> coeff;  // order (a, b, c, d)

    int common_degree() const { return coeff[0].total_degree(); }
    static const char* position_name(int i) {
        constexpr const char* names[4] = {"a", "b", "c", "d"};
        return names[i];
    }
};

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> violations;
    // Generic-fiber smoothness holds for every diagonal cubic with nonzero
    // coefficients away from characteristic 3; recorded with that reason.
    std::string smoothness =
        "PASS: diagonal cubic surface with four nonzero coefficients; the generic fibre is "
        "smooth in characteristic 0";
};

ValidationReport validate(const DiagonalBundle& b);

enum class FiberKind { Smooth, Cone, ThreePlanes, SplitPlanes, NonReduced };
std::string to_string(FiberKind k);

enum class GammaConvention { LaterOverEarlier, EarlierOverLater };
std::string to_string(GammaConvention c);

struct FiberType {
    FiberKind kind;
    std::vector<int> unit_positions;   // coefficient positions with valuation 0
    std::optional<CubeClass> gamma;    // three-planes / split-planes only
};

// Classification over the generic point of C by the multiset of coefficient
// valuations: 4 units -> smooth, 3 -> cone, 2 -> three planes with
// gamma = class of the unit-coefficient ratio (trivial gamma -> split),
// 1 -> non-reduced triple plane. 0 cannot happen when gcd(a,b,c,d) = 1.
FiberType fiber_type(const DiagonalBundle& b, const Curve& c,
                     GammaConvention conv = GammaConvention::LaterOverEarlier);

struct LocusComponent {
    Curve curve;
    CubeClass gamma;
    std::array<int, 2> unit_positions;
};

struct DiscriminantEntry {
    Curve curve;
    FiberType type;
};

struct LocusResult {
    std::vector<LocusComponent> components;      // the three-planes locus, canonical order
    std::vector<DiscriminantEntry> discriminant; // every component of V(abcd) with its type
    std::vector<Curve> nonreduced;               // reducedness failures
};

LocusResult three_planes_locus(const DiagonalBundle& b,
                               GammaConvention conv = GammaConvention::LaterOverEarlier);

struct SncReport {
    bool pass = true;
    std::string failure;
    std::optional<PlanePoint> witness;
};

// Simple normal crossings check: smooth components, pairwise transverse,
// no three through a common point. Throws UNSUPPORTED for unverifiable
// geometry (degree >= 3 components, irrational intersections of conics).
SncReport snc_check(const std::vector<Curve>& curves);

struct LocalSite {
    enum class Kind { GlobalK, LocalKx, LocalKP } kind;
    std::optional<Curve> curve;      // LocalKx
    std::optional<PlanePoint> point; // LocalKP

    static LocalSite global() { return {Kind::GlobalK, std::nullopt, std::nullopt}; }
    static LocalSite at_curve(Curve c) { return {Kind::LocalKx, std::move(c), std::nullopt}; }
    static LocalSite at_point(PlanePoint p) { return {Kind::LocalKP, std::nullopt, std::move(p)}; }
    std::string to_string(const VarSet& vars = VarSet{}) const;
};

// Severi-Brauer normal-form detection over K, K_x or K_P: searches the three
// position pairings for c_i*c_j congruent to c_k*c_l modulo cubes of the
// field; on a match the surface is isomorphic over the field to
// A u^3 + B v^3 + AB w^3 + t^3 = 0 with (A, B) = (c_i/c_l, c_j/c_l).
// yes requires the class (A, B) to be nonzero over the field.
struct SbResult {
    bool yes = false;
    std::optional<Symbol2> symbol;
    std::array<int, 4> pairing{-1, -1, -1, -1};  // (i, j, k, l) on a match
    std::string detail;
};

SbResult sb_normal_form_over(const DiagonalBundle& b, const LocalSite& site);

struct MinimalityVerdict {
    enum class Kind { Minimal, SbBirational, Unknown } kind = Kind::Unknown;
    std::optional<Symbol2> sb_witness;
    std::array<int, 4> labeling{-1, -1, -1, -1};  // positions of (a', b', c', f') when minimal
    std::vector<std::pair<std::string, bool>> segre_elements;  // (name, is_cube)
    std::string detail;
};
std::string to_string(MinimalityVerdict::Kind k);

// Segre-type minimality: a global Severi-Brauer normal form contradicts
// minimality; otherwise a labeling with c' = a'b' modulo cubes and all six
// elements a', b', a'b', f', a'f', b'f' non-cubes proves the generic fibre
// minimal. Anything else stays undecided.
MinimalityVerdict segre_minimality(const DiagonalBundle& b);

struct ReduceCubesResult {
    DiagonalBundle bundle;
    bool changed = false;
    std::vector<std::string> notes;
};

// Strips cube factors from each coefficient (a K-isomorphic model) and
// restores the shared degree by padding with cubes of fresh lines, one
// distinct line per padded coefficient so every new discriminant component
// is a cone.
ReduceCubesResult reduce_cubes(const DiagonalBundle& b);

}  // namespace cubnr

#endif
