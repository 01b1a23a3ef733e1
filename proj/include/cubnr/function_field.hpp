#ifndef CUBNR_FUNCTION_FIELD_HPP
#define CUBNR_FUNCTION_FIELD_HPP

#include <cubnr/hpoly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubnr {

// Closed point of the plane with rational coordinates, normalized so the
// first nonzero coordinate is 1.
struct PlanePoint {
    std::array<Rational, 3> v;

    static PlanePoint make(const Rational& a, const Rational& b, const Rational& c);
    bool operator==(const PlanePoint&) const = default;
    bool operator<(const PlanePoint& o) const { return v < o.v; }
    std::string to_string() const;  // "[0:0:1]"
};

enum class IrredStatus { ProvenLine, ProvenConic, Attested };
std::string to_string(IrredStatus s);

// Irreducible plane curve: normalized squarefree defining polynomial plus,
// when available, a rational parametrization (always for lines, for conics
// with a small rational point).
class Curve {
public:
    static Curve from_poly(const HPoly& f, bool attested_irreducible);
    static Curve line(const HPoly& f);
    static Curve conic(const HPoly& f);
    static Curve attested(const HPoly& f);
    static Curve coordinate_line(int var) { return line(HPoly::variable(var)); }

    const HPoly& poly() const { return f_; }
    int degree() const { return f_.degree(); }
    IrredStatus status() const { return status_; }
    bool parametrizable() const { return param_.has_value(); }
    const CurveParam& param() const;  // throws UNSUPPORTED_CURVE

    bool contains(const PlanePoint& p) const;
    std::array<Rational, 3> gradient(const PlanePoint& p) const;
    bool smooth_at(const PlanePoint& p) const;

    PlanePoint point_at(const Rational& s, const Rational& t) const;
    // Projective parameter [s:t] of a point on the curve; throws
    // POINT_NOT_ON_CURVE. The point at infinity of the parametrization
    // is the one with t = 0.
    std::pair<Rational, Rational> param_of_point(const PlanePoint& p) const;

    bool operator==(const Curve& o) const { return f_ == o.f_; }
    bool operator<(const Curve& o) const { return f_ < o.f_; }
    std::string name(const VarSet& vars = VarSet{}) const { return f_.to_string(vars); }

private:
    Curve(HPoly f, IrredStatus s, std::optional<CurveParam> p)
        : f_(std::move(f)), status_(s), param_(std::move(p)) {}
    HPoly f_;
    IrredStatus status_;
    std::optional<CurveParam> param_;
    std::optional<PlanePoint> conic_base_;  // stereographic center, conics only
    friend class CubeClassOps;
};

// Element of K* (or a homogeneous form) as scalar times a product of
// attested-irreducible curve polynomials with integer exponents.
// Invariants: nonzero scalar, nonzero exponents, curves pairwise distinct
// (construction refutes attestations when two factors share a divisor).
class FactoredFn {
public:
    FactoredFn() : scalar_(1) {}
    static FactoredFn one() { return FactoredFn(); }
    static FactoredFn from_parts(const Rational& scalar,
                                 std::vector<std::pair<Curve, int>> factors);
    static FactoredFn of_curve(const Curve& c, int exponent = 1);

    const Rational& scalar() const { return scalar_; }
    const std::vector<std::pair<Curve, int>>& factors() const { return factors_; }
    bool is_constant() const { return factors_.empty(); }
    int total_degree() const;

    int valuation(const Curve& c) const;

    FactoredFn operator*(const FactoredFn& o) const;
    FactoredFn inv() const;
    FactoredFn pow(int e) const;

    std::string to_string(const VarSet& vars = VarSet{}) const;

private:
    Rational scalar_;
    std::vector<std::pair<Curve, int>> factors_;  // sorted by curve
    static FactoredFn merged(Rational scalar, std::vector<std::pair<Curve, int>> factors);
};

// Class in kappa(C)*/(kappa(C)*)^3 for a parametrized rational curve C, in
// canonical divisor form: pairwise-coprime monic squarefree parameter
// polynomials with exponents in {1,2}, plus the exponent of the point at
// infinity of the parametrization. The degree-weighted exponent sum is 0
// mod 3 (principal divisors on a genus-0 curve have degree 0).
class CubeClass {
public:
    static CubeClass identity(const Curve& carrier);
    static CubeClass from_divisor(const Curve& carrier,
                                  std::vector<std::pair<UPoly, int>> finite, int infinity);

    const Curve& carrier() const { return carrier_; }
    const std::vector<std::pair<UPoly, int>>& finite_part() const { return finite_; }
    int infinity_exponent() const { return inf_; }

    bool is_trivial() const { return finite_.empty() && inf_ == 0; }
    CubeClass mul(const CubeClass& o) const;  // throws CARRIER_MISMATCH
    CubeClass inv() const;
    CubeClass pow(int e) const;
    bool equals(const CubeClass& o) const { return mul(o.inv()).is_trivial(); }

    std::string to_string() const;

private:
    explicit CubeClass(Curve carrier) : carrier_(std::move(carrier)) {}
    Curve carrier_;
    std::vector<std::pair<UPoly, int>> finite_;
    int inf_ = 0;
};

// ---- operations -----------------------------------------------------------

inline int valuation(const FactoredFn& g, const Curve& c) { return g.valuation(c); }

// Cube class on C of g / pi^{v_C(g)}, where pi is the defining polynomial of
// C dehomogenized in a coordinate chart avoiding C. The total degree of g
// must be divisible by 3 (otherwise the class would depend on the chart).
// chart_var, when given, overrides the canonical chart choice (tests use it
// to verify chart independence).
CubeClass residue_unit(const FactoredFn& g, const Curve& c,
                       std::optional<int> chart_var = std::nullopt);

// True iff every factor exponent is divisible by 3; constants count as cubes
// (the coefficient field is algebraically closed in the geometric model).
bool is_cube_in_K(const FactoredFn& g);

// Cube test over the completed local field at the generic point of C.
bool is_cube_in_Kx(const FactoredFn& g, const Curve& c);

// Cube test over the fraction field of the completed local ring at P.
// Factors with exponent not divisible by 3 passing through P must be smooth
// there; otherwise UNSUPPORTED_LOCAL_GEOMETRY.
bool is_cube_in_KP(const FactoredFn& g, const PlanePoint& p);

// power * (order of vanishing of alpha at P) mod 3, in {0,1,2}.
// Throws POINT_NOT_ON_CURVE if P is not on the carrier.
int point_residue(const CubeClass& alpha, const PlanePoint& p, int power);

struct SupportPoint {
    PlanePoint point;
    int exponent;  // in {1,2}
};

struct SupportInfo {
    std::vector<SupportPoint> points;
    std::vector<UPoly> irrational;  // nonconstant rootless cofactors, if any
    bool complete() const { return irrational.empty(); }
};

// Rational points of the divisor support (finite roots plus the point at
// infinity when its exponent is nonzero).
SupportInfo support_points(const CubeClass& alpha);

}  // namespace cubnr

#endif
