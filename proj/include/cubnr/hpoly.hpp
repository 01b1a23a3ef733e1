#ifndef CUBNR_HPOLY_HPP
#define CUBNR_HPOLY_HPP

#include <cubnr/rational.hpp>
#include <cubnr/upoly.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace cubnr {

// Names of the three plane coordinates; fixed per run (default x, y, z).
struct VarSet {
    std::array<std::string, 3> names{"x", "y", "z"};
};

using Expt = std::array<int, 3>;  // exponent triple (i, j, k), i+j+k = degree

// Graded lexicographic order with x > y > z, highest first. Within a fixed
// degree this is plain descending lex on the exponent triples.
struct GrlexDesc {
    bool operator()(const Expt& a, const Expt& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        return a > b;
    }
};

// Homogeneous polynomial in three variables over the rationals.
// Invariants: every stored exponent triple sums to the declared degree,
// no zero coefficients are stored, terms iterate in canonical order.
// The zero polynomial is the empty-term value (stored degree 0).
class HPoly {
public:
    using TermMap = std::map<Expt, Rational, GrlexDesc>;

    HPoly() = default;
    static HPoly zero() { return HPoly(); }
    static HPoly constant(const Rational& c);
    static HPoly variable(int idx);  // 0 -> x, 1 -> y, 2 -> z
    static HPoly monomial(const Expt& e, const Rational& c);
    static HPoly from_terms(int degree, TermMap terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return deg_ == 0; }
    int degree() const { return deg_; }
    const TermMap& terms() const { return terms_; }
    const Rational& leading_coeff() const;  // first term in canonical order

    HPoly operator-() const;
    HPoly operator*(const HPoly&) const;
    HPoly operator*(const Rational&) const;
    bool operator==(const HPoly&) const = default;
    bool operator<(const HPoly&) const;  // canonical order, for use as map key

    HPoly pow(int e) const;  // e >= 0
    HPoly derivative(int var) const;
    Rational eval(const std::array<Rational, 3>& p) const;
    int valuation_in_var(int var) const;  // min exponent of the variable; 0 for zero poly

    // Primitive integer coefficients, first coefficient in canonical order
    // positive. Zero stays zero.
    HPoly normalized() const;
    bool is_normalized() const;

    std::string to_string(const VarSet& vars = VarSet{}) const;

private:
    int deg_ = 0;
    TermMap terms_;
};

// Sum; throws Failure(Input, "DEGREE_MISMATCH") if both are nonzero with
// different degrees.
HPoly add(const HPoly& p, const HPoly& q);
inline HPoly sub(const HPoly& p, const HPoly& q) { return add(p, -q); }

// Exact quotient r with q*r == p; throws "NOT_DIVISIBLE" if none exists.
// q must be nonzero.
HPoly exact_div(const HPoly& p, const HPoly& q);

bool divides(const HPoly& q, const HPoly& p);

// A gcd, normalized (primitive, positive leading coefficient). Not both zero.
HPoly gcd(const HPoly& p, const HPoly& q);

bool is_squarefree(const HPoly& p);  // gcd with all partials is constant

// ---- restriction to parametrized rational curves -------------------------

// Binary form of fixed degree in the parameters [s : t];
// c[i] = coefficient of s^i t^(deg-i).
struct BinForm {
    int deg = 0;
    std::vector<Rational> c;  // size deg+1

    static BinForm linear(const Rational& cs, const Rational& ct);  // cs*s + ct*t
    bool is_zero() const;
    BinForm operator*(const BinForm&) const;
    BinForm operator+(const BinForm&) const;
    BinForm operator*(const Rational&) const;
    BinForm pow(int e) const;
};

// Rational parametrization [s:t] -> [X(s,t) : Y(s,t) : Z(s,t)] of a plane
// curve; coords share a common degree (1 for lines, 2 for conics).
struct CurveParam {
    int deg = 1;
    std::array<BinForm, 3> coords;

    std::array<Rational, 3> eval(const Rational& s, const Rational& t) const;
};

struct Restriction {
    UPoly finite;   // r(lambda) = R(lambda, 1) in the chart t = 1
    int inf_order;  // vanishing order of R at [1:0], i.e. the degree drop
};

// Substitute the parametrization into p and dehomogenize at t = 1.
// Throws "RESTRICTION_ZERO" if the curve divides p.
Restriction restrict_to_curve(const HPoly& p, const CurveParam& L);

}  // namespace cubnr

#endif
