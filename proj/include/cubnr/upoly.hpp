#ifndef CUBNR_UPOLY_HPP
#define CUBNR_UPOLY_HPP

#include <cubnr/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cubnr {

// Dense univariate polynomial over the rationals, lowest degree first.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (represented by an empty coefficient vector).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rational& c);
    static UPoly monomial(int degree, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly operator+(const UPoly&) const;
    UPoly operator-(const UPoly&) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly&) const;
    UPoly operator*(const Rational&) const;

    UPoly derivative() const;
    Rational eval(const Rational& x) const;

    UPoly monic() const;  // precondition: nonzero

    bool operator==(const UPoly&) const = default;

    // Canonical text form in the given parameter name, e.g. "t^2 - t + 1".
    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);

// Exact quotient; throws Failure(Input, "NOT_DIVISIBLE") on nonzero remainder.
UPoly exact_div(const UPoly& a, const UPoly& b);

// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct SquarefreeDecomp {
    Rational content;  // scalar such that content * prod(parts^mult) == input
    std::vector<std::pair<UPoly, int>> parts;  // monic, squarefree, pairwise coprime
};

// Yun's algorithm (characteristic zero). Input must be nonzero.
SquarefreeDecomp yun_squarefree(const UPoly& u);

struct RationalRoots {
    std::vector<Rational> roots;  // all rational roots (each simple in a squarefree input)
    UPoly residual;               // rootless cofactor (constant iff the input splits over Q)
};

// Complete rational-root extraction via the rational root theorem.
// Throws Failure(Unsupported) if the integer divisor enumeration would
// overflow the exact search bounds (coefficients beyond 64-bit magnitude).
RationalRoots rational_roots(const UPoly& u);

}  // namespace cubnr

#endif
