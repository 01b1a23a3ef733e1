#ifndef CUBNR_SYMBOLS_HPP
#define CUBNR_SYMBOLS_HPP

#include <cubnr/function_field.hpp>

#include <map>
#include <vector>

namespace cubnr {

// Cup-product class (g, h) in H^2(K, Z/3); both entries are elements of K*,
// i.e. factored functions of total degree zero.
struct Symbol2 {
    FactoredFn g;
    FactoredFn h;

    static Symbol2 make(FactoredFn g, FactoredFn h);  // enforces degree 0
    static Symbol2 trivial() { return Symbol2{FactoredFn::one(), FactoredFn::one()}; }
};

// Tame-symbol residue along C: the class of g^{v(h)} / h^{v(g)} restricted
// to C. The sign (-1)^{v(g)v(h)} is a cube and drops out of the mod-3 class;
// residue_sign reports it separately for audit output.
// When both valuations vanish mod 3 the residue is trivial and no
// parametrization of C is needed.
CubeClass residue_codim1(const Symbol2& s, const Curve& c);
int residue_sign(const Symbol2& s, const Curve& c);  // +1 or -1

// All curves among the factors of g and h carrying a nontrivial residue.
// Curves outside the factor support are unramified and omitted.
std::vector<std::pair<Curve, CubeClass>> ramification_divisor(const Symbol2& s);

struct ReciprocityReport {
    // Per-point sums of point residues over the ramification curves through
    // the point; every sum must be 0 mod 3.
    std::map<PlanePoint, int> sums;
    bool all_zero = true;
};

// Point-level exactness check over the ramification divisor. Throws
// UNSUPPORTED_POINT when a residue is supported at irrational points.
ReciprocityReport reciprocity_check(const Symbol2& s);

// Vanishing over the fraction field of the completed local ring at the
// generic point of C: equivalent to residue triviality (the residue field
// has cohomological dimension 1).
bool is_zero_over_Kx(const Symbol2& s, const Curve& c);

// Local data of a symbol at a closed point: the factor curves through the
// point whose mod-3 exponents in (g, h) are not both zero, with the row
// (v_p(g), v_p(h)) mod 3 per prime.
struct LocalSymbolData {
    PlanePoint point;
    std::vector<Curve> primes;
    std::vector<std::array<int, 2>> rows;

    int rank_mod3() const;
};

// Preconditions (else UNSUPPORTED_LOCAL_GEOMETRY): after dropping factors
// whose exponents in both entries vanish mod 3, at most two curves pass
// through P, each smooth there, meeting transversally.
LocalSymbolData local_symbol_data(const Symbol2& s, const PlanePoint& p);

// Vanishing over the fraction field of the completed local ring at P:
// the class is zero iff the exponent matrix has rank <= 1 over Z/3.
bool is_zero_over_KP(const Symbol2& s, const PlanePoint& p);

}  // namespace cubnr

#endif
