#include <cubnr/symbols.hpp>

#include <cubnr/errors.hpp>

#include <algorithm>
#include <set>

namespace cubnr {

namespace {

int mod3(long long e) {
    int r = static_cast<int>(e % 3);
    return r < 0 ? r + 3 : r;
}

}  // namespace

Symbol2 Symbol2::make(FactoredFn g, FactoredFn h) {
    if (g.total_degree() != 0 || h.total_degree() != 0)
        fail_input("INVALID_SYMBOL",
                   "symbol entries must have total degree 0 (elements of the function field)");
    return Symbol2{std::move(g), std::move(h)};
}

CubeClass residue_codim1(const Symbol2& s, const Curve& c) {
    int m = s.g.valuation(c);
    int n = s.h.valuation(c);
    if (m % 3 == 0 && n % 3 == 0) return CubeClass::identity(c);
    // g^{v(h)} h^{-v(g)} is a unit along C; its restriction is the residue.
    FactoredFn unit = s.g.pow(n) * s.h.pow(-m);
    return residue_unit(unit, c);
}

int residue_sign(const Symbol2& s, const Curve& c) {
    long long m = s.g.valuation(c), n = s.h.valuation(c);
    return (m * n) % 2 == 0 ? 1 : -1;
}

std::vector<std::pair<Curve, CubeClass>> ramification_divisor(const Symbol2& s) {
    std::set<Curve> support;
    for (const auto& [c, e] : s.g.factors()) support.insert(c);
    for (const auto& [c, e] : s.h.factors()) support.insert(c);
    std::vector<std::pair<Curve, CubeClass>> out;
    for (const Curve& c : support) {
        CubeClass r = residue_codim1(s, c);
        if (!r.is_trivial()) out.emplace_back(c, std::move(r));
    }
    return out;
}

ReciprocityReport reciprocity_check(const Symbol2& s) {
    auto ram = ramification_divisor(s);
    ReciprocityReport out;
    std::set<PlanePoint> points;
    for (const auto& [c, res] : ram) {
        SupportInfo info = support_points(res);
        if (!info.complete())
            fail_unsupported("UNSUPPORTED_POINT",
                             "residue along " + c.poly().to_string() +
                                 " is supported at irrational points (" +
                                 info.irrational.front().to_string() + ")");
        for (const auto& sp : info.points) points.insert(sp.point);
    }
    for (const PlanePoint& p : points) {
        long long sum = 0;
        for (const auto& [c, res] : ram)
            if (c.contains(p)) sum += point_residue(res, p, 1);
        int v = mod3(sum);
        out.sums[p] = v;
        if (v != 0) out.all_zero = false;
    }
    return out;
}

bool is_zero_over_Kx(const Symbol2& s, const Curve& c) {
    return residue_codim1(s, c).is_trivial();
}

int LocalSymbolData::rank_mod3() const {
    // rank over Z/3 of an n x 2 matrix
    std::vector<std::array<int, 2>> nz;
    for (const auto& r : rows)
        if (r[0] != 0 || r[1] != 0) nz.push_back(r);
    if (nz.empty()) return 0;
    for (size_t i = 0; i < nz.size(); ++i)
        for (size_t j = i + 1; j < nz.size(); ++j) {
            int det = mod3(static_cast<long long>(nz[i][0]) * nz[j][1] -
                           static_cast<long long>(nz[i][1]) * nz[j][0]);
            if (det != 0) return 2;
        }
    return 1;
}

LocalSymbolData local_symbol_data(const Symbol2& s, const PlanePoint& p) {
    std::set<Curve> support;
    for (const auto& [c, e] : s.g.factors()) support.insert(c);
    for (const auto& [c, e] : s.h.factors()) support.insert(c);

    LocalSymbolData out;
    out.point = p;
    for (const Curve& c : support) {
        int vg = mod3(s.g.valuation(c));
        int vh = mod3(s.h.valuation(c));
        if (vg == 0 && vh == 0) continue;  // contributes a cube, no local prime
        if (!c.contains(p)) continue;
        if (!c.smooth_at(p))
            fail_unsupported("UNSUPPORTED_LOCAL_GEOMETRY",
                             "factor " + c.poly().to_string() + " is singular at " +
                                 p.to_string());
        out.primes.push_back(c);
        out.rows.push_back({vg, vh});
    }
    if (out.primes.size() > 2)
        fail_unsupported("UNSUPPORTED_LOCAL_GEOMETRY",
                         "more than two branches through " + p.to_string() +
                             "; the support is not a simple normal crossings divisor there");
    if (out.primes.size() == 2) {
        auto g1 = out.primes[0].gradient(p);
        auto g2 = out.primes[1].gradient(p);
        bool proportional = (g1[0] * g2[1] - g1[1] * g2[0] == 0) &&
                            (g1[0] * g2[2] - g1[2] * g2[0] == 0) &&
                            (g1[1] * g2[2] - g1[2] * g2[1] == 0);
        if (proportional)
            fail_unsupported("UNSUPPORTED_LOCAL_GEOMETRY",
                             "branches tangent at " + p.to_string());
    }
    return out;
}

bool is_zero_over_KP(const Symbol2& s, const PlanePoint& p) {
    return local_symbol_data(s, p).rank_mod3() <= 1;
}

}  // namespace cubnr
