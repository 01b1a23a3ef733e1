#include <cubnr/bundle.hpp>

#include <cubnr/errors.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace cubnr {

std::string to_string(FiberKind k) {
    switch (k) {
        case FiberKind::Smooth: return "SMOOTH";
        case FiberKind::Cone: return "CONE";
        case FiberKind::ThreePlanes: return "THREE_PLANES";
        case FiberKind::SplitPlanes: return "SPLIT_PLANES";
        case FiberKind::NonReduced: return "NON_REDUCED";
    }
    return "?";
}

std::string to_string(GammaConvention c) {
    return c == GammaConvention::LaterOverEarlier ? "later-over-earlier" : "earlier-over-later";
}

std::string to_string(MinimalityVerdict::Kind k) {
    switch (k) {
        case MinimalityVerdict::Kind::Minimal: return "MINIMAL";
        case MinimalityVerdict::Kind::SbBirational: return "SB_BIRATIONAL";
        case MinimalityVerdict::Kind::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string LocalSite::to_string(const VarSet& vars) const {
    switch (kind) {
        case Kind::GlobalK: return "K";
        case Kind::LocalKx: return "K_x(" + curve->poly().to_string(vars) + ")";
        case Kind::LocalKP: return "K_P(" + point->to_string() + ")";
    }
    return "?";
}

ValidationReport validate(const DiagonalBundle& b) {
    ValidationReport out;
    auto violate = [&](const std::string& s) {
        out.pass = false;
        out.violations.push_back(s);
    };
    int deg = b.coeff[0].total_degree();
    for (int i = 0; i < 4; ++i) {
        const FactoredFn& c = b.coeff[i];
        for (const auto& [curve, e] : c.factors())
            if (e < 0)
                violate(std::string("coefficient ") + DiagonalBundle::position_name(i) +
                        " has a negative exponent; coefficients must be polynomials");
        if (c.total_degree() != deg)
            violate(std::string("coefficient degrees differ: deg(a) = ") + std::to_string(deg) +
                    ", deg(" + DiagonalBundle::position_name(i) +
                    ") = " + std::to_string(c.total_degree()));
    }
    // gcd(a,b,c,d) = 1: no curve may divide all four.
    for (const auto& [curve, e] : b.coeff[0].factors()) {
        bool common = e > 0;
        for (int i = 1; i < 4 && common; ++i) common = b.coeff[i].valuation(curve) > 0;
        if (common)
            violate("all four coefficients share the factor " + curve.poly().to_string());
    }
    // distinct factor curves across coefficients must be coprime, otherwise
    // some attested factor is reducible
    std::set<Curve> all;
    for (const auto& c : b.coeff)
        for (const auto& [curve, e] : c.factors()) all.insert(curve);
    for (auto i = all.begin(); i != all.end(); ++i)
        for (auto j = std::next(i); j != all.end(); ++j) {
            HPoly g = gcd(i->poly(), j->poly());
            if (g.degree() > 0)
                violate("factors " + i->poly().to_string() + " and " + j->poly().to_string() +
                        " share the divisor " + g.to_string() + "; an attestation is refuted");
        }
    return out;
}

FiberType fiber_type(const DiagonalBundle& b, const Curve& c, GammaConvention conv) {
    FiberType out{FiberKind::Smooth, {}, std::nullopt};
    for (int i = 0; i < 4; ++i)
        if (b.coeff[i].valuation(c) == 0) out.unit_positions.push_back(i);
    switch (out.unit_positions.size()) {
        case 4: out.kind = FiberKind::Smooth; return out;
        case 3: out.kind = FiberKind::Cone; return out;
        case 1: out.kind = FiberKind::NonReduced; return out;
        case 0:
            fail_input("INVALID_BUNDLE",
                       "all four coefficients vanish along " + c.poly().to_string());
        default: break;
    }
    int p1 = out.unit_positions[0], p2 = out.unit_positions[1];
    FactoredFn ratio = conv == GammaConvention::LaterOverEarlier
                           ? b.coeff[p2] * b.coeff[p1].inv()
                           : b.coeff[p1] * b.coeff[p2].inv();
    CubeClass gamma = residue_unit(ratio, c);
    out.kind = gamma.is_trivial() ? FiberKind::SplitPlanes : FiberKind::ThreePlanes;
    out.gamma = std::move(gamma);
    return out;
}

LocusResult three_planes_locus(const DiagonalBundle& b, GammaConvention conv) {
    std::set<Curve> support;
    for (const auto& c : b.coeff)
        for (const auto& [curve, e] : c.factors()) support.insert(curve);
    LocusResult out;
    for (const Curve& curve : support) {
        FiberType t = fiber_type(b, curve, conv);
        if (t.kind == FiberKind::NonReduced) out.nonreduced.push_back(curve);
        if (t.kind == FiberKind::ThreePlanes)
            out.components.push_back(
                LocusComponent{curve, *t.gamma, {t.unit_positions[0], t.unit_positions[1]}});
        out.discriminant.push_back(DiscriminantEntry{curve, std::move(t)});
    }
    return out;
}

namespace {

PlanePoint line_intersection(const Curve& l1, const Curve& l2) {
    auto coeff = [](const Curve& l, int v) {
        Expt e{0, 0, 0};
        e[static_cast<size_t>(v)] = 1;
        auto it = l.poly().terms().find(e);
        return it == l.poly().terms().end() ? Rational(0) : it->second;
    };
    Rational a1 = coeff(l1, 0), b1 = coeff(l1, 1), c1 = coeff(l1, 2);
    Rational a2 = coeff(l2, 0), b2 = coeff(l2, 1), c2 = coeff(l2, 2);
    // cross product of the coefficient vectors
    return PlanePoint::make(b1 * c2 - c1 * b2, c1 * a2 - a1 * c2, a1 * b2 - b1 * a2);
}

// Intersection points of two distinct curves, at least one parametrizable;
// reports tangency via root multiplicity. Throws for irrational points.
std::vector<std::pair<PlanePoint, int>> curve_intersections(const Curve& c1, const Curve& c2) {
    if (c1.degree() == 1 && c2.degree() == 1)
        return {{line_intersection(c1, c2), 1}};
    const Curve& host = c1.parametrizable() ? c1 : c2;
    const Curve& other = c1.parametrizable() ? c2 : c1;
    if (!host.parametrizable())
        fail_unsupported("UNSUPPORTED_CURVE",
                         "cannot intersect two unparametrized curves exactly");
    Restriction r = restrict_to_curve(other.poly(), host.param());
    std::vector<std::pair<PlanePoint, int>> out;
    RationalRoots rr = rational_roots(r.finite);
    if (!rr.residual.is_constant())
        fail_unsupported("UNSUPPORTED_POINT",
                         "irrational intersection of " + c1.poly().to_string() + " and " +
                             c2.poly().to_string());
    std::map<Rational, int> mult;
    for (const Rational& root : rr.roots) mult[root]++;
    for (const auto& [root, m] : mult) out.emplace_back(host.point_at(root, 1), m);
    if (r.inf_order > 0) out.emplace_back(host.point_at(1, 0), r.inf_order);
    return out;
}

}  // namespace

SncReport snc_check(const std::vector<Curve>& curves) {
    SncReport out;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j)
            if (curves[i] == curves[j]) {
                out.pass = false;
                out.failure = "repeated component " + curves[i].poly().to_string();
                return out;
            }
    for (const Curve& c : curves) {
        if (c.status() == IrredStatus::Attested)
            fail_unsupported("UNSUPPORTED_CURVE",
                             "cannot verify smoothness of " + c.poly().to_string());
        // lines are smooth; proven conics have rank 3, hence are smooth
    }
    std::map<PlanePoint, std::set<size_t>> incidence;
    for (size_t i = 0; i < curves.size(); ++i)
        for (size_t j = i + 1; j < curves.size(); ++j) {
            for (const auto& [p, mult] : curve_intersections(curves[i], curves[j])) {
                if (mult > 1) {
                    out.pass = false;
                    out.failure = "components " + curves[i].poly().to_string() + " and " +
                                  curves[j].poly().to_string() + " are tangent";
                    out.witness = p;
                    return out;
                }
                incidence[p].insert(i);
                incidence[p].insert(j);
            }
        }
    for (const auto& [p, members] : incidence)
        if (members.size() >= 3) {
            out.pass = false;
            out.failure = "three or more components pass through a common point";
            out.witness = p;
            return out;
        }
    return out;
}

SbResult sb_normal_form_over(const DiagonalBundle& b, const LocalSite& site) {
    static constexpr int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    SbResult out;
    VarSet vars;
    for (const auto& pr : pairings) {
        int i = pr[0], j = pr[1], k = pr[2], l = pr[3];
        FactoredFn ratio = b.coeff[i] * b.coeff[j] * (b.coeff[k] * b.coeff[l]).inv();
        bool cube = false;
        switch (site.kind) {
            case LocalSite::Kind::GlobalK: cube = is_cube_in_K(ratio); break;
            case LocalSite::Kind::LocalKx: cube = is_cube_in_Kx(ratio, *site.curve); break;
            case LocalSite::Kind::LocalKP: cube = is_cube_in_KP(ratio, *site.point); break;
        }
        if (!cube) continue;
        Symbol2 sym = Symbol2::make(b.coeff[i] * b.coeff[l].inv(), b.coeff[j] * b.coeff[l].inv());
        bool nonvanishing = false;
        bool undecidable = false;
        switch (site.kind) {
            case LocalSite::Kind::GlobalK: {
                // any nontrivial residue proves the class nonzero; an
                // undecidable residue (unparametrized factor curve) blocks
                // the vanishing conclusion but never yields a yes
                std::set<Curve> support;
                for (const auto& [c, e] : sym.g.factors()) support.insert(c);
                for (const auto& [c, e] : sym.h.factors()) support.insert(c);
                for (const Curve& c : support) {
                    try {
                        if (!residue_codim1(sym, c).is_trivial()) {
                            nonvanishing = true;
                            break;
                        }
                    } catch (const Failure& f) {
                        if (f.kind() != Fail::Unsupported) throw;
                        undecidable = true;
                    }
                }
                break;
            }
            case LocalSite::Kind::LocalKx:
                nonvanishing = !is_zero_over_Kx(sym, *site.curve);
                break;
            case LocalSite::Kind::LocalKP:
                nonvanishing = !is_zero_over_KP(sym, *site.point);
                break;
        }
        std::string names = std::string("{") + DiagonalBundle::position_name(i) + "," +
                            DiagonalBundle::position_name(j) + "} ~ {" +
                            DiagonalBundle::position_name(k) + "," +
                            DiagonalBundle::position_name(l) + "}";
        if (nonvanishing) {
            out.yes = true;
            out.symbol = std::move(sym);
            out.pairing = {i, j, k, l};
            out.detail = "normal form via pairing " + names + " over " + site.to_string(vars) +
                         "; class (" + DiagonalBundle::position_name(i) + "/" +
                         DiagonalBundle::position_name(l) + ", " +
                         DiagonalBundle::position_name(j) + "/" +
                         DiagonalBundle::position_name(l) + ") does not vanish";
            return out;
        }
        if (undecidable) {
            out.detail = "pairing " + names + " matches but a residue along an unparametrized "
                         "factor curve cannot be computed; nonvanishing over " +
                         site.to_string(vars) + " is undecided";
            return out;
        }
        // The kernel is generated by this class; when it vanishes every
        // presentation does, so the search stops here.
        out.detail = "pairing " + names + " matches but the class vanishes over " +
                     site.to_string(vars) + "; the surface has no non-split model there";
        return out;
    }
    out.detail = "no coefficient pairing is congruent modulo cubes over " + site.to_string(vars);
    return out;
}

MinimalityVerdict segre_minimality(const DiagonalBundle& b) {
    MinimalityVerdict out;
    SbResult global = sb_normal_form_over(b, LocalSite::global());
    if (global.yes) {
        out.kind = MinimalityVerdict::Kind::SbBirational;
        out.sb_witness = global.symbol;
        out.detail = global.detail;
        return out;
    }
    for (int f_pos = 0; f_pos < 4; ++f_pos) {
        int rest[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != f_pos) rest[n++] = i;
        for (int ci = 0; ci < 3; ++ci) {
            int c_pos = rest[ci];
            int a_pos = rest[(ci + 1) % 3], b_pos = rest[(ci + 2) % 3];
            if (a_pos > b_pos) std::swap(a_pos, b_pos);
            const FactoredFn &A = b.coeff[a_pos], &B = b.coeff[b_pos];
            const FactoredFn &C = b.coeff[c_pos], &F = b.coeff[f_pos];
            if (!is_cube_in_K(A * B * C.inv())) continue;
            std::vector<std::pair<std::string, FactoredFn>> elems = {
                {DiagonalBundle::position_name(a_pos), A},
                {DiagonalBundle::position_name(b_pos), B},
                {std::string(DiagonalBundle::position_name(a_pos)) +
                     DiagonalBundle::position_name(b_pos),
                 A * B},
                {DiagonalBundle::position_name(f_pos), F},
                {std::string(DiagonalBundle::position_name(a_pos)) +
                     DiagonalBundle::position_name(f_pos),
                 A * F},
                {std::string(DiagonalBundle::position_name(b_pos)) +
                     DiagonalBundle::position_name(f_pos),
                 B * F}};
            bool all_noncube = true;
            std::vector<std::pair<std::string, bool>> flags;
            for (const auto& [name, e] : elems) {
                bool cube = is_cube_in_K(e);
                flags.emplace_back(name, cube);
                if (cube) all_noncube = false;
            }
            if (all_noncube) {
                out.kind = MinimalityVerdict::Kind::Minimal;
                out.labeling = {a_pos, b_pos, c_pos, f_pos};
                out.segre_elements = std::move(flags);
                out.detail = std::string("labeling a' = ") + DiagonalBundle::position_name(a_pos) +
                             ", b' = " + DiagonalBundle::position_name(b_pos) +
                             ", c' = " + DiagonalBundle::position_name(c_pos) + " (= a'b' mod cubes)" +
                             ", f' = " + DiagonalBundle::position_name(f_pos) +
                             "; all six list elements are non-cubes";
                return out;
            }
        }
    }
    out.kind = MinimalityVerdict::Kind::Unknown;
    out.detail = global.detail.empty()
                     ? "no labeling matches the minimality criterion"
                     : "no non-split normal form found and no labeling matches the minimality "
                       "criterion (" +
                           global.detail + ")";
    return out;
}

ReduceCubesResult reduce_cubes(const DiagonalBundle& b) {
    ReduceCubesResult out;
    std::array<FactoredFn, 4> stripped;
    std::array<int, 4> degrees{};
    for (int i = 0; i < 4; ++i) {
        std::vector<std::pair<Curve, int>> keep;
        for (const auto& [curve, e] : b.coeff[i].factors()) {
            int r = e % 3;
            if (r != e)
                out.notes.push_back(std::string("stripped (") + curve.poly().to_string() + ")^" +
                                    std::to_string(e - r) + " from " +
                                    DiagonalBundle::position_name(i));
            if (r != 0) keep.emplace_back(curve, r);
        }
        stripped[i] = FactoredFn::from_parts(b.coeff[i].scalar(), std::move(keep));
        degrees[i] = stripped[i].total_degree();
    }
    int dmax = *std::max_element(degrees.begin(), degrees.end());

    // Fresh pad lines, pairwise distinct and coprime to every factor.
    std::set<Curve> used;
    for (const auto& c : b.coeff)
        for (const auto& [curve, e] : c.factors()) used.insert(curve);
    auto fresh_line = [&](int m) {
        HPoly::TermMap t;
        t[{1, 0, 0}] = 1;
        t[{0, 1, 0}] = Rational(m);
        t[{0, 0, 1}] = Rational(static_cast<long long>(m) * m);
        return Curve::line(HPoly::from_terms(1, std::move(t)));
    };
    int next = 1;
    for (int i = 0; i < 4; ++i) {
        int pad = dmax - degrees[i];
        if (pad == 0) continue;
        Curve line = fresh_line(next++);
        while (used.count(line)) line = fresh_line(next++);
        used.insert(line);
        stripped[i] = stripped[i] * FactoredFn::of_curve(line, pad);
        out.notes.push_back(std::string("padded ") + DiagonalBundle::position_name(i) + " with (" +
                            line.poly().to_string() + ")^" + std::to_string(pad) +
                            " to restore the shared degree");
    }
    out.changed = !out.notes.empty();
    out.bundle = DiagonalBundle{stripped};
    return out;
}

}  // namespace cubnr
