#include <cubnr/engine.hpp>

#include <cubnr/errors.hpp>

#include <algorithm>
#include <cassert>
#include <set>

namespace cubnr {

namespace {

int mod3(long long e) {
    int r = static_cast<int>(e % 3);
    return r < 0 ? r + 3 : r;
}

}  // namespace

bool HnrVector::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

std::string HnrVector::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    return out + ")";
}

std::string to_string(Verdict::S s) {
    switch (s) {
        case Verdict::S::Yes: return "YES";
        case Verdict::S::No: return "NO";
        case Verdict::S::Unknown: return "UNKNOWN";
    }
    return "?";
}

Verdict condition_i(const DiagonalBundle& b, const LocusComponent& comp, SbResult* sb_out) {
    SbResult sb;
    try {
        sb = sb_normal_form_over(b, LocalSite::at_curve(comp.curve));
    } catch (const Failure& f) {
        if (f.kind() == Fail::Unsupported) {
            if (sb_out) *sb_out = SbResult{false, std::nullopt, {-1, -1, -1, -1}, f.what()};
            return Verdict::unknown(f.what());
        }
        throw;
    }
    if (sb_out) *sb_out = sb;
    if (sb.yes) return Verdict::yes();
    return Verdict::unknown(sb.detail);
}

GroupComputation::GroupComputation(DiagonalBundle b, LocusResult locus)
    : bundle_(std::move(b)), locus_(std::move(locus)) {
    size_t n = locus_.components.size();
    cond_i_.reserve(n);
    cond_i_sb_.resize(n);
    component_blockers_.resize(n);
    for (size_t i = 0; i < n; ++i)
        cond_i_.push_back(condition_i(bundle_, locus_.components[i], &cond_i_sb_[i]));

    std::set<PlanePoint> pts;
    for (size_t i = 0; i < n; ++i) {
        SupportInfo si = support_points(locus_.components[i].gamma);
        if (!si.complete())
            component_blockers_[i] = "gamma of component " +
                                     locus_.components[i].curve.poly().to_string() +
                                     " is supported at irrational points (" +
                                     si.irrational.front().to_string() + ")";
        // the rational part of the support still yields exact point sums,
        // so a nonzero sum there refutes a vector outright
        for (const auto& sp : si.points) pts.insert(sp.point);
    }
    for (const PlanePoint& p : pts) {
        PointInfo info{p, {}};
        for (size_t i = 0; i < n; ++i) {
            if (!locus_.components[i].curve.contains(p)) continue;
            info.residues.emplace_back(static_cast<int>(i),
                                       point_residue(locus_.components[i].gamma, p, 1));
        }
        points_.push_back(std::move(info));
    }
}

const SbResult& GroupComputation::kp_result(const PlanePoint& p) {
    auto it = kp_cache_.find(p);
    if (it != kp_cache_.end()) return it->second;
    SbResult sb;
    try {
        sb = sb_normal_form_over(bundle_, LocalSite::at_point(p));
    } catch (const Failure& f) {
        if (f.kind() != Fail::Unsupported) throw;
        sb = SbResult{false, std::nullopt, {-1, -1, -1, -1}, f.what()};
    }
    return kp_cache_.emplace(p, std::move(sb)).first->second;
}

Verdict GroupComputation::condition_ii(const HnrVector& v) {
    // nonzero sums at rational points refute the vector even when some
    // touched support is partly irrational, so they are checked first
    for (const PointInfo& info : points_) {
        long long sum = 0;
        for (const auto& [i, r] : info.residues)
            sum += mod3(static_cast<long long>(v.a[static_cast<size_t>(i)]) * r);
        if (mod3(sum) != 0)
            return Verdict::no("point residue sum " + std::to_string(mod3(sum)) + " != 0 at " +
                               info.p.to_string());
    }
    for (size_t i = 0; i < v.a.size(); ++i)
        if (v.a[i] != 0 && !component_blockers_[i].empty())
            return Verdict::unknown(component_blockers_[i]);
    for (const PointInfo& info : points_) {
        int nonzero_terms = 0;
        for (const auto& [i, r] : info.residues)
            if (mod3(static_cast<long long>(v.a[static_cast<size_t>(i)]) * r) != 0)
                ++nonzero_terms;
        if (nonzero_terms >= 2) {
            // opposite nonzero residues at a crossing: the class survives at P
            // and needs a local Severi-Brauer normal form
            const SbResult& sb = kp_result(info.p);
            if (!sb.yes)
                return Verdict::unknown("local Severi-Brauer test at " + info.p.to_string() +
                                        " undecided: " + sb.detail);
        }
    }
    return Verdict::yes();
}

Verdict GroupComputation::classify(const HnrVector& v) {
    // a proven point-sum failure refutes the vector outright, so condition
    // (ii) reports first; undecided answers surface after
    Verdict cii = condition_ii(v);
    if (cii.s == Verdict::S::No) return cii;
    for (size_t i = 0; i < v.a.size(); ++i) {
        if (v.a[i] == 0) continue;
        const Verdict& ci = cond_i_[i];
        if (ci.s != Verdict::S::Yes)
            return Verdict::unknown("condition (i) undecided on component " +
                                    locus_.components[i].curve.poly().to_string() + ": " +
                                    ci.reason);
    }
    return cii;
}

namespace {

std::vector<int> add_vectors(const std::vector<int>& u, const std::vector<int>& w) {
    std::vector<int> out(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        int s = mod3(u[i] + w[i]);
        out[i] = s == 2 ? -1 : s;  // representatives in {-1,0,1}
    }
    return out;
}

std::vector<HnrVector> minimal_generators(const std::vector<HnrVector>& proven) {
    std::set<std::vector<int>> span;
    size_t n = proven.empty() ? 0 : proven.front().a.size();
    span.insert(std::vector<int>(n, 0));
    std::vector<HnrVector> gens;
    for (const HnrVector& v : proven) {
        if (v.is_zero() || span.count(v.a)) continue;
        gens.push_back(v);
        std::set<std::vector<int>> next = span;
        for (const auto& s : span) {
            next.insert(add_vectors(s, v.a));
            next.insert(add_vectors(add_vectors(s, v.a), v.a));
        }
        span = std::move(next);
    }
    return gens;
}

}  // namespace

EngineResult compute_group(const DiagonalBundle& b, GammaConvention conv) {
    ValidationReport val = validate(b);
    if (!val.pass) {
        std::string joined;
        for (const auto& v : val.violations) joined += (joined.empty() ? "" : "; ") + v;
        fail_input("INVALID_BUNDLE", joined);
    }

    EngineResult out;
    out.locus = three_planes_locus(b, conv);
    if (!out.locus.nonreduced.empty())
        fail_hypothesis("HYPOTHESIS_VIOLATION",
                        "non-reduced fibre over " +
                            out.locus.nonreduced.front().poly().to_string() +
                            "; the cube-reduction preprocessing (--reduce-cubes) produces a "
                            "model isomorphic over K with reduced fibres");

    if (out.locus.components.size() > 20)
        fail_unsupported("ENUMERATION_LIMIT",
                         "3^" + std::to_string(out.locus.components.size()) +
                             " vectors exceed the enumeration bound (20 components)");

    out.minimality = segre_minimality(b);
    if (out.minimality.kind != MinimalityVerdict::Kind::Minimal)
        fail_hypothesis("HYPOTHESIS_VIOLATION",
                        "generic fibre minimality is " + to_string(out.minimality.kind) + ": " +
                            out.minimality.detail);

    std::vector<Curve> curves;
    for (const auto& comp : out.locus.components) curves.push_back(comp.curve);
    out.snc = snc_check(curves);
    if (!out.snc.pass)
        fail_hypothesis("HYPOTHESIS_VIOLATION",
                        "the three-planes locus is not a simple normal crossings divisor: " +
                            out.snc.failure +
                            (out.snc.witness ? " at " + out.snc.witness->to_string() : ""));

    size_t n = out.locus.components.size();
    GroupComputation comp(b, out.locus);
    out.cond_i = comp.condition_i_verdicts();
    out.cond_i_sb = comp.condition_i_results();

    std::vector<HnrVector> proven;
    std::vector<std::pair<HnrVector, std::string>> undecided;
    std::vector<int> digits(n, -1);
    while (true) {
        HnrVector v{digits};
        Verdict verdict = comp.classify(v);
        if (verdict.s == Verdict::S::Yes) proven.push_back(v);
        if (verdict.s == Verdict::S::Unknown) undecided.emplace_back(v, verdict.reason);
        size_t pos = 0;
        while (pos < n && digits[pos] == 1) digits[pos++] = -1;
        if (pos == n) break;
        ++digits[pos];
    }

    std::sort(proven.begin(), proven.end());
    std::sort(undecided.begin(), undecided.end());
    out.group.proven = proven;
    out.group.order = proven.size();
    out.group.generators = minimal_generators(proven);
    out.undecided = undecided;
    for (const auto& [v, reason] : undecided) out.group.undecided.push_back(v);

    if (undecided.empty()) {
        // Closure (hence inverses, since 2u = -u mod 3): the proven set must
        // literally be a subgroup.
        std::set<std::vector<int>> members;
        for (const auto& v : proven) members.insert(v.a);
        for (const auto& u : proven)
            for (const auto& w : proven)
                if (!members.count(add_vectors(u.a, w.a)))
                    throw std::logic_error("admissible set is not closed under addition");
    }

    for (const HnrVector& v : proven)
        out.members.push_back(MemberInfo{v, symbol_witness(b, out.locus, v)});

    if (out.group.order > 1) {
        out.certificate.attached = true;
        out.certificate.conclusion =
            "The relative unramified cohomology group of this bundle contains a subgroup of "
            "order " +
            std::to_string(out.group.order) +
            " (Z/3 rank " + std::to_string(out.group.generators.size()) +
            "). The generic fibre is smooth, so by the specialization principle for relative "
            "unramified classes, no smooth projective variety degenerating to this bundle is "
            "stably rational.";
    } else {
        out.certificate.attached = false;
        out.certificate.conclusion =
            out.group.undecided.empty()
                ? "The admissible subgroup is trivial; this computation certifies no "
                  "irrationality obstruction."
                : "Only the trivial class is proven; undecided vectors remain.";
    }
    out.certificate.checklist = {
        {"generic fibre smooth", "PASS (diagonal with nonzero coefficients)"},
        {"generic fibre minimal", "PASS (" + out.minimality.detail + ")"},
        {"codimension-1 fibres reduced", "PASS"},
        {"three-planes locus SNC", "PASS"},
    };
    return out;
}

std::optional<Symbol2> symbol_witness(const DiagonalBundle& b, const LocusResult& locus,
                                      const HnrVector& v) {
    if (v.is_zero()) return Symbol2::trivial();

    std::set<Curve> curve_set;
    for (const auto& c : b.coeff)
        for (const auto& [curve, e] : c.factors()) curve_set.insert(curve);
    std::vector<Curve> gens(curve_set.begin(), curve_set.end());
    size_t m = gens.size();
    if (m == 0 || m > 6) return std::nullopt;

    // Targets: gamma_i^{a_i} on locus components, trivial on every other
    // factor curve (residues vanish automatically off the factor support).
    std::vector<CubeClass> target;
    for (size_t i = 0; i < locus.components.size(); ++i)
        target.push_back(locus.components[i].gamma.pow(v.a[i]));

    // Carriers to check: locus components plus all parametrizable factor
    // curves; unparametrizable factor curves only admit the valuation
    // precheck, so candidates must be units along them.
    struct Carrier {
        Curve curve;
        std::optional<CubeClass> want;  // nullopt = must be trivial
        std::vector<int> factor_class;  // cached class index per generator, -1 = skip
    };

    // Cache the restriction class of every generator curve on every carrier.
    std::vector<Carrier> carriers;
    std::vector<std::vector<CubeClass>> cache;  // carriers x gens
    auto add_carrier = [&](const Curve& c, std::optional<CubeClass> want) {
        Carrier car{c, std::move(want), {}};
        std::vector<CubeClass> row;
        for (const Curve& g : gens) {
            if (g == c) {
                row.push_back(CubeClass::identity(c));  // placeholder, never used
                continue;
            }
            Restriction r = restrict_to_curve(g.poly(), c.param());
            SquarefreeDecomp sf = yun_squarefree(r.finite);
            std::vector<std::pair<UPoly, int>> fin;
            for (const auto& [part, mult] : sf.parts) fin.emplace_back(part, mult);
            // balanced per generator: subtracting deg(g)*deg(param) at
            // infinity makes each cached class principal on its own, and the
            // corrections cancel in any degree-0 combination
            row.push_back(CubeClass::from_divisor(
                c, std::move(fin), r.inf_order - g.degree() * c.param().deg));
        }
        cache.push_back(std::move(row));
        carriers.push_back(std::move(car));
    };

    std::set<Curve> in_locus;
    for (size_t i = 0; i < locus.components.size(); ++i) {
        add_carrier(locus.components[i].curve, target[i]);
        in_locus.insert(locus.components[i].curve);
    }
    std::vector<Curve> unparametrized;
    for (const Curve& g : gens) {
        if (in_locus.count(g)) continue;
        if (g.parametrizable())
            add_carrier(g, std::nullopt);
        else
            unparametrized.push_back(g);
    }

    // Degree-0 monomials in the generators with exponents in {-2..2},
    // enumerated from large to small exponents.
    std::vector<std::vector<int>> candidates;
    std::vector<int> expt(m, 2);
    while (true) {
        long long deg = 0;
        for (size_t i = 0; i < m; ++i) deg += static_cast<long long>(expt[i]) * gens[i].degree();
        if (deg == 0) candidates.push_back(expt);
        size_t pos = m;
        while (pos > 0 && expt[pos - 1] == -2) expt[--pos] = 2;
        if (pos == 0) break;
        --expt[pos - 1];
    }

    auto vals_on = [&](const std::vector<int>& e, const Curve& c) {
        for (size_t i = 0; i < m; ++i)
            if (gens[i] == c) return e[i];
        return 0;
    };

    for (const auto& eg : candidates) {
        for (const auto& eh : candidates) {
            bool ok = true;
            // valuation precheck along unparametrized factor curves
            for (const Curve& c : unparametrized) {
                if (mod3(vals_on(eg, c)) != 0 || mod3(vals_on(eh, c)) != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (size_t ci = 0; ci < carriers.size() && ok; ++ci) {
                const Curve& c = carriers[ci].curve;
                int vg = vals_on(eg, c), vh = vals_on(eh, c);
                CubeClass res = CubeClass::identity(c);
                for (size_t i = 0; i < m; ++i) {
                    if (gens[i] == c) continue;
                    int k = mod3(static_cast<long long>(vh) * eg[i] -
                                 static_cast<long long>(vg) * eh[i]);
                    if (k != 0) res = res.mul(cache[ci][i].pow(k));
                }
                if (carriers[ci].want) {
                    if (!res.equals(*carriers[ci].want)) ok = false;
                } else if (!res.is_trivial()) {
                    ok = false;
                }
            }
            if (!ok) continue;
            std::vector<std::pair<Curve, int>> gf, hf;
            for (size_t i = 0; i < m; ++i) {
                if (eg[i] != 0) gf.emplace_back(gens[i], eg[i]);
                if (eh[i] != 0) hf.emplace_back(gens[i], eh[i]);
            }
            return Symbol2::make(FactoredFn::from_parts(Rational(1), std::move(gf)),
                                 FactoredFn::from_parts(Rational(1), std::move(hf)));
        }
    }
    return std::nullopt;
}

}  // namespace cubnr
