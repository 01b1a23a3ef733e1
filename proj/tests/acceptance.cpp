// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all exact) and prints one pass/fail line per criterion.

#include <cubnr/demo.hpp>
#include <cubnr/engine.hpp>
#include <cubnr/errors.hpp>
#include <cubnr/parse.hpp>
#include <cubnr/report.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace cubnr;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& label) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << label
              << "\n";
    if (!pass) ++failures;
}

HPoly P(const std::string& e) { return parse_poly(e, VarSet{}); }
Curve L(const std::string& e) { return Curve::line(P(e)); }

FactoredFn FF(std::vector<std::pair<Curve, int>> factors) {
    return FactoredFn::from_parts(Rational(1), std::move(factors));
}

const char* kRefF = "x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z";

DiagonalBundle refv() {
    return DiagonalBundle{{FF({{L("x"), 1}, {L("z"), 2}}),
                           FF({{L("y"), 2}, {L("z"), 1}}),
                           FF({{L("x"), 1}, {L("y"), 2}}),
                           FactoredFn::of_curve(Curve::attested(P(kRefF)))}};
}

CubeClass cls(const std::string& a, int ea, const std::string& b, int eb, const Curve& carrier) {
    return residue_unit(FF({{L(a), ea}, {L(b), eb}}), carrier);
}

Symbol2 alpha_symbol() {
    return Symbol2::make(FF({{L("x"), 1}, {L("z"), -1}}), FF({{L("y"), 1}, {L("z"), -1}}));
}

int run_binary(const std::string& args) {
    const char* bin = std::getenv("CUBNR_BIN");
    std::string cmd = std::string(bin ? bin : "./cubnr") + " " + args +
                      " > acceptance_cli.tmp 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

// expected gamma classes of the reference bundle under later-over-earlier
std::array<CubeClass, 3> refv_gammas() {
    return {cls("y", 1, "z", 2, L("x")),   // class[y z^2]
            cls("x", 2, "z", 1, L("y")),   // class[x^2 z]
            cls("x", 2, "y", 1, L("z"))};  // class[x^2 y]
}

bool check_refv_result(const EngineResult& r, bool expect_witnesses) {
    bool ok = r.locus.components.size() == 3;
    if (!ok) return false;
    ok = ok && r.locus.components[0].curve == L("x") && r.locus.components[1].curve == L("y") &&
         r.locus.components[2].curve == L("z");
    auto gammas = refv_gammas();
    for (size_t i = 0; i < 3; ++i) ok = ok && r.locus.components[i].gamma.equals(gammas[i]);
    ok = ok && r.minimality.kind == MinimalityVerdict::Kind::Minimal;
    for (const auto& v : r.cond_i) ok = ok && v.s == Verdict::S::Yes;
    ok = ok && r.group.order == 3 && r.group.undecided.empty();
    ok = ok && r.group.proven.size() == 3 && r.group.proven[0].a == std::vector<int>{-1, -1, 1} &&
         r.group.proven[1].a == std::vector<int>{0, 0, 0} &&
         r.group.proven[2].a == std::vector<int>{1, 1, -1};
    ok = ok && r.certificate.attached;
    if (expect_witnesses)
        for (const auto& m : r.members) ok = ok && m.witness.has_value();
    return ok;
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    int rc = run_binary("demo refv");
    auto elapsed =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
    bool ok = rc == 0 && elapsed.count() < 10;
    EngineResult r = compute_group(refv());
    ok = ok && check_refv_result(r, true);
    report(1, ok,
           "flagship reproduction: locus {x,y,z}, gammas, MINIMAL, condition (i) YES x3, group "
           "{0, +/-(1,1,-1)} of order 3, certificate; demo under 10 s");
}

void criterion2() {
    Symbol2 s = alpha_symbol();
    bool ok = residue_codim1(s, L("x")).equals(cls("y", 2, "z", 1, L("x")));
    ok = ok && residue_codim1(s, L("y")).equals(cls("x", 1, "z", 2, L("y")));
    ok = ok && residue_codim1(s, L("z")).equals(cls("x", 2, "y", 1, L("z")));
    for (int lam = 1; lam <= 4 && ok; ++lam)
        for (int mu = 1; mu <= 4 && ok; ++mu) {
            HPoly::TermMap t;
            t[{1, 0, 0}] = 1;
            t[{0, 1, 0}] = lam;
            t[{0, 0, 1}] = mu;
            ok = ok && residue_codim1(s, Curve::line(HPoly::from_terms(1, std::move(t))))
                           .is_trivial();
        }
    report(2, ok,
           "residue table of (x/z, y/z): class[y^2 z], class[x z^2], class[x^2 y]; trivial along "
           "x + l y + m z with l m != 0");
}

void criterion3() {
    Curve fc = Curve::attested(P(kRefF));
    FactoredFn f = FactoredFn::of_curve(fc);
    UPoly cube_pat({Rational(1), Rational(3), Rational(3), Rational(1)});  // (t+1)^3
    bool ok = true;
    for (const auto& line : {L("x"), L("y"), L("z")}) {
        Restriction r = restrict_to_curve(fc.poly(), line.param());
        SquarefreeDecomp d = yun_squarefree(r.finite);
        ok = ok && d.parts.size() == 1 && d.parts[0].second == 3 && r.inf_order == 0;
        ok = ok && r.finite == cube_pat;  // (y+z)^3, (x+z)^3, (x+y)^3 in the line parameter
        ok = ok && is_cube_in_Kx(f, line);
    }
    ok = ok && !is_cube_in_K(f);
    report(3, ok, "restrictions of f to the coordinate lines are perfect cubes; f itself is not "
                  "a cube in K");
}

void criterion4() {
    DiagonalBundle b = refv();
    const FactoredFn &a = b.coeff[0], &bb = b.coeff[1], &c = b.coeff[2], &d = b.coeff[3];
    std::vector<FactoredFn> elems = {a, bb, a * bb, d, a * d, bb * d};
    (void)c;
    bool ok = true;
    for (const auto& e : elems) ok = ok && !is_cube_in_K(e);
    MinimalityVerdict m = segre_minimality(b);
    ok = ok && m.kind == MinimalityVerdict::Kind::Minimal;
    for (const auto& [name, cube] : m.segre_elements) ok = ok && !cube;
    report(4, ok, "Segre list {xz^2, y^2z, xy^2, f, xz^2 f, y^2z f} consists of non-cubes");
}

void criterion5() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 eng(20260809);
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); };
    auto random_line = [&]() {
        while (true) {
            int a = uni(-3, 3), b = uni(-3, 3), c = uni(-3, 3);
            if (a == 0 && b == 0 && c == 0) continue;
            HPoly::TermMap t;
            if (a) t[{1, 0, 0}] = a;
            if (b) t[{0, 1, 0}] = b;
            if (c) t[{0, 0, 1}] = c;
            return Curve::line(HPoly::from_terms(1, std::move(t)));
        }
    };
    // degree-0 product of at most `max_parts` linear forms, exponents in {-2..2}
    auto random_fn = [&](int max_parts) -> std::optional<FactoredFn> {
        int parts = uni(1, max_parts);
        std::vector<std::pair<Curve, int>> fs;
        int deg = 0;
        for (int k = 0; k < parts; ++k) {
            Curve c = random_line();
            for (auto& [cc, e] : fs)
                if (cc == c) return std::nullopt;
            int e = uni(-2, 2);
            if (e == 0) return std::nullopt;
            fs.emplace_back(c, e);
            deg += e;
        }
        if (deg != 0) return std::nullopt;
        return FF(std::move(fs));
    };
    int done = 0;
    bool ok = true;
    while (done < 220 && ok) {
        auto g = random_fn(4);
        auto h = random_fn(4);
        if (!g || !h) continue;
        Symbol2 s = Symbol2::make(*g, *h);
        ok = ok && reciprocity_check(s).all_zero;
        // multiplicativity of the ramification data in each argument
        if (done % 10 == 0) {
            auto g2 = random_fn(2);
            if (g2) {
                std::set<Curve> curves;
                for (const auto& [c, e] : g->factors()) curves.insert(c);
                for (const auto& [c, e] : g2->factors()) curves.insert(c);
                for (const auto& [c, e] : h->factors()) curves.insert(c);
                for (const Curve& c : curves) {
                    CubeClass lhs = residue_codim1(Symbol2::make(*g * *g2, *h), c);
                    CubeClass rhs = residue_codim1(Symbol2::make(*g, *h), c)
                                        .mul(residue_codim1(Symbol2::make(*g2, *h), c));
                    ok = ok && lhs.equals(rhs);
                    CubeClass lhs2 = residue_codim1(Symbol2::make(*h, *g * *g2), c);
                    CubeClass rhs2 = residue_codim1(Symbol2::make(*h, *g), c)
                                         .mul(residue_codim1(Symbol2::make(*h, *g2), c));
                    ok = ok && lhs2.equals(rhs2);
                }
            }
        }
        ++done;
    }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
    ok = ok && done >= 200 && elapsed.count() < 60;
    report(5, ok, "reciprocity and multiplicativity on " + std::to_string(done) +
                      " randomized symbols of linear forms (" + std::to_string(elapsed.count()) +
                      " s)");
}

void criterion6() {
    std::mt19937_64 eng(424242);
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); };
    PlanePoint origin = PlanePoint::make(0, 0, 1);
    auto mod3 = [](long long v) { int r = static_cast<int>(v % 3); return r < 0 ? r + 3 : r; };
    // random monomial x^a y^b z^c of degree 0 with a, b, c in {-2..2}
    auto random_monomial = [&]() -> std::optional<std::array<int, 3>> {
        int a = uni(-2, 2), b = uni(-2, 2);
        int c = -a - b;
        if (c < -2 || c > 2) return std::nullopt;
        return std::array<int, 3>{a, b, c};
    };
    auto to_fn = [&](const std::array<int, 3>& e) {
        std::vector<std::pair<Curve, int>> fs;
        if (e[0]) fs.emplace_back(L("x"), e[0]);
        if (e[1]) fs.emplace_back(L("y"), e[1]);
        if (e[2]) fs.emplace_back(L("z"), e[2]);
        return FF(std::move(fs));
    };
    int done = 0;
    bool ok = true;
    while (done < 220 && ok) {
        auto eg = random_monomial();
        auto eh = random_monomial();
        if (!eg || !eh) continue;
        Symbol2 s = Symbol2::make(to_fn(*eg), to_fn(*eh));
        // independent rank computation from the raw exponents at [0:0:1]
        int rows[2][2] = {{mod3((*eg)[0]), mod3((*eh)[0])},   // prime x
                          {mod3((*eg)[1]), mod3((*eh)[1])}};  // prime y
        int det = mod3(static_cast<long long>(rows[0][0]) * rows[1][1] -
                       static_cast<long long>(rows[0][1]) * rows[1][0]);
        bool any = rows[0][0] || rows[0][1] || rows[1][0] || rows[1][1];
        int rank = !any ? 0 : (det != 0 ? 2 : 1);
        ok = ok && (is_zero_over_KP(s, origin) == (rank <= 1));
        if (rank == 2) {
            // both branch residues must be visible at the point
            ok = ok && point_residue(residue_codim1(s, L("x")), origin, 1) != 0;
            ok = ok && point_residue(residue_codim1(s, L("y")), origin, 1) != 0;
        }
        // independent triviality formula along each coordinate line
        const Curve lines[3] = {L("x"), L("y"), L("z")};
        for (int i = 0; i < 3 && ok; ++i) {
            int gi = (*eg)[i], hi = (*eh)[i];
            int e1 = mod3(static_cast<long long>((*eg)[(i + 1) % 3]) * hi -
                          static_cast<long long>((*eh)[(i + 1) % 3]) * gi);
            int e2 = mod3(static_cast<long long>((*eg)[(i + 2) % 3]) * hi -
                          static_cast<long long>((*eh)[(i + 2) % 3]) * gi);
            bool trivial_by_hand = e1 == 0 && e2 == 0;
            ok = ok && (is_zero_over_Kx(s, lines[i]) == trivial_by_hand);
        }
        ++done;
    }
    report(6, ok && done >= 200,
           "local vanishing agrees with the rank criterion and residue triviality on " +
               std::to_string(done) + " monomial symbols");
}

void criterion7() {
    DiagonalBundle b = refv();
    bool ok = fiber_type(b, L("x+y+z")).kind == FiberKind::Smooth;
    ok = ok && fiber_type(b, Curve::attested(P(kRefF))).kind == FiberKind::Cone;
    ok = ok && fiber_type(b, L("x")).kind == FiberKind::ThreePlanes;
    DiagonalBundle split{{FF({{L("x"), 1}, {L("z"), 2}}),
                          FF({{L("y"), 2}, {L("z"), 1}}),
                          FF({{L("x"), 1}, {L("y"), 2}}),
                          FactoredFn::of_curve(Curve::attested(P("y^2*z+x*y^2+x*z^2")))}};
    ok = ok && fiber_type(split, L("x")).kind == FiberKind::SplitPlanes;
    LocusResult sl = three_planes_locus(split);
    ok = ok && sl.components.empty();  // split components excluded from the locus
    DiagonalBundle nr{{FF({{L("y"), 1}}), FF({{L("x"), 1}}), FF({{L("x"), 1}}),
                      FF({{L("x"), 1}})}};
    ok = ok && fiber_type(nr, L("x")).kind == FiberKind::NonReduced;

    // the non-reduced case halts hnr with exit 1 through the CLI
    {
        std::ofstream m("acceptance_nr.json");
        m << R"({"variables": ["x","y","z"], "coefficients": {
            "a": {"scalar": "1", "factors": [["y",1]]},
            "b": {"scalar": "1", "factors": [["x",1]]},
            "c": {"scalar": "1", "factors": [["x",1]]},
            "d": {"scalar": "1", "factors": [["x",1]]}}})";
    }
    ok = ok && run_binary("hnr --manifest acceptance_nr.json") == 1;
    report(7, ok, "fiber classification realizes every type; NON_REDUCED halts hnr with exit 1; "
                  "SPLIT_PLANES stays out of the locus");
}

void criterion8() {
    // multiply each reference coefficient by the cube of its own fresh line
    DiagonalBundle b = refv();
    DiagonalBundle t{{b.coeff[0] * FactoredFn::of_curve(L("x+y+z"), 3),
                      b.coeff[1] * FactoredFn::of_curve(L("x-y+z"), 3),
                      b.coeff[2] * FactoredFn::of_curve(L("x+y-z"), 3),
                      b.coeff[3] * FactoredFn::of_curve(L("x+2*y+z"), 3)}};
    bool ok = validate(t).pass;
    EngineResult r = compute_group(t);
    ok = ok && check_refv_result(r, false);  // criterion 1 outputs unchanged

    // criterion 2 is independent of the bundle; recheck against the twist
    Symbol2 s = alpha_symbol();
    ok = ok && residue_codim1(s, L("x")).equals(r.locus.components[0].gamma.inv());

    // criterion 3 outputs for the twisted d
    for (const auto& line : {L("x"), L("y"), L("z")})
        ok = ok && is_cube_in_Kx(t.coeff[3], line);
    ok = ok && !is_cube_in_K(t.coeff[3]);

    // criterion 4 outputs for the twisted labeling
    std::vector<FactoredFn> elems = {t.coeff[0],
                                     t.coeff[1],
                                     t.coeff[0] * t.coeff[1],
                                     t.coeff[3],
                                     t.coeff[0] * t.coeff[3],
                                     t.coeff[1] * t.coeff[3]};
    for (const auto& e : elems) ok = ok && !is_cube_in_K(e);

    // flipping the orientation convention negates members, keeps order 3
    EngineResult flipped = compute_group(refv(), GammaConvention::EarlierOverLater);
    ok = ok && flipped.group.order == 3;
    std::set<std::vector<int>> neg, got;
    EngineResult base = compute_group(refv());
    for (const auto& v : base.group.proven) {
        std::vector<int> n = v.a;
        for (int& e : n) e = -e;
        neg.insert(n);
    }
    for (const auto& v : flipped.group.proven) got.insert(v.a);
    ok = ok && neg == got;
    report(8, ok, "cube twists leave criteria 1-4 outputs unchanged; the convention flip negates "
                  "members and keeps order 3");
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
    } catch (const std::exception& e) {
        std::cout << "acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed"
                                : std::to_string(failures) + " acceptance criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
