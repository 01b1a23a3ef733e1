#include <cubnr/function_field.hpp>

#include <cubnr/errors.hpp>

#include <algorithm>
#include <cassert>
#include <map>

namespace cubnr {

// ---- PlanePoint -------------------------------------------------------------

PlanePoint PlanePoint::make(const Rational& a, const Rational& b, const Rational& c) {
    std::array<Rational, 3> v{a, b, c};
    size_t pivot = 3;
    for (size_t i = 0; i < 3; ++i)
        if (v[i] != 0) {
            pivot = i;
            break;
        }
    if (pivot == 3) fail_input("INVALID_POINT", "all projective coordinates are zero");
    Rational s = v[pivot];
    for (auto& x : v) x /= s;
    return PlanePoint{v};
}

std::string PlanePoint::to_string() const {
    return "[" + rat_to_string(v[0]) + ":" + rat_to_string(v[1]) + ":" + rat_to_string(v[2]) + "]";
}

std::string to_string(IrredStatus s) {
    switch (s) {
        case IrredStatus::ProvenLine: return "PROVEN_LINE";
        case IrredStatus::ProvenConic: return "PROVEN_CONIC";
        case IrredStatus::Attested: return "ATTESTED";
    }
    return "?";
}

// ---- Curve ------------------------------------------------------------------

namespace {

Rational coeff_of(const HPoly& f, const Expt& e) {
    auto it = f.terms().find(e);
    return it == f.terms().end() ? Rational(0) : it->second;
}

// Symmetric matrix of a quadratic form.
std::array<std::array<Rational, 3>, 3> quad_matrix(const HPoly& f) {
    std::array<std::array<Rational, 3>, 3> m;
    Expt sq[3] = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    Expt mixed[3][3];
    mixed[0][1] = {1, 1, 0};
    mixed[0][2] = {1, 0, 1};
    mixed[1][2] = {0, 1, 1};
    for (size_t i = 0; i < 3; ++i) m[i][i] = coeff_of(f, sq[i]);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            Rational half = coeff_of(f, mixed[i][j]) / 2;
            m[i][j] = half;
            m[j][i] = half;
        }
    return m;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Rational bilinear(const std::array<std::array<Rational, 3>, 3>& m,
                  const std::array<Rational, 3>& u, const std::array<Rational, 3>& v) {
    Rational acc(0);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) acc += u[i] * m[i][j] * v[j];
    return acc;
}

// Deterministic bounded search for a rational point on a conic; the first
// hit in height order becomes the stereographic center.
std::optional<PlanePoint> small_point_on(const HPoly& f, int height) {
    for (int h = 1; h <= height; ++h) {
        for (int a = -h; a <= h; ++a)
            for (int b = -h; b <= h; ++b)
                for (int c = -h; c <= h; ++c) {
                    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != h) continue;
                    if (a == 0 && b == 0 && c == 0) continue;
                    int lead = a != 0 ? a : (b != 0 ? b : c);
                    if (lead < 0) continue;
                    std::array<Rational, 3> p{Rational(a), Rational(b), Rational(c)};
                    if (f.eval(p) == 0) return PlanePoint::make(p[0], p[1], p[2]);
                }
    }
    return std::nullopt;
}

}  // namespace

Curve Curve::line(const HPoly& f0) {
    HPoly f = f0.normalized();
    if (f.degree() != 1 || f.is_zero())
        fail_input("INVALID_FACTOR", "not a line: " + f0.to_string());
    Rational a = coeff_of(f, {1, 0, 0}), b = coeff_of(f, {0, 1, 0}), c = coeff_of(f, {0, 0, 1});
    std::array<Rational, 3> A, B;
    if (a != 0) {
        A = {-b, a, Rational(0)};
        B = {-c, Rational(0), a};
    } else if (b != 0) {
        A = {Rational(1), Rational(0), Rational(0)};
        B = {Rational(0), -c, b};
    } else {
        A = {Rational(1), Rational(0), Rational(0)};
        B = {Rational(0), Rational(1), Rational(0)};
    }
    CurveParam param;
    param.deg = 1;
    for (size_t v = 0; v < 3; ++v) param.coords[v] = BinForm::linear(A[v], B[v]);
    return Curve(std::move(f), IrredStatus::ProvenLine, param);
}

Curve Curve::conic(const HPoly& f0) {
    HPoly f = f0.normalized();
    if (f.degree() != 2)
        fail_input("INVALID_FACTOR", "not a conic: " + f0.to_string());
    auto m = quad_matrix(f);
    if (det3(m) == 0)
        fail_input("INVALID_FACTOR",
                   "degree-2 factor is not absolutely irreducible (rank < 3): " + f.to_string());
    std::optional<CurveParam> param;
    std::optional<PlanePoint> base = small_point_on(f, 12);
    if (base) {
        const auto& r = base->v;
        size_t pivot = 0;
        while (r[pivot] == 0) ++pivot;
        std::array<Rational, 3> U{}, V{};
        size_t others[2], n = 0;
        for (size_t i = 0; i < 3; ++i)
            if (i != pivot) others[n++] = i;
        U[others[0]] = 1;
        V[others[1]] = 1;
        // Stereographic projection from the base point: [s:t] maps to
        // Q(D)R - 2B(R,D)D with D = sU + tV.
        BinForm qd = BinForm{2, {bilinear(m, V, V), Rational(2) * bilinear(m, U, V),
                                 bilinear(m, U, U)}};
        BinForm brd = BinForm::linear(bilinear(m, r, U), bilinear(m, r, V));
        CurveParam p;
        p.deg = 2;
        for (size_t v = 0; v < 3; ++v) {
            BinForm dv = BinForm::linear(U[v], V[v]);
            BinForm term = qd * r[v] + (brd * dv) * Rational(-2);
            p.coords[v] = term;
        }
        param = p;
    }
    Curve out(std::move(f), IrredStatus::ProvenConic, std::move(param));
    out.conic_base_ = base;
    return out;
}

Curve Curve::attested(const HPoly& f0) {
    HPoly f = f0.normalized();
    if (f.degree() < 3)
        fail_input("INVALID_FACTOR", "attested factors must have degree >= 3");
    if (!is_squarefree(f))
        fail_input("ATTESTATION_REFUTED", "attested factor is not squarefree: " + f.to_string());
    return Curve(std::move(f), IrredStatus::Attested, std::nullopt);
}

Curve Curve::from_poly(const HPoly& f, bool attested_irreducible) {
    if (f.is_zero() || f.degree() == 0)
        fail_input("INVALID_FACTOR", "a curve needs a nonconstant polynomial");
    switch (f.degree()) {
        case 1: return line(f);
        case 2: return conic(f);
        default:
            if (!attested_irreducible)
                fail_input("ATTESTATION_REQUIRED",
                           "degree >= 3 factor needs a geometric-irreducibility attestation: " +
                               f.to_string());
            return attested(f);
    }
}

const CurveParam& Curve::param() const {
    if (!param_)
        fail_unsupported("UNSUPPORTED_CURVE",
                         "no rational parametrization available for " + f_.to_string());
    return *param_;
}

bool Curve::contains(const PlanePoint& p) const { return f_.eval(p.v) == 0; }

std::array<Rational, 3> Curve::gradient(const PlanePoint& p) const {
    return {f_.derivative(0).eval(p.v), f_.derivative(1).eval(p.v), f_.derivative(2).eval(p.v)};
}

bool Curve::smooth_at(const PlanePoint& p) const {
    auto g = gradient(p);
    return g[0] != 0 || g[1] != 0 || g[2] != 0;
}

PlanePoint Curve::point_at(const Rational& s, const Rational& t) const {
    auto v = param().eval(s, t);
    return PlanePoint::make(v[0], v[1], v[2]);
}

std::pair<Rational, Rational> Curve::param_of_point(const PlanePoint& p) const {
    if (!contains(p))
        fail_input("POINT_NOT_ON_CURVE", p.to_string() + " is not on " + f_.to_string());
    const CurveParam& pa = param();
    if (pa.deg == 1) {
        // p = s*A + t*B with A = phi(1,0), B = phi(0,1).
        auto A = pa.eval(1, 0), B = pa.eval(0, 1);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) {
                Rational d = A[i] * B[j] - A[j] * B[i];
                if (d == 0) continue;
                Rational s = (p.v[i] * B[j] - p.v[j] * B[i]) / d;
                Rational t = (A[i] * p.v[j] - A[j] * p.v[i]) / d;
                return {s, t};
            }
        fail_input("POINT_NOT_ON_CURVE", "degenerate line parametrization");
    }
    // Conic: decompose p in the basis (R, U, V); the direction part gives
    // the parameter, and p = R picks the tangent direction at R.
    assert(conic_base_);
    const auto& r = conic_base_->v;
    size_t pivot = 0;
    while (r[pivot] == 0) ++pivot;
    size_t others[2], n = 0;
    for (size_t i = 0; i < 3; ++i)
        if (i != pivot) others[n++] = i;
    // alpha*R + b*U + c*V = p  =>  alpha = p[pivot]/r[pivot], then read b, c.
    Rational alpha = p.v[pivot] / r[pivot];
    Rational b = p.v[others[0]] - alpha * r[others[0]];
    Rational c = p.v[others[1]] - alpha * r[others[1]];
    if (b == 0 && c == 0) {
        auto m = quad_matrix(f_);
        std::array<Rational, 3> U{}, V{};
        U[others[0]] = 1;
        V[others[1]] = 1;
        // Tangent direction: B(R, sU + tV) = 0.
        Rational bu = bilinear(m, r, U), bv = bilinear(m, r, V);
        return {bv, -bu};
    }
    return {b, c};
}

// ---- FactoredFn ---------------------------------------------------------------

FactoredFn FactoredFn::merged(Rational scalar, std::vector<std::pair<Curve, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Curve, int>> out;
    for (auto& [c, e] : factors) {
        if (!out.empty() && out.back().first == c)
            out.back().second += e;
        else
            out.emplace_back(std::move(c), e);
    }
    std::erase_if(out, [](const auto& f) { return f.second == 0; });
    FactoredFn g;
    g.scalar_ = std::move(scalar);
    g.factors_ = std::move(out);
    return g;
}

FactoredFn FactoredFn::from_parts(const Rational& scalar,
                                  std::vector<std::pair<Curve, int>> factors) {
    if (scalar == 0) fail_input("INVALID_FACTORED_FN", "zero scalar");
    for (const auto& [c, e] : factors)
        if (e == 0) fail_input("INVALID_FACTORED_FN", "zero exponent on " + c.poly().to_string());
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (factors[i].first == factors[j].first)
                fail_input("INVALID_FACTORED_FN",
                           "repeated factor curve " + factors[i].first.poly().to_string());
            HPoly g = gcd(factors[i].first.poly(), factors[j].first.poly());
            if (g.degree() > 0)
                fail_input("ATTESTATION_REFUTED",
                           "factors share a common divisor " + g.to_string());
        }
    return merged(scalar, std::move(factors));
}

FactoredFn FactoredFn::of_curve(const Curve& c, int exponent) {
    return from_parts(Rational(1), {{c, exponent}});
}

int FactoredFn::total_degree() const {
    int d = 0;
    for (const auto& [c, e] : factors_) d += c.degree() * e;
    return d;
}

int FactoredFn::valuation(const Curve& c) const {
    for (const auto& [f, e] : factors_)
        if (f == c) return e;
    return 0;
}

FactoredFn FactoredFn::operator*(const FactoredFn& o) const {
    std::vector<std::pair<Curve, int>> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return merged(scalar_ * o.scalar_, std::move(all));
}

FactoredFn FactoredFn::inv() const {
    FactoredFn g = *this;
    g.scalar_ = Rational(1) / scalar_;
    for (auto& [c, e] : g.factors_) e = -e;
    return g;
}

FactoredFn FactoredFn::pow(int e) const {
    if (e == 0) return one();
    FactoredFn g = *this;
    for (auto& [c, k] : g.factors_) k *= e;
    int n = e < 0 ? -e : e;
    Rational s(1);
    Rational base = e < 0 ? Rational(Rational(1) / scalar_) : scalar_;
    while (n > 0) {  // square-and-multiply on the scalar
        if (n & 1) s *= base;
        base *= base;
        n >>= 1;
    }
    g.scalar_ = std::move(s);
    return g;
}

std::string FactoredFn::to_string(const VarSet& vars) const {
    std::string out;
    if (scalar_ != 1 || factors_.empty()) out = rat_to_string(scalar_);
    for (const auto& [c, e] : factors_) {
        if (!out.empty()) out += " * ";
        out += "(" + c.poly().to_string(vars) + ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---- CubeClass ----------------------------------------------------------------

namespace {

int mod3(long long e) {
    int r = static_cast<int>(e % 3);
    return r < 0 ? r + 3 : r;
}

// Refine (poly, exponent) pairs to a pairwise-coprime squarefree basis with
// exponents summed mod 3.
std::vector<std::pair<UPoly, int>> coprime_refine(std::vector<std::pair<UPoly, int>> in) {
    std::vector<std::pair<UPoly, int>> basis;
    std::vector<std::pair<UPoly, int>> queue = std::move(in);
    while (!queue.empty()) {
        auto [q, e] = queue.back();
        queue.pop_back();
        q = q.monic();
        if (q.degree() == 0) continue;
        bool split = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            UPoly g = gcd(q, basis[i].first);
            if (g.degree() == 0) continue;
            if (g == basis[i].first && g == q) {
                basis[i].second += e;
                split = true;
                break;
            }
            // Split the basis element and re-queue all the pieces.
            UPoly b_rest = exact_div(basis[i].first, g);
            UPoly q_rest = exact_div(q, g);
            int be = basis[i].second;
            basis.erase(basis.begin() + static_cast<long>(i));
            if (b_rest.degree() > 0) queue.emplace_back(b_rest, be);
            queue.emplace_back(g, be + e);
            if (q_rest.degree() > 0) queue.emplace_back(q_rest, e);
            split = true;
            break;
        }
        if (!split) basis.emplace_back(q, e);
    }
    std::vector<std::pair<UPoly, int>> out;
    for (auto& [q, e] : basis) {
        int r = mod3(e);
        if (r != 0) out.emplace_back(q, r);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

}  // namespace

CubeClass CubeClass::identity(const Curve& carrier) { return CubeClass(carrier); }

CubeClass CubeClass::from_divisor(const Curve& carrier,
                                  std::vector<std::pair<UPoly, int>> finite, int infinity) {
    CubeClass out(carrier);
    out.finite_ = coprime_refine(std::move(finite));
    out.inf_ = mod3(infinity);
    long long total = out.inf_;
    for (const auto& [q, e] : out.finite_) total += static_cast<long long>(q.degree()) * e;
    if (total % 3 != 0)
        throw std::logic_error("cube class divisor degree not divisible by 3");
    return out;
}

CubeClass CubeClass::mul(const CubeClass& o) const {
    if (!(carrier_ == o.carrier_))
        fail_input("CARRIER_MISMATCH", "cube classes live on different curves");
    std::vector<std::pair<UPoly, int>> all = finite_;
    all.insert(all.end(), o.finite_.begin(), o.finite_.end());
    return from_divisor(carrier_, std::move(all), inf_ + o.inf_);
}

CubeClass CubeClass::inv() const {
    std::vector<std::pair<UPoly, int>> neg = finite_;
    for (auto& [q, e] : neg) e = 3 - e;
    return from_divisor(carrier_, std::move(neg), (3 - inf_) % 3);
}

CubeClass CubeClass::pow(int e) const {
    int r = mod3(e);
    if (r == 0) return identity(carrier_);
    if (r == 1) return *this;
    return inv();  // squaring equals inverting mod 3
}

std::string CubeClass::to_string() const {
    if (is_trivial()) return "1";
    std::string out;
    for (const auto& [q, e] : finite_) {
        if (!out.empty()) out += " * ";
        out += "(" + q.to_string() + ")^" + std::to_string(e);
    }
    if (inf_ != 0) {
        if (!out.empty()) out += " * ";
        out += "(inf)^" + std::to_string(inf_);
    }
    return out;
}

// ---- residue machinery ----------------------------------------------------

CubeClass residue_unit(const FactoredFn& g, const Curve& c, std::optional<int> chart_var) {
    if (g.total_degree() % 3 != 0)
        fail_input("INVALID_FACTORED_FN",
                   "cube-class extraction needs total degree divisible by 3, got " +
                       std::to_string(g.total_degree()));
    int chart = -1;
    if (chart_var) {
        chart = *chart_var;
        if (chart < 0 || chart > 2 || Curve::coordinate_line(chart) == c)
            fail_input("INVALID_CHART", "chart line must differ from the carrier");
    } else {
        for (int v = 0; v < 3; ++v)
            if (!(Curve::coordinate_line(v) == c)) {
                chart = v;
                break;
            }
    }

    int val = g.valuation(c);
    // Unit part g * (F_C / chart^{deg C})^{-val}: the factor's own exponent
    // cancels and the chart line absorbs the degree.
    std::map<Curve, long long> expo;
    for (const auto& [d, e] : g.factors()) expo[d] += e;
    expo[c] -= val;
    expo[Curve::coordinate_line(chart)] += static_cast<long long>(val) * c.degree();

    // A unit whose exponents all vanish mod 3 is a cube; its class is
    // trivial on any carrier, parametrized or not.
    bool cube = true;
    for (const auto& [d, e] : expo) cube = cube && (d == c || e % 3 == 0);
    if (cube) return CubeClass::identity(c);

    const CurveParam& par = c.param();
    std::vector<std::pair<UPoly, int>> finite;
    long long inf = 0;
    for (const auto& [d, e] : expo) {
        if (e == 0 || d == c) continue;
        Restriction r;
        try {
            r = restrict_to_curve(d.poly(), par);
        } catch (const Failure& f) {
            if (f.code() == "RESTRICTION_ZERO")
                fail_input("ATTESTATION_REFUTED",
                           "factor " + d.poly().to_string() + " vanishes on " +
                               c.poly().to_string() + "; it cannot be irreducible");
            throw;
        }
        SquarefreeDecomp sf = yun_squarefree(r.finite);
        for (const auto& [part, mult] : sf.parts)
            finite.emplace_back(part, mod3(static_cast<long long>(mult) * e));
        inf += static_cast<long long>(r.inf_order) * e;
    }
    return CubeClass::from_divisor(c, std::move(finite), mod3(inf));
}

bool is_cube_in_K(const FactoredFn& g) {
    for (const auto& [c, e] : g.factors())
        if (e % 3 != 0) return false;
    return true;
}

bool is_cube_in_Kx(const FactoredFn& g, const Curve& c) {
    if (g.valuation(c) % 3 != 0) return false;
    return residue_unit(g, c).is_trivial();
}

bool is_cube_in_KP(const FactoredFn& g, const PlanePoint& p) {
    for (const auto& [c, e] : g.factors()) {
        if (e % 3 == 0) continue;  // cube factors are cubes locally regardless
        if (!c.contains(p)) continue;
        if (!c.smooth_at(p))
            fail_unsupported("UNSUPPORTED_LOCAL_GEOMETRY",
                             "factor " + c.poly().to_string() + " is singular at " +
                                 p.to_string());
        return false;
    }
    return true;
}

int point_residue(const CubeClass& alpha, const PlanePoint& p, int power) {
    const Curve& c = alpha.carrier();
    auto [s, t] = c.param_of_point(p);
    long long ord = 0;
    if (t == 0) {
        ord = alpha.infinity_exponent();
    } else {
        Rational lambda = s / t;
        for (const auto& [q, e] : alpha.finite_part())
            if (q.eval(lambda) == 0) {
                ord = e;
                break;
            }
    }
    return mod3(ord * power);
}

SupportInfo support_points(const CubeClass& alpha) {
    SupportInfo out;
    const Curve& c = alpha.carrier();
    for (const auto& [q, e] : alpha.finite_part()) {
        RationalRoots rr = rational_roots(q);
        for (const Rational& root : rr.roots) out.points.push_back({c.point_at(root, 1), e});
        if (!rr.residual.is_constant()) out.irrational.push_back(rr.residual);
    }
    if (alpha.infinity_exponent() != 0)
        out.points.push_back({c.point_at(1, 0), alpha.infinity_exponent()});
    return out;
}

}  // namespace cubnr
