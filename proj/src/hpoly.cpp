#include <cubnr/hpoly.hpp>

#include <cubnr/errors.hpp>

#include <algorithm>
#include <cassert>

namespace cubnr {

HPoly HPoly::constant(const Rational& c) {
    HPoly p;
    if (c != 0) p.terms_[{0, 0, 0}] = c;
    return p;
}

HPoly HPoly::variable(int idx) {
    Expt e{0, 0, 0};
    e[static_cast<size_t>(idx)] = 1;
    return monomial(e, Rational(1));
}

HPoly HPoly::monomial(const Expt& e, const Rational& c) {
    HPoly p;
    if (c != 0) {
        p.deg_ = e[0] + e[1] + e[2];
        p.terms_[e] = c;
    }
    return p;
}

HPoly HPoly::from_terms(int degree, TermMap terms) {
    HPoly p;
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0) {
            it = terms.erase(it);
        } else {
            assert(it->first[0] + it->first[1] + it->first[2] == degree);
            ++it;
        }
    }
    if (!terms.empty()) p.deg_ = degree;
    p.terms_ = std::move(terms);
    return p;
}

const Rational& HPoly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.begin()->second;
}

HPoly HPoly::operator-() const {
    HPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

HPoly add(const HPoly& p, const HPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.degree() != q.degree())
        fail_input("DEGREE_MISMATCH", "adding homogeneous polynomials of degrees " +
                                          std::to_string(p.degree()) + " and " +
                                          std::to_string(q.degree()));
    HPoly::TermMap t = p.terms();
    for (const auto& [e, c] : q.terms()) {
        auto [it, inserted] = t.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    return HPoly::from_terms(p.degree(), std::move(t));
}

HPoly HPoly::operator*(const HPoly& o) const {
    if (is_zero() || o.is_zero()) return HPoly();
    TermMap t;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expt e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            auto [it, inserted] = t.emplace(e, c1 * c2);
            if (!inserted) {
                it->second += c1 * c2;
                if (it->second == 0) t.erase(it);
            }
        }
    return from_terms(deg_ + o.deg_, std::move(t));
}

HPoly HPoly::operator*(const Rational& r) const {
    if (r == 0) return HPoly();
    HPoly p = *this;
    for (auto& [e, c] : p.terms_) c *= r;
    return p;
}

bool HPoly::operator<(const HPoly& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    GrlexDesc before;
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return before(a->first, b->first);
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.end() && b != o.terms_.end();
}

HPoly HPoly::pow(int e) const {
    assert(e >= 0);
    HPoly acc = constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

HPoly HPoly::derivative(int var) const {
    TermMap t;
    size_t v = static_cast<size_t>(var);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Expt d = e;
        d[v] -= 1;
        t[d] = c * Rational(e[v]);
    }
    return t.empty() ? HPoly() : from_terms(deg_ - 1, std::move(t));
}

Rational HPoly::eval(const std::array<Rational, 3>& p) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (size_t v = 0; v < 3; ++v)
            for (int i = 0; i < e[v]; ++i) m *= p[v];
        acc += m;
    }
    return acc;
}

int HPoly::valuation_in_var(int var) const {
    if (is_zero()) return 0;
    int m = deg_;
    for (const auto& [e, c] : terms_) m = std::min(m, e[static_cast<size_t>(var)]);
    return m;
}

HPoly HPoly::normalized() const {
    if (is_zero()) return *this;
    Int l = 1;
    for (const auto& [e, c] : terms_) l = boost::multiprecision::lcm(l, den(c));
    Int g = 0;
    for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, num(c) * (l / den(c)));
    Rational scale(l, g);
    if (leading_coeff() < 0) scale = -scale;
    return *this * scale;
}

bool HPoly::is_normalized() const { return *this == normalized(); }

std::string HPoly::to_string(const VarSet& vars) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool has_vars = e[0] + e[1] + e[2] > 0;
        bool coeff_one = (a == 1) && has_vars;
        if (!coeff_one) out += rat_to_string(a);
        bool need_star = !coeff_one;
        for (size_t v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (need_star) out += "*";
            out += vars.names[v];
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
            need_star = true;
        }
    }
    return out;
}

// ---- exact division -------------------------------------------------------

bool divides(const HPoly& q, const HPoly& p) {
    if (q.is_zero()) return p.is_zero();
    if (p.is_zero()) return true;
    if (p.degree() < q.degree()) return false;
    try {
        (void)exact_div(p, q);
        return true;
    } catch (const Failure&) {
        return false;
    }
}

HPoly exact_div(const HPoly& p, const HPoly& q) {
    if (q.is_zero()) fail_input("NOT_DIVISIBLE", "division by the zero polynomial");
    if (p.is_zero()) return HPoly();
    if (p.degree() < q.degree()) fail_input("NOT_DIVISIBLE", "quotient degree would be negative");
    HPoly rem = p;
    HPoly::TermMap qt;
    const auto& lead = *q.terms().begin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms().begin();
        Expt d{rl.first[0] - lead.first[0], rl.first[1] - lead.first[1],
               rl.first[2] - lead.first[2]};
        if (d[0] < 0 || d[1] < 0 || d[2] < 0)
            fail_input("NOT_DIVISIBLE", "leading monomial not divisible");
        Rational coef = rl.second / lead.second;
        qt[d] = coef;
        rem = sub(rem, q * HPoly::monomial(d, coef));
    }
    return HPoly::from_terms(p.degree() - q.degree(), std::move(qt));
}

// ---- gcd via dehomogenization to two variables ----------------------------

namespace {

// Bivariate polynomial in x over Q[y]: coefficient of x^i is a UPoly in y.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& b) {
    while (!b.empty() && b.back().is_zero()) b.pop_back();
}

int bdeg(const BPoly& b) { return static_cast<int>(b.size()) - 1; }

UPoly bcontent(const BPoly& b) {
    UPoly c;
    for (const auto& u : b) c = gcd(c, u);
    return c;
}

BPoly bdiv_upoly(const BPoly& b, const UPoly& d) {
    BPoly out;
    out.reserve(b.size());
    for (const auto& u : b) out.push_back(u.is_zero() ? u : exact_div(u, d));
    return out;
}

BPoly bmul_upoly(const BPoly& b, const UPoly& m) {
    BPoly out;
    out.reserve(b.size());
    for (const auto& u : b) out.push_back(u * m);
    return out;
}

BPoly bsub(const BPoly& a, const BPoly& b) {
    BPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        UPoly u = i < a.size() ? a[i] : UPoly();
        UPoly v = i < b.size() ? b[i] : UPoly();
        out[i] = u - v;
    }
    btrim(out);
    return out;
}

// Pseudo-remainder of a by b in (Q[y])[x]; deg a >= deg b >= 0, b nonzero.
BPoly bprem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    int db = bdeg(b);
    while (bdeg(a) >= db && !a.empty()) {
        int shift = bdeg(a) - db;
        UPoly la = a.back();
        a = bmul_upoly(a, lb);
        BPoly s(static_cast<size_t>(shift), UPoly());
        for (const auto& u : b) s.push_back(u * la);
        a = bsub(a, s);
        btrim(a);
    }
    return a;
}

BPoly bprimitive(const BPoly& b) {
    UPoly c = bcontent(b);
    if (c.is_zero()) return b;
    return bdiv_upoly(b, c);
}

// Primitive PRS gcd in (Q[y])[x].
BPoly bgcd(BPoly a, BPoly b) {
    btrim(a);
    btrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly ca = bcontent(a), cb = bcontent(b);
    UPoly c = gcd(ca, cb);
    a = bdiv_upoly(a, ca);
    b = bdiv_upoly(b, cb);
    if (bdeg(a) < bdeg(b)) std::swap(a, b);
    while (true) {
        BPoly r = bprem(a, b);
        btrim(r);
        if (r.empty()) break;
        a = b;
        b = bprimitive(r);
    }
    if (bdeg(b) == 0) return {c};  // x-degree 0: only the content survives
    return bmul_upoly(bprimitive(b), c);
}

// p(x, y, 1) for homogeneous p with z not dividing p.
BPoly dehomogenize_z(const HPoly& p) {
    BPoly out;
    for (const auto& [e, coef] : p.terms()) {
        size_t xi = static_cast<size_t>(e[0]);
        if (out.size() <= xi) out.resize(xi + 1);
        out[xi] = out[xi] + UPoly::monomial(e[1], coef);
    }
    btrim(out);
    return out;
}

// Inverse of dehomogenize_z: total degree of b equals its honest degree.
HPoly homogenize_z(const BPoly& b) {
    int total = 0;
    for (size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) total = std::max(total, static_cast<int>(i) + b[i].degree());
    HPoly::TermMap t;
    for (size_t i = 0; i < b.size(); ++i) {
        const UPoly& u = b[i];
        for (int j = 0; j <= u.degree(); ++j) {
            if (u[j] == 0) continue;
            Expt e{static_cast<int>(i), j, total - static_cast<int>(i) - j};
            t[e] = u[j];
        }
    }
    return HPoly::from_terms(total, std::move(t));
}

}  // namespace

HPoly gcd(const HPoly& p, const HPoly& q) {
    if (p.is_zero() && q.is_zero())
        fail_input("NOT_DIVISIBLE", "gcd of two zero polynomials");
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();

    // Split off the common monomial part so both sides become
    // coprime to z before dehomogenizing.
    Expt m{0, 0, 0};
    HPoly a = p, b = q;
    for (int v = 0; v < 3; ++v) {
        int k = std::min(a.valuation_in_var(v), b.valuation_in_var(v));
        m[static_cast<size_t>(v)] = k;
    }
    HPoly mono = HPoly::monomial(m, Rational(1));
    if (m != Expt{0, 0, 0}) {
        a = exact_div(a, mono);
        b = exact_div(b, mono);
    }
    int za = a.valuation_in_var(2), zb = b.valuation_in_var(2);
    HPoly za_free = za > 0 ? exact_div(a, HPoly::monomial({0, 0, za}, Rational(1))) : a;
    HPoly zb_free = zb > 0 ? exact_div(b, HPoly::monomial({0, 0, zb}, Rational(1))) : b;

    BPoly g = bgcd(dehomogenize_z(za_free), dehomogenize_z(zb_free));
    HPoly core = homogenize_z(g);
    return (mono * core).normalized();
}

bool is_squarefree(const HPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    HPoly g = gcd(p, p.derivative(0));
    if (g.degree() > 0) return false;
    g = gcd(p, p.derivative(1));
    if (g.degree() > 0) return false;
    g = gcd(p, p.derivative(2));
    return g.degree() == 0;
}

// ---- restriction ----------------------------------------------------------

BinForm BinForm::linear(const Rational& cs, const Rational& ct) {
    return BinForm{1, {ct, cs}};  // c[0] = t-coefficient, c[1] = s-coefficient
}

bool BinForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

BinForm BinForm::operator*(const BinForm& o) const {
    BinForm out{deg + o.deg, std::vector<Rational>(static_cast<size_t>(deg + o.deg) + 1, Rational(0))};
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    return out;
}

BinForm BinForm::operator+(const BinForm& o) const {
    assert(deg == o.deg);
    BinForm out = *this;
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += o.c[i];
    return out;
}

BinForm BinForm::operator*(const Rational& r) const {
    BinForm out = *this;
    for (auto& x : out.c) x *= r;
    return out;
}

BinForm BinForm::pow(int e) const {
    BinForm acc{0, {Rational(1)}};
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::array<Rational, 3> CurveParam::eval(const Rational& s, const Rational& t) const {
    std::array<Rational, 3> out;
    for (size_t v = 0; v < 3; ++v) {
        Rational acc(0);
        for (size_t i = 0; i < coords[v].c.size(); ++i) {
            Rational m = coords[v].c[i];
            for (size_t k = 0; k < i; ++k) m *= s;
            for (int k = 0; k < coords[v].deg - static_cast<int>(i); ++k) m *= t;
            acc += m;
        }
        out[v] = acc;
    }
    return out;
}

Restriction restrict_to_curve(const HPoly& p, const CurveParam& L) {
    if (p.is_zero()) fail_input("RESTRICTION_ZERO", "restriction of the zero polynomial");
    int total = p.degree() * L.deg;
    BinForm acc{total, std::vector<Rational>(static_cast<size_t>(total) + 1, Rational(0))};
    for (const auto& [e, coef] : p.terms()) {
        BinForm m{0, {Rational(1)}};
        for (size_t v = 0; v < 3; ++v)
            if (e[v] > 0) m = m * L.coords[v].pow(e[v]);
        acc = acc + m * coef;
    }
    if (acc.is_zero())
        fail_input("RESTRICTION_ZERO", "the curve divides the polynomial");
    // Chart t = 1: lambda = s/t; c[i] becomes the coefficient of lambda^i.
    UPoly finite{std::vector<Rational>(acc.c)};
    return Restriction{finite, total - finite.degree()};
}

}  // namespace cubnr
