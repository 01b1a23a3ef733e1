#include <cubnr/upoly.hpp>

#include <cubnr/errors.hpp>

#include <algorithm>
#include <cstdint>

namespace cubnr {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) {
    if (c == 0) return UPoly();
    return UPoly({c});
}

UPoly UPoly::monomial(int degree, const Rational& c) {
    if (c == 0) return UPoly();
    std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& r) const {
    if (r == 0) return UPoly();
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= r;
    return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<int>(i));
    return UPoly(std::move(v));
}

Rational UPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::monic() const {
    return *this * Rational(Rational(1) / leading());
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
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
        bool coeff_one = (a == 1) && i > 0;
        if (!coeff_one) out += rat_to_string(a);
        if (i > 0) {
            if (!coeff_one) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail_input("NOT_DIVISIBLE", "division by the zero polynomial");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        Rational& top = r[static_cast<size_t>(i)];
        if (top == 0) continue;
        Rational f = top / b.leading();
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) fail_input("NOT_DIVISIBLE", "univariate division left a remainder");
    return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        (void)q;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.monic();
}

SquarefreeDecomp yun_squarefree(const UPoly& u) {
    if (u.is_zero()) fail_input("NOT_DIVISIBLE", "squarefree decomposition of zero");
    SquarefreeDecomp out;
    out.content = u.leading();
    if (u.is_constant()) return out;

    UPoly f = u.monic();
    UPoly fp = f.derivative();
    UPoly d = gcd(f, fp);
    UPoly a = exact_div(f, d);
    UPoly b = exact_div(fp, d);
    UPoly c = b - a.derivative();
    int mult = 1;
    while (!a.is_constant()) {
        UPoly g = gcd(a, c);
        if (g.degree() > 0) out.parts.emplace_back(g, mult);
        a = exact_div(a, g);
        b = exact_div(c, g);
        c = b - a.derivative();
        ++mult;
    }
    return out;
}

namespace {

// All positive divisors of |n|; n is nonzero and within the caller's bound.
std::vector<std::int64_t> divisors64(std::int64_t n) {
    if (n < 0) n = -n;
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

RationalRoots rational_roots(const UPoly& u) {
    RationalRoots out;
    if (u.is_zero()) fail_unsupported("UNSUPPORTED_POINT", "root search on the zero polynomial");
    UPoly f = u;
    // Strip roots at 0 first.
    while (!f.is_constant() && f[0] == 0) {
        out.roots.emplace_back(0);
        std::vector<Rational> v(f.coeffs().begin() + 1, f.coeffs().end());
        f = UPoly(std::move(v));
    }
    while (!f.is_constant()) {
        // Clear denominators, divide by integer content.
        Int lcm = 1;
        for (const auto& c : f.coeffs()) lcm = boost::multiprecision::lcm(lcm, den(c));
        std::vector<Int> z;
        z.reserve(f.coeffs().size());
        Int content = 0;
        for (const auto& c : f.coeffs()) {
            Int v = num(c) * (lcm / den(c));
            z.push_back(v);
            content = boost::multiprecision::gcd(content, v);
        }
        for (auto& v : z) v /= content;

        const Int& a0 = z.front();
        const Int& an = z.back();
        const Int bound("1000000000000");  // keeps the divisor scan exact and fast
        if (boost::multiprecision::abs(a0) > bound || boost::multiprecision::abs(an) > bound)
            fail_unsupported("UNSUPPORTED_POINT",
                             "rational root search bound exceeded for " + f.to_string());
        bool found = false;
        for (std::int64_t p : divisors64(a0.convert_to<std::int64_t>())) {
            for (std::int64_t q : divisors64(an.convert_to<std::int64_t>())) {
                for (int s : {1, -1}) {
                    Rational cand(Int(s * p), Int(q));
                    if (f.eval(cand) == 0) {
                        out.roots.push_back(cand);
                        UPoly lin({-cand, Rational(1)});
                        f = exact_div(f, lin);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.residual = f;
    return out;
}

}  // namespace cubnr
