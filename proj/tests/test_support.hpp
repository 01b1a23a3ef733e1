#ifndef CUBNR_TEST_SUPPORT_HPP
#define CUBNR_TEST_SUPPORT_HPP

#include <cubnr/function_field.hpp>
#include <cubnr/parse.hpp>

#include <random>
#include <vector>

namespace cubnr::testing {

inline HPoly P(const std::string& expr) { return parse_poly(expr, VarSet{}); }

inline Curve L(const std::string& expr) { return Curve::line(P(expr)); }

inline UPoly U(std::vector<long long> coeffs_low_first) {
    std::vector<Rational> c;
    c.reserve(coeffs_low_first.size());
    for (long long v : coeffs_low_first) c.emplace_back(v);
    return UPoly(std::move(c));
}

// Deterministic generator for randomized suites.
class Rng {
public:
    explicit Rng(unsigned long long seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational rational(int num_bound = 9, bool nonzero = false) {
        while (true) {
            int n = uniform(-num_bound, num_bound);
            int d = uniform(1, 4);
            if (nonzero && n == 0) continue;
            return Rational(n, d);
        }
    }

    // Random homogeneous polynomial with small support.
    HPoly hpoly(int degree, int max_terms = 4, bool nonzero = true) {
        while (true) {
            HPoly::TermMap t;
            int terms = uniform(1, max_terms);
            for (int k = 0; k < terms; ++k) {
                int i = uniform(0, degree);
                int j = uniform(0, degree - i);
                Rational c = rational();
                if (c == 0) continue;
                Expt e{i, j, degree - i - j};
                auto [it, inserted] = t.emplace(e, c);
                if (!inserted) it->second += c;
            }
            for (auto it = t.begin(); it != t.end();)
                it = it->second == 0 ? t.erase(it) : std::next(it);
            if (t.empty() && nonzero) continue;
            return HPoly::from_terms(degree, std::move(t));
        }
    }

    UPoly upoly(int degree, bool monic = false) {
        std::vector<Rational> c(static_cast<size_t>(degree) + 1);
        for (auto& x : c) x = rational();
        if (monic)
            c.back() = 1;
        else
            while (c.back() == 0) c.back() = rational();
        return UPoly(std::move(c));
    }

    // A random line with small integer coefficients, not the zero form.
    Curve line() {
        while (true) {
            int a = uniform(-3, 3), b = uniform(-3, 3), c = uniform(-3, 3);
            if (a == 0 && b == 0 && c == 0) continue;
            HPoly::TermMap t;
            if (a) t[{1, 0, 0}] = a;
            if (b) t[{0, 1, 0}] = b;
            if (c) t[{0, 0, 1}] = c;
            return Curve::line(HPoly::from_terms(1, std::move(t)));
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace cubnr::testing

#endif
