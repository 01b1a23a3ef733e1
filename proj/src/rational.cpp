#include <cubnr/rational.hpp>

#include <cubnr/errors.hpp>

#include <cctype>

namespace cubnr {

std::string rat_to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

Rational rat_from_string(const std::string& s) {
    size_t i = 0;
    auto err = [&](const std::string& why) {
        fail_input("PARSE_ERROR", "bad rational literal '" + s + "': " + why);
    };
    if (s.empty()) err("empty");
    bool neg = false;
    if (s[i] == '-') {
        neg = true;
        ++i;
    }
    auto read_int = [&]() -> Int {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) err("digit expected");
        Int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    };
    Int n = read_int();
    Int d = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        d = read_int();
        if (d == 0) err("zero denominator");
    }
    if (i != s.size()) err("trailing characters");
    Rational r(n, d);
    return neg ? Rational(-r) : r;
}

}  // namespace cubnr
