#include <cubnr/parse.hpp>

#include <cubnr/errors.hpp>

#include <cctype>
#include <optional>

namespace cubnr {

namespace {

struct Parser {
    const std::string& src;
    const VarSet& vars;
    size_t pos = 0;

    [[noreturn]] void err(const std::string& why, size_t at) {
        fail_input("PARSE_ERROR", why + " at position " + std::to_string(at));
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
            err("integer expected", pos);
        Int v = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
            v = v * 10 + (src[pos] - '0');
            ++pos;
        }
        (void)start;
        return v;
    }

    std::optional<int> variable() {
        skip_ws();
        if (pos >= src.size()) return std::nullopt;
        if (!std::isalpha(static_cast<unsigned char>(src[pos])) && src[pos] != '_')
            return std::nullopt;
        size_t start = pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        std::string name = src.substr(start, pos - start);
        for (int v = 0; v < 3; ++v)
            if (vars.names[static_cast<size_t>(v)] == name) return v;
        err("unknown variable '" + name + "'", start);
    }

    HPoly base() {
        skip_ws();
        if (pos >= src.size()) err("operand expected", pos);
        if (eat('(')) {
            HPoly e = expr();
            if (!eat(')')) err("')' expected", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(src[pos]))) {
            Int n = integer();
            if (eat('/')) {
                size_t at = pos;
                Int d = integer();
                if (d == 0) err("zero denominator", at);
                return HPoly::constant(Rational(n, d));
            }
            return HPoly::constant(Rational(n));
        }
        if (auto v = variable()) return HPoly::variable(*v);
        err(std::string("unexpected character '") + src[pos] + "'", pos);
    }

    HPoly factor() {
        HPoly b = base();
        if (eat('^')) {
            skip_ws();
            size_t at = pos;
            if (pos < src.size() && src[pos] == '-')
                err("negative exponent", at);
            Int e = integer();
            if (e > 64) err("exponent too large", at);
            return b.pow(e.convert_to<int>());
        }
        return b;
    }

    [[noreturn]] void homogeneity_error() {
        throw Failure(Fail::Input, "NOT_HOMOGENEOUS", "terms of unequal degree");
    }

    HPoly term() {
        HPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    HPoly expr() {
        skip_ws();
        bool neg = eat('-');
        HPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                HPoly t = term();
                if (!acc.is_zero() && !t.is_zero() && acc.degree() != t.degree())
                    homogeneity_error();
                acc = add(acc, t);
            } else if (eat('-')) {
                HPoly t = term();
                if (!acc.is_zero() && !t.is_zero() && acc.degree() != t.degree())
                    homogeneity_error();
                acc = sub(acc, t);
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

HPoly parse_poly(const std::string& expr, const VarSet& vars) {
    Parser p{expr, vars};
    HPoly out = p.expr();
    p.skip_ws();
    if (p.pos != expr.size())
        fail_input("PARSE_ERROR", std::string("unexpected character '") + expr[p.pos] +
                                      "' at position " + std::to_string(p.pos));
    return out;
}

}  // namespace cubnr
