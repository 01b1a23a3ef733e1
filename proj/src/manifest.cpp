#include <cubnr/manifest.hpp>

#include <cubnr/errors.hpp>
#include <cubnr/parse.hpp>

#include <fstream>

namespace cubnr {

GammaConvention convention_from_string(const std::string& s) {
    if (s == "later-over-earlier") return GammaConvention::LaterOverEarlier;
    if (s == "earlier-over-later") return GammaConvention::EarlierOverLater;
    fail_input("MANIFEST_ERROR", "unknown convention '" + s +
                                     "' (expected later-over-earlier or earlier-over-later)");
}

namespace {

Rational scalar_from_json(const json& j, const std::string& where) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    fail_input("MANIFEST_ERROR", where + ": scalar must be a string like \"-2/5\" or an integer");
}

FactoredFn coefficient_from_json(const json& j, const std::string& name, const VarSet& vars,
                                 const std::map<std::string, std::string>& attestations) {
    if (!j.is_object() || !j.contains("scalar") || !j.contains("factors"))
        fail_input("MANIFEST_ERROR",
                   "coefficient " + name + " must be {\"scalar\": ..., \"factors\": [...]}");
    Rational scalar = scalar_from_json(j.at("scalar"), "coefficient " + name);
    if (scalar == 0)
        fail_input("INVALID_BUNDLE", "coefficient " + name + " is zero");
    std::vector<std::pair<Curve, int>> factors;
    for (const json& entry : j.at("factors")) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_number_integer())
            fail_input("MANIFEST_ERROR",
                       "coefficient " + name + ": factors are [expression, exponent] pairs");
        std::string expr = entry[0].get<std::string>();
        int e = entry[1].get<int>();
        if (e <= 0)
            fail_input("INVALID_BUNDLE", "coefficient " + name + ": factor (" + expr +
                                             ") has exponent " + std::to_string(e) +
                                             "; coefficients are polynomials");
        HPoly p = parse_poly(expr, vars);
        if (p.is_zero())
            fail_input("MANIFEST_ERROR", "coefficient " + name + ": zero factor " + expr);
        if (p.degree() == 0) {
            scalar *= p.leading_coeff();  // constant factors fold into the scalar
            for (int k = 1; k < e; ++k) scalar *= p.leading_coeff();
            continue;
        }
        bool attested = attestations.count(expr) > 0;
        Curve curve = Curve::from_poly(p, attested);
        // constant content of the factor moves into the scalar
        Rational content = p.leading_coeff() / curve.poly().leading_coeff();
        for (int k = 0; k < e; ++k) scalar *= content;
        factors.emplace_back(std::move(curve), e);
    }
    return FactoredFn::from_parts(scalar, std::move(factors));
}

}  // namespace

Manifest manifest_from_json(const json& j) {
    Manifest m;
    if (!j.is_object()) fail_input("MANIFEST_ERROR", "manifest must be a JSON object");
    if (!j.contains("variables") || !j.at("variables").is_array() ||
        j.at("variables").size() != 3)
        fail_input("MANIFEST_ERROR", "manifest needs \"variables\": [three names]");
    for (size_t i = 0; i < 3; ++i) {
        if (!j.at("variables")[i].is_string())
            fail_input("MANIFEST_ERROR", "variable names must be strings");
        m.vars.names[i] = j.at("variables")[i].get<std::string>();
    }
    if (m.vars.names[0] == m.vars.names[1] || m.vars.names[0] == m.vars.names[2] ||
        m.vars.names[1] == m.vars.names[2])
        fail_input("MANIFEST_ERROR", "variable names must be distinct");

    if (j.contains("attestations")) {
        for (const auto& [expr, val] : j.at("attestations").items()) {
            if (!val.is_string() || val.get<std::string>() != "geometrically-irreducible")
                fail_input("MANIFEST_ERROR",
                           "attestation for (" + expr +
                               ") must be the string \"geometrically-irreducible\"");
            m.attestations[expr] = val.get<std::string>();
        }
    }

    if (!j.contains("coefficients") || !j.at("coefficients").is_object())
        fail_input("MANIFEST_ERROR", "manifest needs a \"coefficients\" object");
    const json& co = j.at("coefficients");
    const char* names[4] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) {
        if (!co.contains(names[i]))
            fail_input("MANIFEST_ERROR", std::string("missing coefficient ") + names[i]);
        m.bundle.coeff[static_cast<size_t>(i)] =
            coefficient_from_json(co.at(names[i]), names[i], m.vars, m.attestations);
    }
    // distinct factor curves anywhere in the manifest must be pairwise
    // coprime; a common divisor refutes an irreducibility attestation
    std::vector<Curve> all;
    for (const auto& c : m.bundle.coeff)
        for (const auto& [curve, e] : c.factors()) {
            bool seen = false;
            for (const auto& known : all) seen = seen || known == curve;
            if (!seen) all.push_back(curve);
        }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t k = i + 1; k < all.size(); ++k) {
            HPoly g = gcd(all[i].poly(), all[k].poly());
            if (g.degree() > 0)
                fail_input("ATTESTATION_REFUTED",
                           "factors " + all[i].poly().to_string(m.vars) + " and " +
                               all[k].poly().to_string(m.vars) + " share the divisor " +
                               g.to_string(m.vars));
        }

    if (j.contains("options")) {
        const json& opts = j.at("options");
        if (opts.contains("convention"))
            m.options.convention = convention_from_string(opts.at("convention").get<std::string>());
        if (opts.contains("reduce_cubes")) m.options.reduce_cubes = opts.at("reduce_cubes").get<bool>();
    }
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_input("MANIFEST_ERROR", "cannot open manifest file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail_input("MANIFEST_ERROR", "manifest is not valid JSON: " + std::string(e.what()));
    }
    return manifest_from_json(j);
}

}  // namespace cubnr
