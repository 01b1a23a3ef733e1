#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string bin_path() {
    const char* env = std::getenv("CUBNR_BIN");
    return env ? env : "./cubnr";
}

RunResult run(const std::string& args) {
    std::string out_file = "cli_test_stdout.tmp";
    std::string cmd = bin_path() + " " + args + " > " + out_file + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

std::string refv_manifest() {
    return R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x", 1], ["z", 2]]},
    "b": {"scalar": "1", "factors": [["y", 2], ["z", 1]]},
    "c": {"scalar": "1", "factors": [["x", 1], ["y", 2]]},
    "d": {"scalar": "1", "factors": [["x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z", 1]]}
  },
  "attestations": {
    "x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z": "geometrically-irreducible"
  }
})";
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("demo refv exits 0 and reproduces the golden output") {
    RunResult r = run("demo refv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("golden output reproduced") != std::string::npos);
    CHECK(r.out.find("group order: 3") != std::string::npos);
}

TEST_CASE("hnr: deterministic machine reports that round-trip") {
    write_file("cli_refv.json", refv_manifest());
    RunResult r1 = run("hnr --manifest cli_refv.json --json cli_out1.json");
    REQUIRE(r1.exit_code == 0);
    RunResult r2 = run("hnr --manifest cli_refv.json --json cli_out2.json");
    REQUIRE(r2.exit_code == 0);

    std::ifstream f1("cli_out1.json"), f2("cli_out2.json");
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());  // byte-identical

    json j = json::parse(s1.str());
    CHECK(json::parse(j.dump(2)) == j);  // round-trip
    CHECK(j["result"]["group"]["order"] == 3);
    CHECK(j["result"]["group"]["members"].size() == 3);
    CHECK(j["result"]["minimality"]["verdict"] == "MINIMAL");
    CHECK(j["result"]["certificate"]["attached"] == true);
    CHECK(j["options"]["convention"] == "later-over-earlier");
}

TEST_CASE("validate / fibers / minimality subcommands") {
    write_file("cli_refv.json", refv_manifest());
    CHECK(run("validate --manifest cli_refv.json").exit_code == 0);
    RunResult fib = run("fibers --manifest cli_refv.json --json cli_fib.json");
    CHECK(fib.exit_code == 0);
    json j = load_json("cli_fib.json");
    CHECK(j["locus"]["three_planes"].size() == 3);
    CHECK(j["locus"]["discriminant"].size() == 4);
    RunResult min = run("minimality --manifest cli_refv.json");
    CHECK(min.exit_code == 0);
    CHECK(min.out.find("MINIMAL") != std::string::npos);
}

TEST_CASE("symbol subcommand with implicit denominators") {
    RunResult r = run("symbol --g x --h y --json cli_sym.json");
    REQUIRE(r.exit_code == 0);
    json j = load_json("cli_sym.json");
    // residues along x, y, z with the pinned exponent tables
    REQUIRE(j["residues"].size() == 3);
    for (const auto& e : j["residues"]) {
        std::string curve = e["curve"];
        const json& res = e["residue"];
        if (curve == "x") {
            CHECK(res["finite"][0]["exp"] == 2);  // class[y^2 z]: order 2 at the y point
            CHECK(res["infinity"] == 1);
        } else if (curve == "y") {
            CHECK(res["finite"][0]["exp"] == 1);  // class[x z^2]
            CHECK(res["infinity"] == 2);
        } else if (curve == "z") {
            CHECK(res["finite"][0]["exp"] == 2);  // class[x^2 y]
            CHECK(res["infinity"] == 1);
        }
    }
    CHECK(j["reciprocity"]["all_zero"] == true);
    CHECK(j["reciprocity"]["sums"].size() == 3);
}

TEST_CASE("symbol subcommand parses factor lists") {
    CHECK(run("symbol --g \"(x+y)^-1,x\" --h \"y^2,z^-2\"").exit_code == 0);
    RunResult bad = run("symbol --g \"x*y^-1\" --h y");
    CHECK(bad.exit_code == 3);
    CHECK(bad.out.find("PARSE_ERROR") != std::string::npos);
    // repeated factor curves within one entry are rejected
    CHECK(run("symbol --g \"x,x\" --h y").exit_code == 3);
    // constant content of a factor lands in the scalar
    RunResult neg = run("symbol --g \"-x\" --h y --json cli_neg.json");
    REQUIRE(neg.exit_code == 0);
    std::string g = load_json("cli_neg.json")["symbol"]["g"].get<std::string>();
    CHECK(g.find("-1") != std::string::npos);
    // exponents are bounded
    CHECK(run("symbol --g \"x^1000000\" --h y").exit_code == 3);
}

TEST_CASE("manifest errors exit 3") {
    SUBCASE("repeated factor curve") {
        write_file("cli_bad.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x", 1], ["x", 2]]},
    "b": {"scalar": "1", "factors": [["y", 3]]},
    "c": {"scalar": "1", "factors": [["z", 3]]},
    "d": {"scalar": "1", "factors": [["x", 3]]}
  }
})");
        RunResult r = run("hnr --manifest cli_bad.json");
        CHECK(r.exit_code == 3);
    }
    SUBCASE("zero coefficient") {
        write_file("cli_bad.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "0", "factors": []},
    "b": {"scalar": "1", "factors": [["y", 1]]},
    "c": {"scalar": "1", "factors": [["z", 1]]},
    "d": {"scalar": "1", "factors": [["x", 1]]}
  }
})");
        RunResult r = run("validate --manifest cli_bad.json");
        CHECK(r.exit_code == 3);
        CHECK(r.out.find("INVALID_BUNDLE") != std::string::npos);
    }
    SUBCASE("missing attestation for a cubic factor") {
        write_file("cli_bad.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x", 3]]},
    "b": {"scalar": "1", "factors": [["y", 3]]},
    "c": {"scalar": "1", "factors": [["z", 3]]},
    "d": {"scalar": "1", "factors": [["x^3+y^3+z^3", 1]]}
  }
})");
        RunResult r = run("hnr --manifest cli_bad.json");
        CHECK(r.exit_code == 3);
        CHECK(r.out.find("ATTESTATION_REQUIRED") != std::string::npos);
    }
    SUBCASE("not JSON") {
        write_file("cli_bad.json", "not json at all {");
        CHECK(run("hnr --manifest cli_bad.json").exit_code == 3);
    }
    SUBCASE("missing manifest option") {
        CHECK(run("hnr").exit_code == 3);
    }
}

TEST_CASE("hypothesis violations exit 1") {
    // non-reduced fibre over x = 0
    write_file("cli_nr.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["y", 1]]},
    "b": {"scalar": "1", "factors": [["x", 1]]},
    "c": {"scalar": "1", "factors": [["x", 1]]},
    "d": {"scalar": "1", "factors": [["x", 1]]}
  }
})");
    RunResult r = run("hnr --manifest cli_nr.json --json cli_nr_out.json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("non-reduced") != std::string::npos);
    json err = load_json("cli_nr_out.json");
    CHECK(err["error"]["code"] == "HYPOTHESIS_VIOLATION");

    // undecidable minimality
    write_file("cli_um.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x", 1]]},
    "b": {"scalar": "1", "factors": [["y", 1]]},
    "c": {"scalar": "1", "factors": [["z", 1]]},
    "d": {"scalar": "1", "factors": [["x+y+z", 1]]}
  }
})");
    CHECK(run("hnr --manifest cli_um.json").exit_code == 1);

    // the validate subcommand reports the same hypothesis failures
    RunResult v1 = run("validate --manifest cli_nr.json");
    CHECK(v1.exit_code == 1);
    CHECK(v1.out.find("NON_REDUCED") != std::string::npos);
    CHECK(run("validate --manifest cli_um.json").exit_code == 1);
}

TEST_CASE("convention flag negates the member vectors") {
    write_file("cli_refv.json", refv_manifest());
    RunResult later = run("hnr --manifest cli_refv.json --json cli_c1.json");
    RunResult earlier =
        run("hnr --manifest cli_refv.json --convention earlier-over-later --json cli_c2.json");
    REQUIRE(later.exit_code == 0);
    REQUIRE(earlier.exit_code == 0);
    json j1 = load_json("cli_c1.json"), j2 = load_json("cli_c2.json");
    CHECK(j1["result"]["group"]["order"] == j2["result"]["group"]["order"]);
    auto members1 = j1["result"]["group"]["members"];
    auto members2 = j2["result"]["group"]["members"];
    // negate members1 entrywise and compare as sets
    std::set<std::vector<int>> neg, got;
    for (const auto& m : members1) {
        std::vector<int> v = m.get<std::vector<int>>();
        for (int& e : v) e = -e;
        neg.insert(v);
    }
    for (const auto& m : members2) got.insert(m.get<std::vector<int>>());
    CHECK(neg == got);
}

TEST_CASE("reduce-cubes flag recovers the reference results from a twisted model") {
    write_file("cli_twist.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x", 1], ["z", 2], ["x+y+z", 3]]},
    "b": {"scalar": "1", "factors": [["y", 2], ["z", 1], ["x-y+z", 3]]},
    "c": {"scalar": "1", "factors": [["x", 1], ["y", 2], ["x+y-z", 3]]},
    "d": {"scalar": "1", "factors": [["x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z", 1], ["x+2*y+z", 3]]}
  },
  "attestations": {
    "x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z": "geometrically-irreducible"
  }
})");
    RunResult r = run("hnr --manifest cli_twist.json --reduce-cubes --json cli_rc.json");
    REQUIRE(r.exit_code == 0);
    json j = load_json("cli_rc.json");
    CHECK(j["reduction"]["applied"] == true);
    CHECK(j["result"]["group"]["order"] == 3);
    // the twisted model itself also computes directly (no reduction needed)
    RunResult direct = run("hnr --manifest cli_twist.json --json cli_direct.json");
    REQUIRE(direct.exit_code == 0);
    CHECK(load_json("cli_direct.json")["result"]["group"]["order"] == 3);
}

TEST_CASE("usage errors exit 3") {
    CHECK(run("nonsense-subcommand").exit_code == 3);
    CHECK(run("demo unknown-name").exit_code == 3);
}

TEST_CASE("unsupported geometry exits 2") {
    // x^2 + y^2 + z^2 has no rational points, so the gamma class of the
    // three-planes component over it cannot be computed exactly
    write_file("cli_conic.json", R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x^2+y^2+z^2", 1], ["x", 1]]},
    "b": {"scalar": "1", "factors": [["y", 3]]},
    "c": {"scalar": "1", "factors": [["x^2+y^2+z^2", 1], ["y", 1]]},
    "d": {"scalar": "1", "factors": [["y", 1], ["z", 2]]}
  }
})");
    RunResult r = run("fibers --manifest cli_conic.json --json cli_conic_out.json");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("UNSUPPORTED_CURVE") != std::string::npos);
    json err = load_json("cli_conic_out.json");
    CHECK(err["error"]["code"] == "UNSUPPORTED_CURVE");
}

TEST_CASE("renamed variables work end to end") {
    write_file("cli_uvw.json", R"({
  "variables": ["u", "v", "w"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["u", 1], ["w", 2]]},
    "b": {"scalar": "1", "factors": [["v", 2], ["w", 1]]},
    "c": {"scalar": "1", "factors": [["u", 1], ["v", 2]]},
    "d": {"scalar": "1", "factors": [["u^3+v^3+w^3+3*u^2*v+3*u*v^2+3*v^2*w+3*v*w^2+3*u*w^2+3*u^2*w", 1]]}
  },
  "attestations": {"u^3+v^3+w^3+3*u^2*v+3*u*v^2+3*v^2*w+3*v*w^2+3*u*w^2+3*u^2*w": "geometrically-irreducible"}
})");
    RunResult r = run("hnr --manifest cli_uvw.json --json cli_uvw_out.json");
    REQUIRE(r.exit_code == 0);
    json j = load_json("cli_uvw_out.json");
    CHECK(j["result"]["group"]["order"] == 3);
    CHECK(j["variables"] == json::array({"u", "v", "w"}));
}
