#include <cubnr/demo.hpp>

#include <cubnr/report.hpp>

namespace cubnr {

const char* const kRefvManifestJson = R"({
  "variables": ["x", "y", "z"],
  "coefficients": {
    "a": {"scalar": "1", "factors": [["x", 1], ["z", 2]]},
    "b": {"scalar": "1", "factors": [["y", 2], ["z", 1]]},
    "c": {"scalar": "1", "factors": [["x", 1], ["y", 2]]},
    "d": {"scalar": "1", "factors": [["x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z", 1]]}
  },
  "attestations": {
    "x^3+y^3+z^3+3*x^2*y+3*x*y^2+3*y^2*z+3*y*z^2+3*x*z^2+3*x^2*z": "geometrically-irreducible"
  },
  "options": {"convention": "later-over-earlier", "reduce_cubes": false}
})";

Manifest refv_manifest() { return manifest_from_json(json::parse(kRefvManifestJson)); }

json demo_summary(const EngineResult& r, const VarSet& vars) {
    json locus = json::array();
    for (const auto& comp : r.locus.components)
        locus.push_back(json{{"curve", comp.curve.poly().to_string(vars)},
                             {"gamma", cube_class_json(comp.gamma)}});
    json cond_i = json::array();
    for (const auto& v : r.cond_i) cond_i.push_back(to_string(v.s));
    json members = json::array();
    for (const auto& m : r.members) {
        json e{{"vector", m.v.a}};
        if (m.witness) e["witness"] = symbol_json(*m.witness, vars);
        members.push_back(e);
    }
    return json{{"locus", locus},
                {"minimality", to_string(r.minimality.kind)},
                {"condition_i", cond_i},
                {"group_order", r.group.order},
                {"members", members},
                {"undecided", r.group.undecided.size()},
                {"certificate_attached", r.certificate.attached}};
}

// Frozen from a verified run; demo recomputes and diffs against this.
const char* const kRefvGoldenSummary = R"golden({
  "certificate_attached": true,
  "condition_i": [
    "YES",
    "YES",
    "YES"
  ],
  "group_order": 3,
  "locus": [
    {
      "curve": "x",
      "gamma": {
        "finite": [
          {
            "exp": 1,
            "poly": "t"
          }
        ],
        "infinity": 2,
        "trivial": false
      }
    },
    {
      "curve": "y",
      "gamma": {
        "finite": [
          {
            "exp": 2,
            "poly": "t"
          }
        ],
        "infinity": 1,
        "trivial": false
      }
    },
    {
      "curve": "z",
      "gamma": {
        "finite": [
          {
            "exp": 2,
            "poly": "t"
          }
        ],
        "infinity": 1,
        "trivial": false
      }
    }
  ],
  "members": [
    {
      "vector": [
        -1,
        -1,
        1
      ],
      "witness": {
        "g": "(x)^2 * (z)^-2",
        "h": "(x)^2 * (y)^-1 * (z)^-1"
      }
    },
    {
      "vector": [
        0,
        0,
        0
      ],
      "witness": {
        "g": "1",
        "h": "1"
      }
    },
    {
      "vector": [
        1,
        1,
        -1
      ],
      "witness": {
        "g": "(x)^2 * (z)^-2",
        "h": "(x)^2 * (y)^-2"
      }
    }
  ],
  "minimality": "MINIMAL",
  "undecided": 0
})golden";

}  // namespace cubnr
