#include <cubnr/report.hpp>

namespace cubnr {

json cube_class_json(const CubeClass& c) {
    json finite = json::array();
    for (const auto& [q, e] : c.finite_part())
        finite.push_back(json{{"poly", q.to_string()}, {"exp", e}});
    return json{{"finite", finite},
                {"infinity", c.infinity_exponent()},
                {"trivial", c.is_trivial()}};
}

json curve_json(const Curve& c, const VarSet& vars) {
    return json{{"poly", c.poly().to_string(vars)},
                {"degree", c.degree()},
                {"status", to_string(c.status())},
                {"parametrizable", c.parametrizable()}};
}

json factored_json(const FactoredFn& f, const VarSet& vars) {
    json factors = json::array();
    for (const auto& [c, e] : f.factors())
        factors.push_back(json::array({c.poly().to_string(vars), e}));
    return json{{"scalar", rat_to_string(f.scalar())}, {"factors", factors}};
}

json symbol_json(const Symbol2& s, const VarSet& vars) {
    return json{{"g", s.g.to_string(vars)}, {"h", s.h.to_string(vars)}};
}

json verdict_json(const Verdict& v) {
    json out{{"verdict", to_string(v.s)}};
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

json fiber_type_json(const FiberType& t) {
    json positions = json::array();
    for (int p : t.unit_positions) positions.push_back(DiagonalBundle::position_name(p));
    json out{{"type", to_string(t.kind)}, {"unit_positions", positions}};
    if (t.gamma) out["gamma"] = cube_class_json(*t.gamma);
    return out;
}

json locus_json(const LocusResult& l, const VarSet& vars) {
    json disc = json::array();
    for (const auto& entry : l.discriminant) {
        json e = fiber_type_json(entry.type);
        e["curve"] = entry.curve.poly().to_string(vars);
        e["degree"] = entry.curve.degree();
        e["status"] = to_string(entry.curve.status());
        disc.push_back(e);
    }
    json comps = json::array();
    for (size_t i = 0; i < l.components.size(); ++i) {
        const auto& comp = l.components[i];
        comps.push_back(json{{"index", i + 1},
                             {"curve", comp.curve.poly().to_string(vars)},
                             {"gamma", cube_class_json(comp.gamma)},
                             {"unit_positions",
                              json::array({DiagonalBundle::position_name(comp.unit_positions[0]),
                                           DiagonalBundle::position_name(comp.unit_positions[1])})}});
    }
    json nonred = json::array();
    for (const auto& c : l.nonreduced) nonred.push_back(c.poly().to_string(vars));
    return json{{"discriminant", disc}, {"three_planes", comps}, {"non_reduced", nonred}};
}

json minimality_json(const MinimalityVerdict& m, const VarSet& vars) {
    json out{{"verdict", to_string(m.kind)}, {"detail", m.detail}};
    if (m.sb_witness) out["sb_class"] = symbol_json(*m.sb_witness, vars);
    if (m.kind == MinimalityVerdict::Kind::Minimal) {
        out["labeling"] = json{{"a'", DiagonalBundle::position_name(m.labeling[0])},
                               {"b'", DiagonalBundle::position_name(m.labeling[1])},
                               {"c'", DiagonalBundle::position_name(m.labeling[2])},
                               {"f'", DiagonalBundle::position_name(m.labeling[3])}};
        json elems = json::array();
        for (const auto& [name, cube] : m.segre_elements)
            elems.push_back(json{{"element", name}, {"is_cube", cube}});
        out["segre_elements"] = elems;
    }
    return out;
}

json snc_json(const SncReport& r) {
    json out{{"pass", r.pass}};
    if (!r.pass) {
        out["failure"] = r.failure;
        if (r.witness) out["witness"] = r.witness->to_string();
    }
    return out;
}

json validation_json(const ValidationReport& r) {
    return json{{"pass", r.pass},
                {"violations", r.violations},
                {"generic_fiber_smooth", r.smoothness}};
}

json group_json(const HnrGroup& g) {
    auto vecs = [](const std::vector<HnrVector>& vs) {
        json out = json::array();
        for (const auto& v : vs) out.push_back(v.a);
        return out;
    };
    return json{{"order", g.order},
                {"members", vecs(g.proven)},
                {"generators", vecs(g.generators)},
                {"undecided", vecs(g.undecided)}};
}

json bundle_json(const DiagonalBundle& b, const VarSet& vars) {
    json out;
    for (int i = 0; i < 4; ++i)
        out[DiagonalBundle::position_name(i)] = factored_json(b.coeff[static_cast<size_t>(i)], vars);
    out["common_degree"] = b.common_degree();
    return out;
}

json engine_result_json(const EngineResult& r, const VarSet& vars) {
    json cond_i = json::array();
    for (size_t i = 0; i < r.cond_i.size(); ++i) {
        json e = verdict_json(r.cond_i[i]);
        e["curve"] = r.locus.components[i].curve.poly().to_string(vars);
        if (r.cond_i_sb[i].yes && r.cond_i_sb[i].symbol)
            e["sb_class"] = symbol_json(*r.cond_i_sb[i].symbol, vars);
        e["detail"] = r.cond_i_sb[i].detail;
        cond_i.push_back(e);
    }
    json members = json::array();
    for (const auto& m : r.members) {
        json e{{"vector", m.v.a}};
        if (m.witness) e["witness"] = symbol_json(*m.witness, vars);
        members.push_back(e);
    }
    json undecided = json::array();
    for (const auto& [v, reason] : r.undecided)
        undecided.push_back(json{{"vector", v.a}, {"blocker", reason}});
    json checklist = json::array();
    for (const auto& [k, v] : r.certificate.checklist)
        checklist.push_back(json{{"hypothesis", k}, {"status", v}});
    return json{{"locus", locus_json(r.locus, vars)},
                {"minimality", minimality_json(r.minimality, vars)},
                {"snc", snc_json(r.snc)},
                {"condition_i", cond_i},
                {"group", group_json(r.group)},
                {"members", members},
                {"undecided", undecided},
                {"certificate", json{{"attached", r.certificate.attached},
                                     {"conclusion", r.certificate.conclusion},
                                     {"checklist", checklist}}}};
}

json report_envelope(const std::string& command, const ManifestOptions& opts,
                     const VarSet& vars) {
    return json{{"tool", "cubnr"},
                {"format", 1},
                {"command", command},
                {"options", json{{"convention", to_string(opts.convention)},
                                 {"reduce_cubes", opts.reduce_cubes}}},
                {"variables", json::array({vars.names[0], vars.names[1], vars.names[2]})}};
}

// ---- human rendering --------------------------------------------------------

namespace {

std::string gamma_str(const CubeClass& c) {
    return c.is_trivial() ? "trivial" : c.to_string();
}

}  // namespace

std::string human_locus(const LocusResult& l, const VarSet& vars) {
    std::string out = "discriminant components (" + std::to_string(l.discriminant.size()) + "):\n";
    for (const auto& e : l.discriminant) {
        out += "  " + e.curve.poly().to_string(vars) + " = 0: " + to_string(e.type.kind);
        if (e.type.gamma) out += ", gamma = " + gamma_str(*e.type.gamma);
        out += "\n";
    }
    out += "three-planes locus (" + std::to_string(l.components.size()) + " component" +
           (l.components.size() == 1 ? "" : "s") + "):\n";
    for (size_t i = 0; i < l.components.size(); ++i)
        out += "  C_" + std::to_string(i + 1) + ": " +
               l.components[i].curve.poly().to_string(vars) +
               " = 0, gamma = " + gamma_str(l.components[i].gamma) + "\n";
    if (!l.nonreduced.empty()) {
        out += "NON-REDUCED fibres over:\n";
        for (const auto& c : l.nonreduced) out += "  " + c.poly().to_string(vars) + " = 0\n";
    }
    return out;
}

std::string human_minimality(const MinimalityVerdict& m, const VarSet& vars) {
    std::string out = "minimality: " + to_string(m.kind) + "\n  " + m.detail + "\n";
    if (m.sb_witness)
        out += "  Severi-Brauer class (" + m.sb_witness->g.to_string(vars) + ", " +
               m.sb_witness->h.to_string(vars) + ")\n";
    for (const auto& [name, cube] : m.segre_elements)
        out += "  element " + name + ": " + (cube ? "cube" : "non-cube") + "\n";
    return out;
}

std::string human_validation(const ValidationReport& r) {
    std::string out = std::string("bundle invariants: ") + (r.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& v : r.violations) out += "  violation: " + v + "\n";
    out += "  generic fibre: " + r.smoothness + "\n";
    return out;
}

std::string human_engine_result(const EngineResult& r, const VarSet& vars) {
    std::string out = human_locus(r.locus, vars);
    out += human_minimality(r.minimality, vars);
    out += "snc: " + std::string(r.snc.pass ? "PASS" : ("FAIL (" + r.snc.failure + ")")) + "\n";
    for (size_t i = 0; i < r.cond_i.size(); ++i)
        out += "condition (i) on C_" + std::to_string(i + 1) + " (" +
               r.locus.components[i].curve.poly().to_string(vars) +
               "): " + to_string(r.cond_i[i].s) + "\n";
    out += "group order: " + std::to_string(r.group.order) + "\n";
    out += "members:\n";
    for (const auto& m : r.members) {
        out += "  " + m.v.to_string();
        if (m.witness)
            out += "   witness (" + m.witness->g.to_string(vars) + ", " +
                   m.witness->h.to_string(vars) + ")";
        out += "\n";
    }
    if (!r.undecided.empty()) {
        out += "undecided vectors:\n";
        for (const auto& [v, reason] : r.undecided)
            out += "  " + v.to_string() + ": " + reason + "\n";
    }
    out += "certificate: " + std::string(r.certificate.attached ? "attached" : "not attached") +
           "\n  " + r.certificate.conclusion + "\n";
    return out;
}

}  // namespace cubnr
