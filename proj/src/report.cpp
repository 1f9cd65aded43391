#include "veerkit/report.hpp"

#include "veerkit/isosig.hpp"

namespace veerkit {

int exit_code_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::MalformedSignature:
    case ErrorKind::AngleLengthMismatch:
    case ErrorKind::InvalidGluing:
    case ErrorKind::BadCuspName:
    case ErrorKind::BadTetIndex:
        return kParse;
    case ErrorKind::DepthExhausted:
        return kDepth;
    case ErrorKind::InsufficientContinent:
        return kInsufficient;
    default:
        return kFailed;
    }
}

namespace {

json error_json(const Error& e) {
    return {{"kind", to_string(e.kind())}, {"message", e.what()}};
}

} // namespace

CheckOutcome check_signature(const std::string& sig) {
    CheckOutcome out;
    json& r = out.report;
    r["signature"] = sig;
    r["checks"] = {{"taut", false}, {"transverse", false}, {"veering", false}, {"edges", false}};

    TautSig ts;
    try {
        ts = parse_taut_isosig(sig);
        ts.tri.validate();
    } catch (const Error& e) {
        r["error"] = error_json(e);
        out.exit = kParse;
        return out;
    }
    const Triangulation& tri = ts.tri;
    r["tet_count"] = tri.tet_count();

    auto taut = check_taut(tri, ts.pi_pair);
    json edges = json::array();
    for (int c = 0; c < tri.edge_count(); ++c)
        edges.push_back({{"degree", tri.edge_degree(c)},
                         {"pi_count", c < int(taut.pi_count.size()) ? taut.pi_count[c] : 0}});
    r["edges"] = edges;
    r["checks"]["taut"] = taut.pass;
    out.exit = kFailed;
    if (!taut.pass) {
        r["violations"] = taut.violations;
        return out;
    }

    TransverseTautStructure s;
    try {
        s = derive_coorientations(tri, ts.pi_pair);
        r["checks"]["transverse"] = true;
        s = derive_veering_colours(tri, s);
        r["checks"]["veering"] = true;
    } catch (const Error& e) {
        r["error"] = error_json(e);
        return out;
    }

    for (int c = 0; c < tri.edge_count(); ++c) r["edges"][c]["colour"] = to_string(s.colour[c]);
    json kinds = json::array(), types = json::array();
    for (TetKind k : classify_tetrahedra(tri, s)) {
        kinds.push_back(is_toggle(k) ? "Toggle" : "Fan");
        types.push_back(to_string(k));
    }
    r["tet_kinds"] = kinds;
    r["tet_types"] = types;

    bool all = true;
    json failed = json::array();
    for (auto& er : edge_neighbourhood_report(tri, s)) {
        all = all && er.pass;
        if (!er.pass) failed.push_back({{"edge", er.edge}, {"detail", er.detail}});
    }
    r["checks"]["edges"] = all;
    if (!failed.empty()) r["edge_failures"] = failed;
    if (all) out.exit = kPass;
    return out;
}

json continent_json(const Continent& C) {
    Development& dev = C.dev();
    json tets = json::array();
    for (int t : C.tets()) {
        json nbr = json::array();
        for (int f = 0; f < 4; ++f) nbr.push_back(dev.neighbour(t, f));
        tets.push_back({{"id", t}, {"base", dev.base(t)}, {"neighbours", nbr}, {"cusps", dev.cusps_of(t)}});
    }
    auto land = [](const Landscape& L) {
        json faces = json::array();
        for (auto& [id, f] : L.faces())
            faces.push_back({{"id", id}, {"cusps", f.cusp}, {"edges", f.edge}});
        return faces;
    };
    return {{"tets", tets}, {"upper", land(C.upper())}, {"lower", land(C.lower())}, {"coast", C.coast()}};
}

json point_json(const LinkSpace& ls, const LeafPoint& p) {
    if (p.is_cusp()) return {{"cusp", p.cusp}};
    const BranchLinePrefix& b = ls.line(p.line);
    json steps = json::array();
    for (auto& st : b.steps) steps.push_back(st.face);
    return {{"line", p.line}, {"cusp", b.cusp}, {"side", to_string(b.which)}, {"steps", steps},
            {"label", point_str(ls, p)}};
}

json rectangle_json(const LinkSpace& ls, const RectangleSignature& r) {
    auto chord = [&](const Chord& c) {
        return json{{"a", point_json(ls, c.a)}, {"b", point_json(ls, c.b)}, {"pivot", c.pivot}};
    };
    json j = {{"kind", to_string(r.kind)},
              {"tet", r.tet},
              {"local", r.local},
              {"cusps", r.cusps},
              {"ideal", r.ideal},
              {"upper", {chord(r.upper[0]), chord(r.upper[1])}},
              {"lower", {chord(r.lower[0]), chord(r.lower[1])}}};
    if (r.kind != RectKind::Edge) return j;
    static const char* names[8] = {"S", "T", "U", "V", "S'", "T'", "U'", "V'"};
    json leaves = json::object();
    for (int i = 0; i < 8; ++i) leaves[names[i]] = point_json(ls, LeafPoint{-1, r.leaves[i]});
    json cyc = json::array();
    for (auto& p : r.cyclic) cyc.push_back(point_str(ls, p));
    j["c"] = r.c;
    j["d"] = r.d;
    j["colour"] = to_string(r.colour);
    j["leaves"] = leaves;
    j["cyclic"] = cyc;
    j["order_certified"] = r.order_certified;
    j["corner_c"] = to_string(r.corner_c);
    j["slope_matches"] = r.slope_matches;
    return j;
}

} // namespace veerkit
