// veerkit: command-line front end. JSON to stdout, SVG to a file.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "veerkit/reconstruct.hpp"
#include "veerkit/render.hpp"
#include "veerkit/report.hpp"

using namespace veerkit;

namespace {

using Clock = std::chrono::steady_clock;

unsigned long g_seed = 0;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json stats_of(Session& s) {
    return {{"master_tets", s.master().size()},
            {"lifted_tets", s.dev().size()},
            {"max_rounds", s.config().max_rounds < 0 ? default_max_rounds() : s.config().max_rounds},
            {"max_arc_depth", s.config().max_arc_depth}};
}

int emit(json report, int code, Clock::time_point t0) {
    report["timing_ms"] = ms_since(t0);
    report["exit_code"] = code;
    report["seed"] = g_seed;
    std::cout << report.dump() << "\n";
    return code;
}

int fail(json report, const Error& e, Clock::time_point t0) {
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    return emit(std::move(report), exit_code_of(e.kind()), t0);
}

SessionConfig config_for(int max_depth) {
    SessionConfig cfg;
    if (max_depth > 0) cfg.max_rounds = max_depth;
    return cfg;
}

int cmd_check(const std::string& sig, const std::string& file) {
    auto t0 = Clock::now();
    if (file.empty()) {
        auto out = check_signature(sig);
        return emit({{"command", "check"}, {"input", sig}, {"results", out.report}}, out.exit, t0);
    }
    std::ifstream in(file);
    if (!in) {
        json r = {{"command", "check"}, {"input", file}, {"error", {{"kind", "FileNotFound"}, {"message", file}}}};
        return emit(r, kParse, t0);
    }
    int worst = kPass, records = 0, passed = 0;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        auto t1 = Clock::now();
        auto out = check_signature(tok);
        json r = {{"command", "check"}, {"input", tok}, {"line", lineno}, {"results", out.report},
                  {"timing_ms", ms_since(t1)}, {"exit_code", out.exit}};
        std::cout << r.dump() << "\n";
        ++records;
        passed += out.exit == kPass;
        worst = std::max(worst, out.exit);
    }
    std::cerr << records << " records, " << passed << " passed, " << ms_since(t0) << " ms\n";
    return worst;
}

int cmd_order(const std::string& sig, const std::array<std::string, 3>& names, int max_depth) {
    auto t0 = Clock::now();
    json r = {{"command", "order"}, {"input", sig}, {"cusps", names}};
    try {
        std::array<CuspName, 3> n;
        for (int i = 0; i < 3; ++i) n[i] = CuspName::parse(names[i]);
        Session s(VeeringTriangulation::from_signature(sig), config_for(max_depth));
        int sign = s.order(n[0], n[1], n[2]);
        r["results"] = {{"sign", sign}, {"witness_size", s.master().size()}};
        r["stats"] = stats_of(s);
        return emit(r, kPass, t0);
    } catch (const Error& e) {
        return fail(r, e, t0);
    }
}

int cmd_roundtrip(const std::string& sig, int radius, int max_depth) {
    auto t0 = Clock::now();
    json r = {{"command", "roundtrip"}, {"input", sig}, {"radius", radius}};
    try {
        auto vt = VeeringTriangulation::from_signature(sig);
        Session s(vt, config_for(max_depth));
        auto ball = s.grow_ball(radius);
        LinkSpace ls(s);
        Reconstruction rc = reconstruct(ls, ball);
        auto iso = find_isomorphism(rc.tri, rc.pi_pair, rc.colour, vt->tri, vt->taut.pi_pair, vt->taut.colour);
        json res = {{"pass", iso.has_value()},
                    {"tet_count", rc.tri.tet_count()},
                    {"interior", rc.interior},
                    {"representatives", rc.reps},
                    {"containment_checks", rc.containment_checks},
                    {"pi_pair", rc.pi_pair}};
        json cols = json::array();
        for (Colour c : rc.colour) cols.push_back(to_string(c));
        res["colours"] = cols;
        if (iso) {
            json verts = json::array();
            for (const Perm4& p : iso->vertices) verts.push_back({p[0], p[1], p[2], p[3]});
            res["isomorphism"] = {{"tet", iso->tet}, {"vertices", verts}};
        }
        r["results"] = res;
        r["stats"] = stats_of(s);
        return emit(r, iso ? kPass : kFailed, t0);
    } catch (const Error& e) {
        return fail(r, e, t0);
    }
}

int cmd_render(const std::string& sig, const std::string& what, const std::string& out, int radius, int layer) {
    auto t0 = Clock::now();
    json r = {{"command", "render"}, {"input", sig}, {"what", what}, {"out", out}};
    auto sel = parse_render_what(what);
    if (!sel) {
        r["error"] = {{"kind", "UnknownSelector"}, {"message", "expected layer, tracks, crowns or rectangles"}};
        return emit(r, kParse, t0);
    }
    try {
        Session s(VeeringTriangulation::from_signature(sig));
        Rendered img = render_svg(s, {*sel, radius, layer});
        if (!out.empty()) {
            std::ofstream f(out, std::ios::binary);
            f << img.svg;
            if (!f) {
                r["error"] = {{"kind", "WriteFailed"}, {"message", out}};
                return emit(r, kFailed, t0);
            }
        }
        r["results"] = img.summary;
        r["stats"] = stats_of(s);
        return emit(r, kPass, t0);
    } catch (const Error& e) {
        return fail(r, e, t0);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"veering triangulations: checks, circular order, rectangles"};
    app.require_subcommand(1);
    app.add_option("--seed", g_seed, "seed for sampled choices")->capture_default_str();

    std::string sig, file, what = "layer", out;
    std::array<std::string, 3> names;
    int max_depth = -1, radius = 2, render_radius = 2, layer = -1;

    auto* check = app.add_subcommand("check", "verify a taut signature or a census file");
    check->add_option("signature", sig);
    check->add_option("--file", file, "census file, one signature per line");

    auto* order = app.add_subcommand("order", "sign of three cusps in the circular order");
    order->add_option("signature", sig)->required();
    order->add_option("a", names[0])->required();
    order->add_option("b", names[1])->required();
    order->add_option("c", names[2])->required();
    order->add_option("--max-depth", max_depth, "channelisations per face crossing");

    auto* round = app.add_subcommand("roundtrip", "rebuild the triangulation from rectangles");
    round->add_option("signature", sig)->required();
    round->add_option("--radius", radius, "ball radius of the continent")->capture_default_str();
    round->add_option("--max-depth", max_depth, "channelisations per face crossing");

    auto* render = app.add_subcommand("render", "draw a layer as SVG");
    render->add_option("signature", sig)->required();
    render->add_option("--what", what, "layer|tracks|crowns|rectangles")->capture_default_str();
    render->add_option("--out", out, "SVG file");
    render->add_option("--radius", render_radius, "ball radius before layering")->capture_default_str();
    render->add_option("--layer", layer, "layer index, default the middle one");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }

    if (*check) {
        if (sig.empty() == file.empty()) {
            std::cerr << "check: give a signature or --file\n";
            return kParse;
        }
        return cmd_check(sig, file);
    }
    if (*order) return cmd_order(sig, names, max_depth);
    if (*round) return cmd_roundtrip(sig, radius, max_depth);
    return cmd_render(sig, what, out, render_radius, layer);
}
