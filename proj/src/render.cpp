#include "veerkit/render.hpp"

#include <cstdio>
#include <map>

namespace veerkit {

std::optional<RenderWhat> parse_render_what(const std::string& s) {
    if (s == "layer") return RenderWhat::Layer;
    if (s == "tracks") return RenderWhat::Tracks;
    if (s == "crowns") return RenderWhat::Crowns;
    if (s == "rectangles") return RenderWhat::Rectangles;
    return std::nullopt;
}

namespace {

struct Pt { double x, y; };

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}
std::string pt(Pt p) { return num(p.x) + "," + num(p.y); }
Pt mid(Pt a, Pt b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

const char* ink(Colour c) { return c == Colour::Red ? "#c0392b" : "#2c5aa0"; }

constexpr double kW = 800, kH = 500, kPad = 40;

// The edge opposite cusp i of a face, as a local edge of a tet in C.
std::pair<int, int> edge_in(Development& dev, const Continent& C, const FaceView& fv, int i) {
    FaceRef r = fv.ref;
    if (!C.contains(r.tet)) r = dev.across(r);
    VEERKIT_ASSERT(r.valid() && C.contains(r.tet), "layer face outside the continent");
    FaceView g = dev.face_view(r.tet, r.face);
    int k = g.index_of_edge(fv.edge[i]);
    return {r.tet, edge_index(g.local[(k + 1) % 3], g.local[(k + 2) % 3])};
}

} // namespace

Rendered render_svg(Session& s, const RenderOptions& opt) {
    Development& dev = s.dev();
    s.grow_ball(opt.radius);
    Layering lay = extract_layering(s.master());
    int k = opt.layer < 0 ? lay.size() / 2 : std::min(opt.layer, lay.size() - 1);
    Landscape L = lay.layer(k);

    std::vector<int> coast = L.coast();
    std::map<int, Pt> at;
    const int n = int(coast.size());
    for (int i = 0; i < n; ++i) {
        double u = n > 1 ? double(i) / (n - 1) : 0.5;
        at[coast[i]] = {kPad + u * (kW - 2 * kPad), kH - kPad - (kH - 2 * kPad) * 4 * u * (1 - u)};
    }
    auto corner = [&](const FaceView& f, int i) { return at.at(f.cusp[i]); };
    auto edge_mid = [&](const FaceView& f, int i) { return mid(corner(f, (i + 1) % 3), corner(f, (i + 2) % 3)); };

    std::string body;
    json summary = {{"layer", k}, {"layers", lay.size()}, {"faces", L.size()}, {"cusps", n}};

    body += "<g class=\"faces\">\n";
    for (auto& [id, f] : L.faces())
        body += "<polygon class=\"face\" data-id=\"" + std::to_string(id) + "\" points=\"" + pt(corner(f, 0)) +
                " " + pt(corner(f, 1)) + " " + pt(corner(f, 2)) + "\" fill=\"#f4f1ea\" stroke=\"none\"/>\n";
    body += "</g>\n<g class=\"edges\">\n";
    std::map<int, std::pair<int, int>> edges;  // edge -> (face, index)
    for (auto& [id, f] : L.faces())
        for (int i = 0; i < 3; ++i) edges.emplace(f.edge[i], std::pair{id, i});
    for (auto& [e, fi] : edges) {
        const FaceView& f = L.face(fi.first);
        Pt a = corner(f, (fi.second + 1) % 3), b = corner(f, (fi.second + 2) % 3);
        body += "<line class=\"edge\" data-id=\"" + std::to_string(e) + "\" x1=\"" + num(a.x) + "\" y1=\"" +
                num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"" +
                ink(dev.edge_colour(e)) + "\" stroke-width=\"1.5\"/>\n";
    }
    body += "</g>\n";
    summary["edges"] = edges.size();

    if (opt.what == RenderWhat::Tracks) {
        for (Side side : {Side::Upper, Side::Lower}) {
            body += std::string("<g class=\"track\" data-side=\"") + to_string(side) + "\">\n";
            for (auto& [id, f] : L.faces()) {
                int p = f.pointed(side);
                Pt c{(corner(f, 0).x + corner(f, 1).x + corner(f, 2).x) / 3,
                     (corner(f, 0).y + corner(f, 1).y + corner(f, 2).y) / 3};
                for (int q : {(p + 1) % 3, (p + 2) % 3})
                    body += "<path d=\"M" + pt(edge_mid(f, q)) + " Q" + pt(c) + " " + pt(edge_mid(f, p)) +
                            "\" fill=\"none\" stroke=\"" + (side == Side::Upper ? "#222" : "#888") +
                            (side == Side::Upper ? "\"" : "\" stroke-dasharray=\"4 3\"") + "/>\n";
            }
            body += "</g>\n";
        }
    }

    if (opt.what == RenderWhat::Crowns) {
        // The cusp with the most faces around it.
        std::map<int, int> count;
        for (auto& [id, f] : L.faces())
            for (int c : f.cusp) ++count[c];
        int best = coast.front();
        for (auto& [c, m] : count)
            if (m > count[best]) best = c;
        CrownSnapshot cs = crown_snapshot(dev, L, best);
        Pt o = at.at(best);
        body += "<g class=\"crown\" data-cusp=\"" + std::to_string(best) + "\">\n";
        body += "<circle cx=\"" + num(o.x) + "\" cy=\"" + num(o.y) + "\" r=\"6\" fill=\"#e6b422\"/>\n";
        for (auto& tip : cs.tips) {
            const FaceView& f = L.face(tip.tc.face);
            Pt m = edge_mid(f, f.index_of_edge(tip.tc.edge));
            bool up = tip.which == Side::Upper;
            body += std::string("<circle class=\"tip\" data-side=\"") + to_string(tip.which) + "\" cx=\"" +
                    num(m.x) + "\" cy=\"" + num(m.y) + "\" r=\"4\" fill=\"" + (up ? "#222" : "#fff") +
                    "\" stroke=\"#222\"/>\n";
        }
        body += "</g>\n";
        summary["crown_cusp"] = best;
        summary["tips"] = cs.tips.size();
    }

    if (opt.what == RenderWhat::Rectangles) {
        LinkSpace ls(s);
        int marked = 0, matching = 0;
        for (auto& [e, fi] : edges) {
            const FaceView& f = L.face(fi.first);
            auto [t, le] = edge_in(dev, s.master(), f, fi.second);
            const RectangleSignature& r = ls.edge_rectangle(t, le);
            Pt m = edge_mid(f, fi.second);
            const double h = 7;
            // Corner of c, then the opposite corner for d.
            auto off = [&](Corner c) {
                switch (c) {
                case Corner::SW: return Pt{m.x - h, m.y + h};
                case Corner::SE: return Pt{m.x + h, m.y + h};
                case Corner::NW: return Pt{m.x - h, m.y - h};
                default: return Pt{m.x + h, m.y - h};
                }
            };
            Corner dc = r.corner_c == Corner::SW ? Corner::NE
                        : r.corner_c == Corner::NE ? Corner::SW
                        : r.corner_c == Corner::SE ? Corner::NW
                                                   : Corner::SE;
            Pt pc = off(r.corner_c), pd = off(dc);
            body += "<g class=\"rect\" data-edge=\"" + std::to_string(e) + "\" data-colour=\"" +
                    to_string(r.colour) + "\" data-corner=\"" + to_string(r.corner_c) + "\">\n";
            body += "<rect x=\"" + num(m.x - h) + "\" y=\"" + num(m.y - h) + "\" width=\"" + num(2 * h) +
                    "\" height=\"" + num(2 * h) + "\" fill=\"#fff\" stroke=\"" + ink(r.colour) + "\"/>\n";
            for (Pt p : {pc, pd})
                body += "<circle class=\"ideal\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"2.5\" fill=\"" +
                        ink(r.colour) + "\"/>\n";
            body += "</g>\n";
            ++marked;
            matching += r.slope_matches;
        }
        summary["rectangles"] = marked;
        summary["slope_matches"] = matching;
    }

    if (opt.what != RenderWhat::Rectangles) {
        body += "<g class=\"cusps\">\n";
        for (int c : coast) {
            Pt p = at.at(c);
            body += "<circle class=\"cusp\" data-id=\"" + std::to_string(c) + "\" cx=\"" + num(p.x) + "\" cy=\"" +
                    num(p.y) + "\" r=\"2\" fill=\"#000\"/>\n";
        }
        body += "</g>\n";
    }

    Rendered out;
    out.svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kW) + "\" height=\"" + num(kH) +
              "\" viewBox=\"0 0 " + num(kW) + " " + num(kH) + "\">\n" + body + "</svg>\n";
    out.summary = summary;
    return out;
}

} // namespace veerkit
