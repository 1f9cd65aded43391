#include "veerkit/taut.hpp"

#include <deque>

#include "veerkit/error.hpp"

namespace veerkit {

const char* to_string(Colour c) { return c == Colour::Red ? "red" : "blue"; }

const char* to_string(TetKind k) {
    switch (k) {
    case TetKind::ToggleRedTop: return "ToggleRedTop";
    case TetKind::ToggleBlueTop: return "ToggleBlueTop";
    case TetKind::FanRed: return "FanRed";
    case TetKind::FanBlue: return "FanBlue";
    }
    return "?";
}

TautReport check_taut(const Triangulation& tri, const std::vector<int>& pi_pair) {
    TautReport r;
    r.pi_count.assign(tri.edge_count(), 0);
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int e : kPiPairEdges[pi_pair[t]]) ++r.pi_count[tri.edge_class(t, e)];
    for (int c = 0; c < tri.edge_count(); ++c)
        if (r.pi_count[c] != 2) {
            r.pass = false;
            r.violations.push_back("edge " + std::to_string(c) + " has " + std::to_string(r.pi_count[c]) +
                                   " pi angles");
        }
    // Each vertex corner of a tet meets exactly one edge of its pi pair,
    // so the corner angle sum is pi by construction; record it anyway.
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int v = 0; v < 4; ++v) {
            int n = 0;
            for (int e : kPiPairEdges[pi_pair[t]])
                if (kEdgeVerts[e][0] == v || kEdgeVerts[e][1] == v) ++n;
            r.vertex_corner.push_back(n);
            if (n != 1) {
                r.pass = false;
                r.violations.push_back("vertex corner " + std::to_string(t) + "." + std::to_string(v));
            }
        }
    return r;
}

bool coorientation_consistent(const Triangulation& tri, const TransverseTautStructure& s) {
    for (int t = 0; t < tri.tet_count(); ++t) {
        if (!s.is_pi(t, s.top_edge[t])) return false;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            if (s.is_upper_face(t, f) == s.is_upper_face(g.tet, g.face)) return false;
        }
    }
    return true;
}

TransverseTautStructure derive_coorientations(const Triangulation& tri, const std::vector<int>& pi_pair) {
    TransverseTautStructure s;
    s.pi_pair = pi_pair;
    const int n = tri.tet_count();
    s.top_edge.assign(n, -1);
    if (n == 0) return s;
    for (int start = 0; start < n; ++start) {
        if (s.top_edge[start] >= 0) continue;
        s.top_edge[start] = kPiPairEdges[pi_pair[start]][1];
        std::deque<int> q{start};
        while (!q.empty()) {
            int t = q.front();
            q.pop_front();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.gluing(t, f);
                if (!g.glued() || s.top_edge[g.tet] >= 0) continue;
                bool want_upper = !s.is_upper_face(t, f);
                for (int e : kPiPairEdges[pi_pair[g.tet]]) {
                    s.top_edge[g.tet] = e;
                    if (s.is_upper_face(g.tet, g.face) == want_upper) break;
                }
                q.push_back(g.tet);
            }
        }
    }
    if (!coorientation_consistent(tri, s))
        throw Error(ErrorKind::NotTransverse, "face co-orientations cannot be made consistent");
    return s;
}

TransverseTautStructure reversed(const TransverseTautStructure& s) {
    TransverseTautStructure r = s;
    for (auto& e : r.top_edge) e = kOppositeEdge[e];
    return r;
}

FaceRule face_rule(const Triangulation& tri, const TransverseTautStructure& s, int t, int f) {
    VEERKIT_ASSERT(tri.orientation().has_value(), "veering colours need an oriented triangulation");
    auto v = face_vertices_outside_ccw(f, (*tri.orientation())[t]);
    int edges[3] = {edge_index(v[0], v[1]), edge_index(v[1], v[2]), edge_index(v[2], v[0])};
    int k = 0;
    while (!s.is_pi(t, edges[k])) ++k;
    return {edges[k], edges[(k + 1) % 3], edges[(k + 2) % 3]};
}

TransverseTautStructure derive_veering_colours(const Triangulation& tri, TransverseTautStructure s) {
    if (!tri.orientation())
        throw Error(ErrorKind::NotVeering, "triangulation is not oriented");
    const int ne = tri.edge_count();
    std::vector<int> col(ne, -1);  // 0 red, 1 blue
    auto force = [&](int t, int e, int c) {
        int cls = tri.edge_class(t, e);
        if (col[cls] >= 0 && col[cls] != c)
            throw Error(ErrorKind::NotVeering, "edge " + std::to_string(cls) + " forced both red and blue");
        col[cls] = c;
    };
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            FaceRule r = face_rule(tri, s, t, f);
            force(t, r.red_edge, 0);
            force(t, r.blue_edge, 1);
        }
    s.colour.clear();
    for (int c = 0; c < ne; ++c) {
        if (col[c] < 0)
            throw Error(ErrorKind::UnconstrainedEdge, "edge " + std::to_string(c) + " receives no colour");
        s.colour.push_back(col[c] ? Colour::Blue : Colour::Red);
    }
    return s;
}

std::vector<TetKind> classify_tetrahedra(const Triangulation& tri, const TransverseTautStructure& s) {
    std::vector<TetKind> out;
    for (int t = 0; t < tri.tet_count(); ++t) {
        int red = 0;
        for (int e = 0; e < 6; ++e)
            if (s.colour[tri.edge_class(t, e)] == Colour::Red) ++red;
        bool top_red = s.colour[tri.edge_class(t, s.top_edge[t])] == Colour::Red;
        if (red == 3)
            out.push_back(top_red ? TetKind::ToggleRedTop : TetKind::ToggleBlueTop);
        else
            out.push_back(red > 3 ? TetKind::FanRed : TetKind::FanBlue);
    }
    return out;
}

std::vector<EdgeReport> edge_neighbourhood_report(const Triangulation& tri, const TransverseTautStructure& s) {
    std::vector<EdgeReport> out;
    auto kinds = classify_tetrahedra(tri, s);
    for (int cls = 0; cls < tri.edge_count(); ++cls) {
        EdgeReport r;
        r.edge = cls;
        r.colour = s.colour[cls];
        auto cyc = tri.edge_cycle(cls);
        r.degree = int(cyc.size());
        // Position of the tet below e (e is its top edge) and above e.
        int below = -1, above = -1, nb = 0, na = 0;
        for (int i = 0; i < r.degree; ++i) {
            if (cyc[i].edge == s.top_edge[cyc[i].tet]) { below = i; ++nb; }
            if (cyc[i].edge == s.bottom_edge(cyc[i].tet)) { above = i; ++na; }
        }
        r.one_below = nb == 1;
        r.one_above = na == 1;
        bool ok = r.one_above && r.one_below;
        const Colour c = r.colour, o = other(c);
        const TetKind fan_c = c == Colour::Blue ? TetKind::FanBlue : TetKind::FanRed;
        const TetKind fan_o = c == Colour::Blue ? TetKind::FanRed : TetKind::FanBlue;
        const TetKind tog_otop = o == Colour::Red ? TetKind::ToggleRedTop : TetKind::ToggleBlueTop;
        const TetKind tog_ctop = c == Colour::Red ? TetKind::ToggleRedTop : TetKind::ToggleBlueTop;
        r.side_pattern = ok;
        if (ok) {
            for (int dir = 0; dir < 2; ++dir) {
                // Walk from the tet below to the tet above on one side.
                std::vector<TetKind> stack;
                int step = dir == 0 ? 1 : -1;
                for (int i = (below + step + r.degree) % r.degree; i != above; i = (i + step + r.degree) % r.degree)
                    stack.push_back(kinds[cyc[i].tet]);
                r.side_sizes[dir] = int(stack.size());
                bool good;
                if (stack.empty()) {
                    good = false;
                } else if (stack.size() == 1) {
                    good = stack[0] == fan_c;
                } else {
                    good = stack.front() == tog_otop && stack.back() == tog_ctop;
                    for (size_t k = 1; k + 1 < stack.size(); ++k) good = good && stack[k] == fan_o;
                }
                r.side_pattern = r.side_pattern && good;
            }
        }
        // Faces between consecutive corners of the cycle.
        for (int i = 0; i < r.degree; ++i) {
            int t = cyc[i].tet, e = cyc[i].edge;
            int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
            // Exit face used by the cycle walk: the face that is shared with the
            // next tet, found by matching the next corner.
            int nt = cyc[(i + 1) % r.degree].tet;
            int face = -1;
            for (int f = 0; f < 4 && face < 0; ++f) {
                if (f == a || f == b) continue;
                const Gluing& g = tri.gluing(t, f);
                if (g.tet == nt && edge_index(g.perm[a], g.perm[b]) == cyc[(i + 1) % r.degree].edge) face = f;
            }
            if (face < 0) continue;
            int same = 0;
            for (int ee = 0; ee < 6; ++ee) {
                int x = kEdgeVerts[ee][0], y = kEdgeVerts[ee][1];
                if (x == face || y == face) continue;
                if (s.colour[tri.edge_class(t, ee)] == c) ++same;
            }
            if (same >= 2) ++r.majority_faces;
        }
        r.pass = ok && r.side_pattern && r.majority_faces == 4;
        if (!r.pass)
            r.detail = "above/below " + std::to_string(na) + "/" + std::to_string(nb) + ", sides " +
                       std::to_string(r.side_sizes[0]) + "/" + std::to_string(r.side_sizes[1]) +
                       ", majority faces " + std::to_string(r.majority_faces);
        out.push_back(r);
    }
    return out;
}

} // namespace veerkit
