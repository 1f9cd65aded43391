// Brute-force check of the colour rule against a coordinate model of the
// tetrahedron. The library decides with face_rule on edge classes; the
// oracle embeds each tet in R^3 and reads the faces off directly.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>

#include "veerkit/taut.hpp"

namespace vktest {

using namespace veerkit;

struct V3 { double x, y, z; };
inline V3 sub(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline V3 cross(V3 a, V3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double dot(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Positive simplex for sign +1, its mirror image for -1.
inline V3 corner(int sign, int v) {
    static const V3 P[4] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    V3 p = P[v];
    if (sign < 0) p.z = -p.z;
    return p;
}

// Vertices of face f, anticlockwise as seen from outside.
inline std::array<int, 3> outside_ccw(int sign, int f) {
    std::array<int, 3> r{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) r[k++] = v;
    V3 a = corner(sign, r[0]), b = corner(sign, r[1]), c = corner(sign, r[2]);
    if (dot(cross(sub(b, a), sub(c, a)), sub(a, corner(sign, f))) < 0) std::swap(r[1], r[2]);
    return r;
}

// Colour rule on one model tet: red/blue per local edge, pi pair p.
inline bool oracle_tet_ok(int sign, int p, const std::array<Colour, 6>& col) {
    for (int f = 0; f < 4; ++f) {
        auto v = outside_ccw(sign, f);
        int e[3] = {edge_index(v[0], v[1]), edge_index(v[1], v[2]), edge_index(v[2], v[0])};
        int k = 0;
        while (pi_pair_of_edge(e[k]) != p) ++k;
        if (col[e[(k + 1) % 3]] != Colour::Red || col[e[(k + 2) % 3]] != Colour::Blue) return false;
    }
    return true;
}

// The colouring the oracle forces on a tet with pi pair p and the given
// pi-edge colours (bit 0: first pi edge, bit 1: second); nullopt if none.
inline std::optional<std::array<Colour, 6>> oracle_colouring(int sign, int p, int pi_bits) {
    for (int mask = 0; mask < 64; ++mask) {
        std::array<Colour, 6> col;
        for (int e = 0; e < 6; ++e) col[e] = (mask >> e) & 1 ? Colour::Blue : Colour::Red;
        int b0 = col[kPiPairEdges[p][0]] == Colour::Blue, b1 = col[kPiPairEdges[p][1]] == Colour::Blue;
        if ((b0 | (b1 << 1)) != pi_bits) continue;
        if (oracle_tet_ok(sign, p, col)) return col;
    }
    return std::nullopt;
}

struct LocalRuleTally {
    int single_cases = 0, single_accepted = 0, single_mismatch = 0;
    int kinds_per_pair_ok = 0;  // pi pairs whose accepted colourings give all four kinds
    long gluing_cases = 0, gluing_accepted = 0, gluing_mismatch = 0;
    std::map<std::pair<TetKind, TetKind>, int> arrows;  // below -> above
};

struct TetConfig {
    int pi, top, bits;
};

inline LocalRuleTally run_local_rule_check() {
    LocalRuleTally out;

    // One tet, every colouring of its six edges.
    for (int p = 0; p < 3; ++p) {
        Triangulation tri(1);
        tri.finalize();
        TransverseTautStructure s;
        s.pi_pair = {p};
        s.top_edge = {kPiPairEdges[p][1]};
        std::set<TetKind> kinds;
        for (int mask = 0; mask < 64; ++mask) {
            std::array<Colour, 6> col;
            s.colour.assign(tri.edge_count(), Colour::Red);
            for (int e = 0; e < 6; ++e) {
                col[e] = (mask >> e) & 1 ? Colour::Blue : Colour::Red;
                s.colour[tri.edge_class(0, e)] = col[e];
            }
            bool lib = true;
            for (int f = 0; f < 4; ++f) {
                FaceRule r = face_rule(tri, s, 0, f);
                lib = lib && s.colour[tri.edge_class(0, r.red_edge)] == Colour::Red &&
                      s.colour[tri.edge_class(0, r.blue_edge)] == Colour::Blue;
            }
            bool ora = oracle_tet_ok(+1, p, col);
            ++out.single_cases;
            out.single_accepted += ora;
            out.single_mismatch += lib != ora;
            if (ora) kinds.insert(classify_tetrahedra(tri, s)[0]);
        }
        out.kinds_per_pair_ok += kinds.size() == 4;
    }

    // Two tets glued along one face, every pair of configurations and
    // every bijection of the face's vertices.
    std::vector<TetConfig> configs;
    for (int p = 0; p < 3; ++p)
        for (int top = 0; top < 2; ++top)
            for (int bits = 0; bits < 4; ++bits) configs.push_back({p, top, bits});
    std::vector<Perm4> perms;
    for (int i = 0; i < 24; ++i) perms.push_back(Perm4::from_ordered_index(i));

    for (int fa = 0; fa < 4; ++fa)
        for (int fb = 0; fb < 4; ++fb)
            for (const Perm4& g : perms) {
                if (g[fa] != fb) continue;
                Triangulation tri(2);
                tri.join(0, fa, 1, g);
                tri.finalize();
                int sign1 = (*tri.orientation())[1];
                for (const TetConfig& A : configs)
                    for (const TetConfig& B : configs) {
                        auto ca = oracle_colouring(+1, A.pi, A.bits);
                        auto cb = oracle_colouring(sign1, B.pi, B.bits);
                        int topA = kPiPairEdges[A.pi][A.top], topB = kPiPairEdges[B.pi][B.top];
                        auto upper = [](int top, int f) { return kEdgeVerts[top][0] != f && kEdgeVerts[top][1] != f; };

                        // Oracle: one side upper, the other lower, and the
                        // three glued edges agree in colour.
                        bool ora = ca && cb && upper(topA, fa) != upper(topB, fb);
                        if (ora)
                            for (int e = 0; e < 6; ++e) {
                                if (kEdgeVerts[e][0] == fa || kEdgeVerts[e][1] == fa) continue;
                                int e2 = edge_index(g[kEdgeVerts[e][0]], g[kEdgeVerts[e][1]]);
                                ora = ora && (*ca)[e] == (*cb)[e2];
                            }

                        // Library: colours on edge classes, rejected when a
                        // class gets two colours, then the face rule on all
                        // eight faces and the co-orientation check.
                        TransverseTautStructure s;
                        s.pi_pair = {A.pi, B.pi};
                        s.top_edge = {topA, topB};
                        bool lib = coorientation_consistent(tri, s);
                        std::vector<int> cls(tri.edge_count(), -1);
                        int want[2][6];
                        for (int e = 0; e < 6; ++e) {
                            want[0][e] = ca ? int((*ca)[e]) : -1;
                            want[1][e] = cb ? int((*cb)[e]) : -1;
                        }
                        for (int t = 0; t < 2 && lib; ++t)
                            for (int e = 0; e < 6; ++e) {
                                int c = tri.edge_class(t, e);
                                int w = want[t][e];
                                if (w < 0 || (cls[c] >= 0 && cls[c] != w)) lib = false;
                                cls[c] = w;
                            }
                        if (lib) {
                            s.colour.clear();
                            for (int c : cls) s.colour.push_back(Colour(c));
                            for (int t = 0; t < 2 && lib; ++t)
                                for (int f = 0; f < 4; ++f) {
                                    FaceRule r = face_rule(tri, s, t, f);
                                    lib = lib && s.colour[tri.edge_class(t, r.red_edge)] == Colour::Red &&
                                          s.colour[tri.edge_class(t, r.blue_edge)] == Colour::Blue;
                                }
                        }
                        ++out.gluing_cases;
                        out.gluing_accepted += ora;
                        out.gluing_mismatch += lib != ora;
                        if (ora && lib) {
                            auto k = classify_tetrahedra(tri, s);
                            if (upper(topA, fa)) ++out.arrows[{k[0], k[1]}];
                            else ++out.arrows[{k[1], k[0]}];
                        }
                    }
            }
    return out;
}

} // namespace vktest
