#include "veerkit/reconstruct.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "veerkit/error.hpp"

namespace veerkit {

Reconstruction reconstruct(LinkSpace& ls, const std::vector<int>& tets) {
    Development& dev = ls.session().dev();
    std::set<int> in(tets.begin(), tets.end());
    Reconstruction out;
    std::map<int, int> index_of_label;
    for (int t : tets) {
        bool interior = true;
        for (int g = 0; g < 4; ++g) interior = interior && in.count(dev.neighbour(t, g));
        if (!interior) continue;
        ++out.interior;
        if (index_of_label.count(dev.base(t))) continue;
        index_of_label[dev.base(t)] = int(out.reps.size());
        out.reps.push_back(t);
        out.base_label.push_back(dev.base(t));
    }
    if (out.reps.empty()) throw Error(ErrorKind::InsufficientContinent, "no interior tetrahedra");
    const int n = int(out.reps.size());

    std::map<int, RectangleSignature> tet_rect;
    auto rect_of = [&](int t) -> const RectangleSignature& {
        auto it = tet_rect.find(t);
        if (it == tet_rect.end()) it = tet_rect.emplace(t, ls.tet_rectangle(t)).first;
        return it->second;
    };

    out.tri = Triangulation(n);
    for (int i = 0; i < n; ++i) {
        int r = out.reps[i];
        auto cr = dev.cusps_of(r);
        for (int g = 0; g < 4; ++g) {
            const auto& fr = ls.face_rectangle(r, g);
            std::set<int> fc(fr.cusps.begin(), fr.cusps.end());
            // The other tet whose rectangle contains the face rectangle.
            int found = -1;
            for (int u : tets) {
                if (u == r) continue;
                auto cu = dev.cusps_of(u);
                int shared = 0;
                for (int x : cu) shared += fc.count(x);
                if (shared != 3) continue;
                ++out.containment_checks;
                if (!ls.contains(fr, rect_of(u))) continue;
                VEERKIT_ASSERT(found < 0, "face rectangle inside two other tetrahedra");
                found = u;
            }
            if (found < 0) throw Error(ErrorKind::InsufficientContinent, "no tetrahedron across a face");
            auto lab = index_of_label.find(dev.base(found));
            if (lab == index_of_label.end())
                throw Error(ErrorKind::InsufficientContinent, "neighbour orbit has no interior lift");
            // Match vertices by cusp; the free vertex goes to the free vertex.
            auto cu = dev.cusps_of(found);
            std::array<int, 4> img{};
            int free_u = 0;
            for (int b = 0; b < 4; ++b)
                if (!fc.count(cu[b])) free_u = b;
            for (int a = 0; a < 4; ++a) {
                if (a == g) {
                    img[a] = free_u;
                    continue;
                }
                img[a] = int(std::find(cu.begin(), cu.end(), cr[a]) - cu.begin());
            }
            if (out.tri.gluing(i, g).glued()) continue;
            out.tri.join(i, g, lab->second, Perm4(img[0], img[1], img[2], img[3]));
        }
    }
    out.tri.validate();
    out.tri.finalize();

    // Pi-angles: the edges whose rectangles span the tet rectangle.
    out.pi_pair.assign(n, -1);
    out.colour.assign(out.tri.edge_count(), Colour::Red);
    std::vector<int> seen(out.tri.edge_count(), -1);
    for (int i = 0; i < n; ++i) {
        int r = out.reps[i];
        const auto& R = rect_of(r);
        std::vector<int> pis;
        for (int e = 0; e < 6; ++e) {
            const auto& er = ls.edge_rectangle(r, e);
            if (ls.spans(er, R, Axis::SN) || ls.spans(er, R, Axis::WE)) pis.push_back(e);
            bool diag = er.corner_c == Corner::SW || er.corner_c == Corner::NE;
            Colour c = diag ? Colour::Red : Colour::Blue;
            int cls = out.tri.edge_class(i, e);
            if (seen[cls] >= 0 && out.colour[cls] != c)
                throw Error(ErrorKind::Internal, "lifts of one edge disagree on colour");
            seen[cls] = 1;
            out.colour[cls] = c;
        }
        if (pis.size() != 2 || pis[0] != kOppositeEdge[pis[1]])
            throw Error(ErrorKind::Internal, "spanning edges are not one opposite pair");
        out.pi_pair[i] = pi_pair_of_edge(pis[0]);
    }
    return out;
}

std::optional<Isomorphism> find_isomorphism(const Triangulation& a, const std::vector<int>& pi_a,
                                            const std::vector<Colour>& col_a, const Triangulation& b,
                                            const std::vector<int>& pi_b, const std::vector<Colour>& col_b) {
    const int n = a.tet_count();
    if (n != b.tet_count() || n == 0) return std::nullopt;
    for (int t0 = 0; t0 < n; ++t0)
        for (int k = 0; k < 24; ++k) {
            Isomorphism iso;
            iso.tet.assign(n, -1);
            iso.vertices.assign(n, Perm4{});
            std::vector<char> used(n, 0);
            iso.tet[0] = t0;
            iso.vertices[0] = Perm4::from_ordered_index(k);
            used[t0] = 1;
            std::deque<int> q{0};
            bool ok = true;
            while (!q.empty() && ok) {
                int x = q.front();
                q.pop_front();
                for (int g = 0; g < 4 && ok; ++g) {
                    const Gluing& ga = a.gluing(x, g);
                    const Perm4& s = iso.vertices[x];
                    const Gluing& gb = b.gluing(iso.tet[x], s[g]);
                    if (ga.glued() != gb.glued()) {
                        ok = false;
                        break;
                    }
                    if (!ga.glued()) continue;
                    Perm4 s2 = gb.perm * s * ga.perm.inverse();
                    if (iso.tet[ga.tet] < 0) {
                        if (used[gb.tet]) {
                            ok = false;
                            break;
                        }
                        iso.tet[ga.tet] = gb.tet;
                        iso.vertices[ga.tet] = s2;
                        used[gb.tet] = 1;
                        q.push_back(ga.tet);
                    } else if (iso.tet[ga.tet] != gb.tet || !(iso.vertices[ga.tet] == s2)) {
                        ok = false;
                    }
                }
            }
            if (!ok) continue;
            if (std::find(iso.tet.begin(), iso.tet.end(), -1) != iso.tet.end()) continue;
            for (int x = 0; x < n && ok; ++x) {
                const Perm4& s = iso.vertices[x];
                for (int e = 0; e < 6 && ok; ++e) {
                    int e2 = edge_index(s[kEdgeVerts[e][0]], s[kEdgeVerts[e][1]]);
                    bool pa = pi_pair_of_edge(e) == pi_a[x], pb = pi_pair_of_edge(e2) == pi_b[iso.tet[x]];
                    ok = pa == pb && col_a[a.edge_class(x, e)] == col_b[b.edge_class(iso.tet[x], e2)];
                }
            }
            if (ok) return iso;
        }
    return std::nullopt;
}

} // namespace veerkit
