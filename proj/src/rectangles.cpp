#include "veerkit/rectangles.hpp"

#include <algorithm>
#include <set>

#include "veerkit/error.hpp"

namespace veerkit {

const char* to_string(RectKind k) {
    switch (k) {
    case RectKind::Edge: return "edge";
    case RectKind::Face: return "face";
    case RectKind::Tet: return "tet";
    }
    return "?";
}

const char* to_string(Corner c) {
    switch (c) {
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    }
    return "?";
}

int LinkSpace::find(int id) {
    while (parent_[id] != id) id = parent_[id] = parent_[parent_[id]];
    return id;
}

bool LinkSpace::same(LeafPoint a, LeafPoint b) {
    if (a.is_cusp() || b.is_cusp()) return a.is_cusp() && b.is_cusp() && a.cusp == b.cusp;
    return find(a.line) == find(b.line);
}

void LinkSpace::note_steps(int id, int from) {
    const auto& p = lines_[id];
    for (int k = from; k < p.size(); ++k) {
        std::pair<int, int> key{p.steps[k].face, int(p.which)};
        auto [it, fresh] = by_step_.emplace(key, id);
        if (fresh) continue;
        int a = find(it->second), b = find(id);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }
}

int LinkSpace::line_of(const TrackCusp& tip) {
    auto it = by_step_.find({tip.face, int(tip.which)});
    if (it != by_step_.end()) return find(it->second);
    int id = int(lines_.size());
    lines_.push_back(bl_.follow(tip, 0));
    parent_.push_back(id);
    note_steps(id, 0);
    return id;
}

void LinkSpace::deepen(int id, int by) {
    int from = lines_[id].size();
    bl_.extend(lines_[id], by);
    note_steps(id, from);
    ++deepenings_;
}

std::vector<std::vector<int>> LinkSpace::order(const std::vector<LeafPoint>& pts) {
    VEERKIT_ASSERT(!pts.empty(), "empty point set");
    std::vector<int> cls(pts.size());
    std::vector<int> deepest;  // per class: a line id with the longest prefix, or -1
    while (true) {
        // Classes of currently equal points.
        std::vector<int> reps;
        deepest.clear();
        for (size_t i = 0; i < pts.size(); ++i) {
            int found = -1;
            for (size_t r = 0; r < reps.size(); ++r)
                if (same(pts[reps[r]], pts[i])) found = int(r);
            if (found < 0) {
                found = int(reps.size());
                reps.push_back(int(i));
                deepest.push_back(-1);
            }
            cls[i] = found;
            if (!pts[i].is_cusp()) {
                int& d = deepest[found];
                if (d < 0 || lines_[pts[i].line].size() > lines_[d].size()) d = pts[i].line;
            }
        }
        auto arc = [&](int r) { return arc_of(s_.dev(), lines_[deepest[r]].steps.back()); };
        std::set<int> bad;
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j) {
                bool li = deepest[i] >= 0, lj = deepest[j] >= 0;
                if (li && lj) {
                    Arc A = arc(int(i)), B = arc(int(j));
                    if (!open_arcs_disjoint(s_, A, B)) {
                        // Deepen the line whose arc is wider; both on a tie.
                        int la = coast_offset(s_, A.from, A.to), lb = coast_offset(s_, B.from, B.to);
                        if (la >= lb) bad.insert(deepest[i]);
                        if (lb >= la) bad.insert(deepest[j]);
                    }
                } else if (li || lj) {
                    int r = li ? int(i) : int(j);
                    int z = pts[reps[li ? j : i]].cusp;
                    if (!outside_open_arc(s_, z, arc(r))) bad.insert(deepest[r]);
                }
            }
        if (bad.empty()) {
            // Sort classes by where they sit on the coast.
            auto key = [&](int r) {
                int at = deepest[r] < 0 ? pts[reps[r]].cusp : arc(r).from;
                return std::make_pair(at, deepest[r] < 0 ? 0 : 1);
            };
            int base = key(cls[0]).first;
            std::vector<int> idx(reps.size());
            for (size_t r = 0; r < idx.size(); ++r) idx[r] = int(r);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                auto ka = key(a), kb = key(b);
                return std::make_pair(coast_offset(s_, base, ka.first), ka.second) <
                       std::make_pair(coast_offset(s_, base, kb.first), kb.second);
            });
            std::rotate(idx.begin(), std::find(idx.begin(), idx.end(), cls[0]), idx.end());
            std::vector<std::vector<int>> out(reps.size());
            std::vector<int> slot(reps.size());
            for (size_t k = 0; k < idx.size(); ++k) slot[idx[k]] = int(k);
            for (size_t i = 0; i < pts.size(); ++i) out[slot[cls[i]]].push_back(int(i));
            return out;
        }
        for (int id : bad) deepen(id, std::max(1, lines_[id].size()));
    }
}

std::pair<int, int> LinkSpace::layer_of_edge(int t, int e) {
    Continent& M = s_.master();
    if (layering_version_ != M.version()) {
        layering_ = extract_layering(M);
        tet_pos_.clear();
        for (int j = 0; j < int(layering_.tets().size()); ++j) tet_pos_[layering_.tets()[j]] = j;
        layering_version_ = M.version();
    }
    Development& dev = s_.dev();
    return {tet_pos_.at(t) + (e == dev.top_edge_local(t) ? 1 : 0), dev.edge(t, e)};
}

LinkSpace::Tips LinkSpace::tips_around(int t, int e, int x) {
    Development& dev = s_.dev();
    int v = -1;
    for (int w = 0; w < 4; ++w)
        if (dev.cusp(t, w) == x) v = w;
    VEERKIT_ASSERT(v >= 0, "cusp not a vertex of the tet");
    for (int radius = 2;; radius *= 2) {
        auto [k, E] = layer_of_edge(t, e);
        Landscape K = layering_.layer(k);
        CrownSnapshot cs = crown_snapshot(dev, K, x);
        auto pe = std::find(cs.edges.begin(), cs.edges.end(), E);
        VEERKIT_ASSERT(pe != cs.edges.end(), "edge missing from the fan of its cusp");
        int p = int(pe - cs.edges.begin());
        Tips out;
        std::vector<std::pair<int, CrownTip>> at;
        for (auto& tip : cs.tips) {
            int q = int(std::find(cs.fan.begin(), cs.fan.end(), tip.tc.face) - cs.fan.begin());
            at.push_back({q, tip});
        }
        for (auto& [q, tip] : at)
            if (q >= p && out.acw.size() < 2) out.acw.push_back(tip);
        for (auto it = at.rbegin(); it != at.rend(); ++it)
            if (it->first < p && out.cw.size() < 2) out.cw.push_back(it->second);
        if (out.acw.size() == 2 && out.cw.size() == 2) return out;
        if (radius > 256) throw Error(ErrorKind::DepthExhausted, "fan around cusp stays too short");
        s_.grow_around_cusp(t, v, radius);
    }
}

// Side of p relative to the chord (x1, x2): 0 on it, 1 in the open arc
// x1 -> x2, 2 in the open arc x2 -> x1.
static int side_of(int p, int x1, int x2, int n) {
    if (p == x1 || p == x2) return 0;
    int a = ((p - x1) % n + n) % n, b = ((x2 - x1) % n + n) % n;
    return a < b ? 1 : 2;
}

bool LinkSpace::chord_equal(const Chord& x, const Chord& y) {
    return (same(x.a, y.a) && same(x.b, y.b)) || (same(x.a, y.b) && same(x.b, y.a));
}

namespace {

// Positions of chord endpoints after one certification.
struct ChordFrame {
    std::vector<std::array<int, 2>> at;
    int n = 0;
};

ChordFrame frame(LinkSpace& ls, const std::vector<Chord>& chords) {
    std::vector<LeafPoint> pts;
    for (auto& c : chords) {
        pts.push_back(c.a);
        pts.push_back(c.b);
    }
    auto groups = ls.order(pts);
    std::vector<int> pos(pts.size());
    for (size_t g = 0; g < groups.size(); ++g)
        for (int i : groups[g]) pos[i] = int(g);
    ChordFrame f;
    f.n = int(groups.size());
    for (size_t c = 0; c < chords.size(); ++c) f.at.push_back({pos[2 * c], pos[2 * c + 1]});
    return f;
}

bool eq(const std::array<int, 2>& x, const std::array<int, 2>& y) {
    return (x[0] == y[0] && x[1] == y[1]) || (x[0] == y[1] && x[1] == y[0]);
}

// Chord x weakly between chords a and b.
bool between(const ChordFrame& f, int x, int a, int b) {
    auto X = f.at[x], A = f.at[a], B = f.at[b];
    if (eq(X, A) || eq(X, B)) return true;
    auto side = [&](const std::array<int, 2>& c) {
        int s = 0;
        for (int p : c) {
            int q = side_of(p, X[0], X[1], f.n);
            if (q == 0) continue;
            if (s != 0 && s != q) return -1;  // crosses X
            s = q;
        }
        return s;
    };
    int sa = side(A), sb = side(B);
    return sa > 0 && sb > 0 && sa != sb;
}

} // namespace

bool LinkSpace::between(const Chord& x, const Chord& a, const Chord& b) {
    return veerkit::between(frame(*this, {x, a, b}), 0, 1, 2);
}

std::array<Chord, 2> LinkSpace::hull(const std::vector<Chord>& chords) {
    ChordFrame f = frame(*this, chords);
    int n = int(chords.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) ok = veerkit::between(f, k, i, j);
            if (ok) return {chords[i], chords[j]};
        }
    throw Error(ErrorKind::Internal, "chords have no hull");
}

bool LinkSpace::interval_contains(const std::array<Chord, 2>& outer, const std::array<Chord, 2>& inner) {
    ChordFrame f = frame(*this, {outer[0], outer[1], inner[0], inner[1]});
    return veerkit::between(f, 2, 0, 1) && veerkit::between(f, 3, 0, 1);
}

const RectangleSignature& LinkSpace::edge_rectangle(int t, int e) {
    Development& dev = s_.dev();
    int E = dev.edge(t, e);
    if (auto it = edge_cache_.find(E); it != edge_cache_.end()) return it->second;
    RectangleSignature r;
    r.kind = RectKind::Edge;
    r.tet = t;
    r.local = e;
    r.c = dev.cusp(t, kEdgeVerts[e][0]);
    r.d = dev.cusp(t, kEdgeVerts[e][1]);
    r.cusps = {r.c, r.d};
    r.ideal = {r.c, r.d};
    r.colour = dev.edge_colour(E);
    Tips tc = tips_around(t, e, r.c), td = tips_around(t, e, r.d);

    // Colour-free bounding chords: the nearest prongs of each type on
    // either side of the edge at each end.
    auto first = [](const Tips& tp, Side s, bool acw) {
        for (auto& x : acw ? tp.acw : tp.cw)
            if (x.which == s) return x.tc;
        throw Error(ErrorKind::Internal, "no prong of the wanted type next to the edge");
    };
    auto chord = [&](const Tips& tp, Side s, int pivot) {
        Chord ch;
        ch.a.line = line_of(first(tp, s, true));
        ch.b.line = line_of(first(tp, s, false));
        ch.pivot = pivot;
        return ch;
    };
    r.upper = {chord(tc, Side::Upper, r.c), chord(td, Side::Upper, r.d)};
    r.lower = {chord(tc, Side::Lower, r.c), chord(td, Side::Lower, r.d)};

    // Named leaves, read off by the edge colour.
    enum { S, T, U, V, S2, T2, U2, V2 };
    bool red = r.colour == Colour::Red;
    std::array<const CrownTip*, 8> named{};
    std::array<Side, 8> want{Side::Upper, Side::Upper, Side::Lower, Side::Lower,
                             Side::Upper, Side::Upper, Side::Lower, Side::Lower};
    if (red) {
        named[S] = &tc.acw[0], named[U2] = &tc.acw[1], named[U] = &tc.cw[0], named[S2] = &tc.cw[1];
        named[T] = &td.acw[0], named[V2] = &td.acw[1], named[V] = &td.cw[0], named[T2] = &td.cw[1];
    } else {
        named[U] = &tc.acw[0], named[S2] = &tc.acw[1], named[S] = &tc.cw[0], named[U2] = &tc.cw[1];
        named[V] = &td.acw[0], named[T2] = &td.acw[1], named[T] = &td.cw[0], named[V2] = &td.cw[1];
    }
    bool types_ok = true;
    for (int k = 0; k < 8; ++k) {
        types_ok = types_ok && named[k]->which == want[k];
        r.leaves[k] = line_of(named[k]->tc);
    }
    auto L = [&](int k) { LeafPoint p; p.line = r.leaves[k]; return p; };
    LeafPoint pc, pd;
    pc.cusp = r.c;
    pd.cusp = r.d;
    std::vector<LeafPoint> expect =
        red ? std::vector<LeafPoint>{pc, L(S2), L(T), L(U), L(V2), pd, L(T2), L(S), L(V), L(U2)}
            : std::vector<LeafPoint>{pc, L(U2), L(V), L(S), L(T2), pd, L(V2), L(U), L(T), L(S2)};
    auto groups = order(expect);
    r.order_certified = types_ok && groups.size() == expect.size();
    for (size_t g = 0; g < groups.size() && r.order_certified; ++g)
        r.order_certified = groups[g].size() == 1 && groups[g][0] == int(g);
    for (auto& g : groups) r.cyclic.push_back(expect[g[0]]);

    // Corner of c from the certified positions of the chord endpoints.
    ChordFrame f = frame(*this, {r.upper[0], r.upper[1], r.lower[0], r.lower[1]});
    int p = f.at[2][0], q = f.at[2][1], n = f.n;
    auto right_end = [&](int c) {
        for (int x : f.at[c])
            if (side_of(x, p, q, n) == 1) return ((x - p) % n + n) % n;
        return -1;
    };
    int r1 = right_end(0), r2 = right_end(1);
    bool west = r1 >= 0 && r2 >= 0 && r1 < r2;
    bool b2_left = side_of(f.at[3][0], p, q, n) == 2 && side_of(f.at[3][1], p, q, n) == 2;
    bool south = b2_left;
    r.corner_c = west ? (south ? Corner::SW : Corner::NW) : (south ? Corner::SE : Corner::NE);
    bool diag = r.corner_c == Corner::SW || r.corner_c == Corner::NE;
    r.slope_matches = r1 >= 0 && r2 >= 0 && diag == red;
    return edge_cache_.emplace(E, std::move(r)).first->second;
}

const RectangleSignature& LinkSpace::face_rectangle(int t, int f) {
    Development& dev = s_.dev();
    int F = dev.face_id(t, f);
    if (auto it = face_cache_.find(F); it != face_cache_.end()) return it->second;
    RectangleSignature r;
    r.kind = RectKind::Face;
    r.tet = t;
    r.local = f;
    std::vector<Chord> up, lo;
    for (int a = 0; a < 4; ++a) {
        if (a == f) continue;
        r.cusps.push_back(dev.cusp(t, a));
        for (int b = a + 1; b < 4; ++b) {
            if (b == f) continue;
            const auto& er = edge_rectangle(t, edge_index(a, b));
            up.insert(up.end(), er.upper.begin(), er.upper.end());
            lo.insert(lo.end(), er.lower.begin(), er.lower.end());
        }
    }
    r.upper = hull(up);
    r.lower = hull(lo);
    for (int x : r.cusps) {
        bool u = r.upper[0].pivot == x || r.upper[1].pivot == x;
        bool l = r.lower[0].pivot == x || r.lower[1].pivot == x;
        if (u && l) r.ideal.push_back(x);
    }
    return face_cache_.emplace(F, std::move(r)).first->second;
}

RectangleSignature LinkSpace::tet_rectangle(int t, Side from) {
    Development& dev = s_.dev();
    RectangleSignature r;
    r.kind = RectKind::Tet;
    r.tet = t;
    std::vector<Chord> up, lo;
    for (int g = 0; g < 4; ++g) {
        if (dev.is_upper_face(t, g) != (from == Side::Upper)) continue;
        const auto& fr = face_rectangle(t, g);
        up.insert(up.end(), fr.upper.begin(), fr.upper.end());
        lo.insert(lo.end(), fr.lower.begin(), fr.lower.end());
    }
    r.upper = hull(up);
    r.lower = hull(lo);
    for (int v = 0; v < 4; ++v) r.cusps.push_back(dev.cusp(t, v));
    for (auto* ch : {&r.upper[0], &r.upper[1], &r.lower[0], &r.lower[1]}) r.ideal.push_back(ch->pivot);
    return r;
}

bool LinkSpace::contains(const RectangleSignature& inner, const RectangleSignature& outer) {
    return interval_contains(outer.upper, inner.upper) && interval_contains(outer.lower, inner.lower);
}

bool LinkSpace::spans(const RectangleSignature& a, const RectangleSignature& b, Axis axis) {
    // Lower leaves run west-east, so south-north extent is the lower interval.
    if (axis == Axis::SN) return interval_contains(a.lower, b.lower);
    return interval_contains(a.upper, b.upper);
}

bool LinkSpace::same_rectangle(const RectangleSignature& a, const RectangleSignature& b) {
    auto same_pair = [&](const std::array<Chord, 2>& x, const std::array<Chord, 2>& y) {
        return (chord_equal(x[0], y[0]) && chord_equal(x[1], y[1])) ||
               (chord_equal(x[0], y[1]) && chord_equal(x[1], y[0]));
    };
    return same_pair(a.upper, b.upper) && same_pair(a.lower, b.lower);
}

std::string point_str(const LinkSpace& ls, const LeafPoint& p) {
    if (p.is_cusp()) return "c" + std::to_string(p.cusp);
    const auto& l = ls.line(p.line);
    return std::string(l.which == Side::Upper ? "U" : "L") + std::to_string(l.cusp) + "@" +
           std::to_string(l.steps.front().face);
}

} // namespace veerkit
