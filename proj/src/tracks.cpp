#include "veerkit/tracks.hpp"

#include <algorithm>
#include <set>

#include "veerkit/error.hpp"

namespace veerkit {

namespace {

TrackCusp make(const FaceView& fv, Side which) {
    int i = fv.pointed(which);
    TrackCusp tc;
    tc.at = fv.ref;
    tc.face = fv.id;
    tc.edge = fv.edge[i];
    tc.apex = fv.cusp[i];
    tc.which = which;
    return tc;
}

TrackStructure track_of(const Landscape& L, Side s) {
    TrackStructure ts;
    ts.which = s;
    for (auto& [id, fv] : L.faces()) {
        int i = fv.pointed(s);
        ts.faces.push_back({id, fv.edge[i], {fv.edge[(i + 1) % 3], fv.edge[(i + 2) % 3]}});
    }
    for (int e : L.edges())
        if (!L.is_coastal(e)) ts.edges[e] = classify_edge(L, e, s);
    return ts;
}

} // namespace

TrackCusp track_cusp(Development& dev, FaceRef at, Side which) {
    return make(dev.face_view(at.tet, at.face), which);
}

std::optional<TrackCusp> track_cusp_at(Development& dev, FaceRef at, Side which, int c) {
    FaceView fv = dev.face_view(at.tet, at.face);
    if (fv.cusp[fv.pointed(which)] != c) return std::nullopt;
    return make(fv, which);
}

int coast_offset(Session& s, int b, int v) {
    int n = int(s.coast().size());
    return ((s.position(v) - s.position(b)) % n + n) % n;
}

bool open_arcs_disjoint(Session& s, Arc p, Arc q) {
    int c = coast_offset(s, p.to, q.from), d = coast_offset(s, p.to, q.to), a = coast_offset(s, p.to, p.from);
    return c <= d && d <= a && c < d;
}

bool outside_open_arc(Session& s, int z, Arc p) {
    return z == p.from || z == p.to || !s.in_arc(z, p.from, p.to);
}

TrackStructure upper_track(const Landscape& L) { return track_of(L, Side::Upper); }
TrackStructure lower_track(const Landscape& L) { return track_of(L, Side::Lower); }

Arc arc_of(Development& dev, const TrackCusp& tc) {
    FaceView fv = dev.face_view(tc.at.tet, tc.at.face);
    int i = fv.pointed(tc.which);
    return {fv.cusp[(i + 1) % 3], fv.cusp[(i + 2) % 3]};
}

TrackCusp BranchLines::next(const TrackCusp& tc) {
    long long key = 2LL * tc.face + (tc.which == Side::Upper ? 0 : 1);
    if (auto it = next_.find(key); it != next_.end()) return it->second;
    Development& dev = s_.dev();
    int t = tc.at.tet, f = tc.at.face;
    bool up = tc.which == Side::Upper;
    // The tet on the far side of the face in the direction of travel.
    bool t_below = dev.is_upper_face(t, f);
    int u = (t_below == up) ? s_.ensure_across(t, f) : t;
    std::optional<TrackCusp> found;
    for (int g = 0; g < 4; ++g) {
        if (dev.is_upper_face(u, g) != up) continue;
        if (auto c = track_cusp_at(dev, {u, g}, tc.which, tc.apex)) {
            VEERKIT_ASSERT(!found, "two successors on one branch line");
            found = c;
        }
    }
    VEERKIT_ASSERT(found.has_value(), "branch line has no successor");
    next_[key] = *found;
    return *found;
}

BranchLinePrefix BranchLines::follow(const TrackCusp& start, int n) {
    BranchLinePrefix p;
    p.cusp = start.apex;
    p.which = start.which;
    p.steps.push_back(start);
    p.edges.push_back(start.edge);
    extend(p, n);
    return p;
}

void BranchLines::extend(BranchLinePrefix& p, int n) {
    for (int i = 0; i < n; ++i) {
        if (p.size() > s_.config().max_arc_depth)
            throw Error(ErrorKind::DepthExhausted, "branch line longer than max_arc_depth");
        TrackCusp nx = next(p.steps.back());
        p.steps.push_back(nx);
        p.edges.push_back(nx.edge);
    }
}

BranchLinePrefix follow_branch_line(Session& s, const TrackCusp& start, int n) {
    BranchLines bl(s);
    return bl.follow(start, n);
}

bool arcs_nested(Session& s, const BranchLinePrefix& p) {
    std::vector<Arc> arcs;
    for (auto& st : p.steps) arcs.push_back(arc_of(s.dev(), st));
    for (size_t i = 0; i + 1 < arcs.size(); ++i) {
        Arc a = arcs[i], b = arcs[i + 1];
        int rf = coast_offset(s, a.from, b.from), rt = coast_offset(s, a.from, b.to), ra = coast_offset(s, a.from, a.to);
        if (!(rf <= rt && rt <= ra)) return false;
        if ((b.from == a.from) == (b.to == a.to)) return false;
    }
    return true;
}

int colour_window(Session& s, const BranchLinePrefix& p) {
    int run = 0, best = 0;
    Colour prev = Colour::Red;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        Colour c = s.dev().edge_colour(p.edges[i]);
        run = (i > 0 && c == prev) ? run + 1 : 1;
        prev = c;
        best = std::max(best, run);
    }
    if (best >= p.size()) return -1;
    return best + 1;
}

int exclusion_depth(Session& s, const BranchLinePrefix& p, int x) {
    for (int i = 0; i < p.size(); ++i) {
        Arc a = arc_of(s.dev(), p.steps[i]);
        if (!s.in_arc(x, a.from, a.to)) return i;
    }
    return -1;
}

std::vector<std::pair<int, int>> layer_ranges(const Layering& lay, const BranchLinePrefix& p) {
    std::vector<std::pair<int, int>> out(p.size(), {-1, -1});
    auto all = lay.all();
    for (int k = 0; k < int(all.size()); ++k)
        for (int i = 0; i < p.size(); ++i)
            if (all[k].contains(p.steps[i].face)) {
                if (out[i].first < 0) out[i].first = k;
                out[i].second = k;
            }
    return out;
}

std::vector<int> certify_order(BranchLines& bl, std::vector<CirclePoint> pts) {
    Session& s = bl.session();
    auto cur = [&](const CirclePoint& p) { return arc_of(s.dev(), p.line->steps.back()); };
    while (true) {
        std::set<BranchLinePrefix*> deepen;
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                auto& p = pts[i];
                auto& q = pts[j];
                if (p.is_cusp() && q.is_cusp()) continue;
                if (!p.is_cusp() && !q.is_cusp()) {
                    if (p.line == q.line) continue;
                    if (!open_arcs_disjoint(s, cur(p), cur(q))) {
                        deepen.insert(p.line);
                        deepen.insert(q.line);
                    }
                } else {
                    auto& l = p.is_cusp() ? q : p;
                    int z = p.is_cusp() ? p.cusp : q.cusp;
                    if (!outside_open_arc(s, z, cur(l))) deepen.insert(l.line);
                }
            }
        if (deepen.empty()) break;
        for (auto* l : deepen) bl.extend(*l, std::max(1, l->size()));
    }
    auto key = [&](const CirclePoint& p) {
        return std::make_pair(p.is_cusp() ? p.cusp : cur(p).from, p.is_cusp() ? 0 : 1);
    };
    int base = key(pts[0]).first;
    std::vector<int> idx(pts.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto ka = key(pts[a]), kb = key(pts[b]);
        return std::make_pair(coast_offset(s, base, ka.first), ka.second) <
               std::make_pair(coast_offset(s, base, kb.first), kb.second);
    });
    std::rotate(idx.begin(), std::find(idx.begin(), idx.end(), 0), idx.end());
    return idx;
}

CrownSnapshot crown_snapshot(Development& dev, const Landscape& L, int c) {
    CrownSnapshot cs;
    cs.cusp = c;
    std::map<int, int> by_in;  // in-edge -> face
    std::set<int> outs;
    for (auto& [id, fv] : L.faces()) {
        int i = fv.index_of_cusp(c);
        if (i < 0) continue;
        by_in[fv.edge[(i + 2) % 3]] = id;
        outs.insert(fv.edge[(i + 1) % 3]);
    }
    if (by_in.empty()) return cs;
    int start = -1;
    for (auto& [e, id] : by_in)
        if (!outs.count(e)) start = id;
    if (start < 0) {
        cs.cyclic = true;
        start = by_in.begin()->second;
        for (auto& [e, id] : by_in) start = std::min(start, id);
    }
    int f = start;
    {
        const FaceView& fv = L.face(f);
        cs.edges.push_back(fv.edge[(fv.index_of_cusp(c) + 2) % 3]);
    }
    while (true) {
        const FaceView& fv = L.face(f);
        int i = fv.index_of_cusp(c);
        cs.fan.push_back(f);
        if (fv.up == i) cs.tips.push_back({Side::Upper, make(fv, Side::Upper)});
        if (fv.low == i) cs.tips.push_back({Side::Lower, make(fv, Side::Lower)});
        int out = fv.edge[(i + 1) % 3];
        auto it = by_in.find(out);
        if (it == by_in.end() || it->second == start) {
            if (!cs.cyclic) cs.edges.push_back(out);
            break;
        }
        cs.edges.push_back(out);
        f = it->second;
    }
    (void)dev;
    return cs;
}

std::vector<Side> crown_pattern(Development& dev, const CrownSnapshot& cs) {
    std::vector<Side> out;
    int n = int(cs.edges.size());
    int pairs = cs.cyclic ? n : n - 1;
    for (int k = 0; k < pairs; ++k) {
        Colour a = dev.edge_colour(cs.edges[k]), b = dev.edge_colour(cs.edges[(k + 1) % n]);
        if (a == Colour::Red && b == Colour::Blue) out.push_back(Side::Upper);
        if (a == Colour::Blue && b == Colour::Red) out.push_back(Side::Lower);
    }
    return out;
}

bool crown_interleaves(Development& dev, const CrownSnapshot& cs) {
    auto pat = crown_pattern(dev, cs);
    if (pat.size() != cs.tips.size()) return false;
    for (size_t k = 0; k < pat.size(); ++k) {
        if (pat[k] != cs.tips[k].which) return false;
        if (k > 0 && pat[k] == pat[k - 1]) return false;
    }
    if (cs.cyclic && !pat.empty() && pat.front() == pat.back()) return false;
    return true;
}

namespace {

// Edges crossed when a path through the far faces of t is collapsed onto
// its near faces. `tip_moves` when the path starts in a far face.
std::vector<int> pull_through(Development& dev, int t, Side side, const std::vector<int>& path,
                              bool tip_moves) {
    bool up = side == Side::Upper;
    int far_int = up ? dev.top_edge(t) : dev.bottom_edge(t);
    int near_int = up ? dev.bottom_edge(t) : dev.top_edge(t);
    // Boundary edges of the patch, labelled by the near face they lie in.
    std::map<int, int> near_side;
    int k = 0;
    for (int g = 0; g < 4; ++g) {
        if (dev.is_upper_face(t, g) == up) continue;
        FaceView fv = dev.face_view(t, g);
        for (int e : fv.edge)
            if (e != near_int) near_side[e] = k;
        ++k;
    }
    std::vector<int> out;
    if (tip_moves) out.push_back(near_int);
    for (int u : path) {
        int v = u == far_int ? near_int : u;
        if (!out.empty()) {
            auto a = near_side.find(out.back()), b = near_side.find(v);
            if (a != near_side.end() && b != near_side.end() && a->second != b->second)
                out.push_back(near_int);
        }
        VEERKIT_ASSERT(out.empty() || out.back() != v, "collapsed path backtracks");
        out.push_back(v);
    }
    return out;
}

int shared_face(const Landscape& L, int a, int b) {
    for (int f : L.faces_at(a))
        if (L.face(f).index_of_edge(b) >= 0) return f;
    return -1;
}

} // namespace

TrainRay cusp_train_ray(BranchLines& bl, BranchLinePrefix& p, int n) {
    Session& s = bl.session();
    Development& dev = s.dev();
    Side side = p.which;
    bool up = side == Side::Upper;
    if (p.size() < n + 2) bl.extend(p, n + 2 - p.size());
    Layering lay = extract_layering(s.master());
    std::unordered_map<int, int> pos;
    for (int j = 0; j < int(lay.tets().size()); ++j) pos[lay.tets()[j]] = j;
    // The tet that covers step i: above it for upper lines, below for lower.
    auto covering = [&](int i) {
        const TrackCusp& st = p.steps[i];
        int nb = dev.neighbour(st.at.tet, st.at.face);
        int t = (dev.is_upper_face(st.at.tet, st.at.face) == up) ? nb : st.at.tet;
        VEERKIT_ASSERT(pos.count(t), "covering tet not in the master");
        return pos[t];
    };
    // Layers are indexed bottom to top; lower lines run downward.
    int k0 = up ? covering(0) : covering(0) + 1;
    int kn = up ? (n == 0 ? k0 : covering(n - 1) + 1) : (n == 0 ? k0 : covering(n - 1));
    std::vector<int> path{p.steps[n].edge};
    int step = n;
    auto pull = [&](int j) {
        int t = lay.tets()[j];
        bool moves = false;
        if (step > 0) {
            const TrackCusp& st = p.steps[step];
            int nb = dev.neighbour(st.at.tet, st.at.face);
            int holder = (dev.is_upper_face(st.at.tet, st.at.face) == up) ? st.at.tet : nb;
            moves = holder == t;
        }
        path = pull_through(dev, t, side, path, moves);
        if (moves) --step;
    };
    if (up)
        for (int j = kn - 1; j >= k0; --j) pull(j);
    else
        for (int j = kn; j < k0; ++j) pull(j);
    VEERKIT_ASSERT(step == 0, "pulled path does not start at the first step");
    TrainRay r;
    r.layer = k0;
    r.tip = p.steps[0];
    r.crossings = path;
    Landscape K = lay.layer(k0);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        int f = shared_face(K, path[i], path[i + 1]);
        VEERKIT_ASSERT(f >= 0, "consecutive crossings share no face");
        const FaceView& fv = K.face(f);
        int a = fv.index_of_edge(path[i]), b = fv.index_of_edge(path[i + 1]);
        r.faces.push_back(f);
        r.turns.push_back(b == (a + 1) % 3 ? Turn::Right : Turn::Left);
    }
    return r;
}

bool route_valid(const Landscape& L, Side side, const std::vector<int>& crossings) {
    for (size_t i = 0; i + 1 < crossings.size(); ++i) {
        if (crossings[i] == crossings[i + 1]) return false;
        int f = shared_face(L, crossings[i], crossings[i + 1]);
        if (f < 0) return false;
        const FaceView& fv = L.face(f);
        int k = fv.pointed(side);
        int a = fv.index_of_edge(crossings[i]), b = fv.index_of_edge(crossings[i + 1]);
        // Entering through a feed forces the exit through the pointed edge.
        if (a != k && b != k) return false;
        if (i > 0 && shared_face(L, crossings[i - 1], crossings[i]) == f) return false;
    }
    return true;
}

} // namespace veerkit
