#include "veerkit/continent.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "veerkit/error.hpp"

namespace veerkit {

Continent::Continent(std::shared_ptr<Development> dev, int tet) : dev_(std::move(dev)) {
    in_.assign(dev_->size(), 0);
    in_[tet] = 1;
    tets_.push_back(tet);
    for (int g = 0; g < 4; ++g) {
        FaceView fv = dev_->face_view(tet, g);
        (fv.ref_below ? upper_ : lower_).add(fv);
    }
}

Continent Continent::initial(std::shared_ptr<const VeeringTriangulation> vt, int base_tet) {
    auto dev = std::make_shared<Development>(std::move(vt));
    int t = dev->create(base_tet);
    return Continent(dev, t);
}

void Continent::add(int tet) {
    VEERKIT_ASSERT(!contains(tet), "tet already in continent");
    if (int(in_.size()) < dev_->size()) in_.resize(dev_->size(), 0);
    for (int g = 0; g < 4; ++g) {
        int nb = dev_->neighbour(tet, g);
        int fid = dev_->face_id(tet, g);
        if (contains(nb)) {
            if (upper_.contains(fid))
                upper_.remove(fid);
            else if (lower_.contains(fid))
                lower_.remove(fid);
            else
                VEERKIT_ASSERT(false, "shared face missing from the boundary");
        } else {
            FaceView fv = dev_->face_view(tet, g);
            (fv.ref_below ? upper_ : lower_).add(fv);
        }
    }
    in_[tet] = 1;
    tets_.push_back(tet);
    ++version_;
}

std::vector<int> Continent::coast() const {
    auto a = upper_.coast(), b = lower_.coast();
    VEERKIT_ASSERT(!a.empty() && a == b, "upper and lower coasts disagree");
    return a;
}

bool Continent::is_convex() const {
    return sinks(upper_, Side::Upper).empty() && sinks(lower_, Side::Lower).empty();
}

FaceRef Continent::inner(int face_id, Side s) const { return boundary(s).face(face_id).ref; }

int Continent::outer_resolve(int face_id, Side s) {
    FaceRef r = inner(face_id, s);
    return dev_->resolve(r.tet, r.face);
}

River maximal_river(const Landscape& L, int face_id, Side s) {
    River r;
    r.side = s;
    std::set<int> seen;
    int cur = face_id;
    while (true) {
        VEERKIT_ASSERT(seen.insert(cur).second, "river revisits a face");
        r.faces.push_back(cur);
        const FaceView& F = L.face(cur);
        int e = F.edge[F.pointed(s)];
        int g = L.across(cur, e);
        if (g < 0) {
            r.mouth = e;
            r.coastal = true;
            break;
        }
        const FaceView& G = L.face(g);
        if (G.edge[G.pointed(s)] == e) {
            r.mouth = e;
            r.coastal = false;
            break;
        }
        r.falls.push_back(e);
        cur = g;
    }
    return r;
}

namespace {

int local_edge(const FaceView& f, int k) {
    return edge_index(f.local[(k + 1) % 3], f.local[(k + 2) % 3]);
}

} // namespace

River maximal_river(const Continent& C, int face_id, Side s) {
    const Landscape& L = C.boundary(s);
    River r = maximal_river(L, face_id, s);
    Development& dev = C.dev();
    for (size_t i = 0; i < r.falls.size(); ++i) {
        const FaceView& F = L.face(r.faces[i]);
        int k = F.index_of_edge(r.falls[i]);
        auto around = dev.around_edge(F.ref.tet, local_edge(F, k));
        int count = 0;
        for (auto& x : around.chain)
            if (C.contains(x.tet)) ++count;
        r.heights.push_back(dev.edge_degree(r.falls[i]) - count);
    }
    return r;
}

Complexity river_complexity(const River& r) {
    Complexity c;
    c.v.push_back(r.length());
    VEERKIT_ASSERT(r.heights.size() + 1 == r.faces.size(), "river heights not computed");
    c.v.insert(c.v.end(), r.heights.begin(), r.heights.end());
    return c;
}

LandfillResult landfill(Continent& C, int e, Side s) {
    const Landscape& L = C.boundary(s);
    auto fs = L.faces_at(e);
    if (fs.empty()) throw Error(ErrorKind::NotAMouth, "edge is not on the " + std::string(to_string(s)) + " boundary");
    for (int f : fs) {
        const FaceView& F = L.face(f);
        if (F.edge[F.pointed(s)] != e) throw Error(ErrorKind::NotAMouth, "edge is a fall or watershed");
    }
    Development& dev = C.dev();
    std::sort(fs.begin(), fs.end());
    FaceRef r = C.inner(fs[0], s);
    int n = dev.resolve(r.tet, r.face);
    int pi = s == Side::Upper ? dev.bottom_edge(n) : dev.top_edge(n);
    VEERKIT_ASSERT(pi == e, "landfill tet does not sit on the mouth");
    if (fs.size() == 2) {
        FaceRef r2 = C.inner(fs[1], s);
        VEERKIT_ASSERT(dev.neighbour(r2.tet, r2.face) == n, "in-fill tet not glued to both sink faces");
    }
    C.add(n);
    return {n, fs.size() == 1};
}

ConvexifyStats convexify(Continent& C) {
    ConvexifyStats st;
    st.faces_upper_start = C.upper().size();
    st.faces_lower_start = C.lower().size();
    for (Side s : {Side::Upper, Side::Lower}) {
        while (true) {
            auto sk = sinks(C.boundary(s), s);
            if (sk.empty()) break;
            landfill(C, sk.front(), s);
            ++(s == Side::Upper ? st.infills_upper : st.infills_lower);
        }
    }
    return st;
}

ChannelResult channelise(Continent& C, int face_id, Side s) {
    if (!C.is_convex()) throw Error(ErrorKind::NotConvex, "channelisation needs a convex continent");
    if (!C.boundary(s).contains(face_id))
        throw Error(ErrorKind::FaceNotOnBoundary, "face " + std::to_string(face_id) + " not on the boundary");
    ChannelResult out;
    out.river = maximal_river(C, face_id, s);
    VEERKIT_ASSERT(out.river.coastal, "river of a convex continent ends at a sink");
    out.coastal_tet = landfill(C, out.river.mouth, s).tet;
    out.convexify = convexify(C);
    return out;
}

int default_max_rounds() {
    if (const char* env = std::getenv("VEERKIT_MAX_DEPTH")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

int grow_to_include(Continent& C, int start, const std::vector<int>& path, int max_rounds) {
    if (max_rounds < 0) max_rounds = default_max_rounds();
    Development& dev = C.dev();
    VEERKIT_ASSERT(C.contains(start), "path must start inside the continent");
    if (!path.empty() && !C.is_convex()) convexify(C);
    int cur = start;
    for (int g : path) {
        int rounds = 0;
        while (!C.contains(dev.neighbour(cur, g))) {
            if (rounds >= max_rounds)
                throw Error(ErrorKind::DepthExhausted,
                            "face not covered after " + std::to_string(max_rounds) + " channelisations");
            Side s = dev.is_upper_face(cur, g) ? Side::Upper : Side::Lower;
            channelise(C, dev.face_id(cur, g), s);
            ++rounds;
        }
        cur = dev.neighbour(cur, g);
    }
    return cur;
}

Landscape Layering::layer(int k) const {
    Landscape L = bottom_;
    for (int i = 0; i < k; ++i) {
        for (int f : removed_[i]) L.remove(f);
        for (auto& fv : added_[i]) L.add(fv);
    }
    return L;
}

std::vector<Landscape> Layering::all() const {
    std::vector<Landscape> out;
    Landscape L = bottom_;
    out.push_back(L);
    for (size_t i = 0; i < tets_.size(); ++i) {
        for (int f : removed_[i]) L.remove(f);
        for (auto& fv : added_[i]) L.add(fv);
        out.push_back(L);
    }
    return out;
}

Layering extract_layering(const Continent& C) {
    Development& dev = C.dev();
    Layering out;
    out.bottom_ = C.lower();
    Landscape L = C.lower();
    std::set<int> used;
    auto above = [&](const FaceView& F) {
        return F.ref_below ? dev.neighbour(F.ref.tet, F.ref.face) : F.ref.tet;
    };
    for (int step = 0; step < C.size(); ++step) {
        int source = -1;
        for (auto& [id, F] : L.faces()) {
            int a = above(F);
            if (C.contains(a) && !used.count(a)) {
                source = id;
                break;
            }
        }
        VEERKIT_ASSERT(source >= 0, "no tet of the continent above the current layer");
        River r = maximal_river(L, source, Side::Upper);
        VEERKIT_ASSERT(!r.coastal, "layer river reached the coast");
        int t = above(L.face(r.faces.back()));
        VEERKIT_ASSERT(C.contains(t) && !used.count(t) && dev.bottom_edge(t) == r.mouth,
                       "sink tet is not the next layer step");
        used.insert(t);
        std::array<int, 2> removed{};
        std::array<FaceView, 2> added{};
        int nr = 0, na = 0;
        for (int g = 0; g < 4; ++g) {
            if (dev.is_upper_face(t, g))
                added[na++] = dev.face_view(t, g);
            else
                removed[nr++] = dev.face_id(t, g);
        }
        for (int f : removed) L.remove(f);
        for (auto& fv : added) L.add(fv);
        out.tets_.push_back(t);
        out.removed_.push_back(removed);
        out.added_.push_back(added);
    }
    VEERKIT_ASSERT(L == C.upper(), "layering does not end at the upper landscape");
    return out;
}

std::vector<std::pair<int, int>> parallel_edges(const Continent& C) {
    Development& dev = C.dev();
    std::map<std::pair<int, int>, int> seen;
    std::vector<std::pair<int, int>> bad;
    for (int t : C.tets())
        for (int e = 0; e < 6; ++e) {
            int id = dev.edge(t, e);
            auto c = dev.edge_cusps(t, e);
            if (c[0] == c[1]) {
                bad.push_back({id, id});
                continue;
            }
            auto key = std::minmax(c[0], c[1]);
            auto [it, fresh] = seen.emplace(key, id);
            if (!fresh && it->second != id) bad.push_back({it->second, id});
        }
    return bad;
}

} // namespace veerkit
