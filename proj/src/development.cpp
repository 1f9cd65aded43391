#include "veerkit/development.hpp"

#include "veerkit/error.hpp"
#include "veerkit/isosig.hpp"

namespace veerkit {

const char* to_string(Side s) { return s == Side::Upper ? "upper" : "lower"; }

std::shared_ptr<const VeeringTriangulation> VeeringTriangulation::from_signature(const std::string& sig) {
    auto ts = parse_taut_isosig(sig);
    auto report = check_taut(ts.tri, ts.pi_pair);
    if (!report.pass) throw Error(ErrorKind::NotVeering, "not taut: " + report.violations.front());
    auto s = derive_coorientations(ts.tri, ts.pi_pair);
    s = derive_veering_colours(ts.tri, s);
    return from_parts(std::move(ts.tri), std::move(s));
}

std::shared_ptr<const VeeringTriangulation> VeeringTriangulation::from_parts(Triangulation tri,
                                                                             TransverseTautStructure s) {
    auto vt = std::make_shared<VeeringTriangulation>();
    vt->tri = std::move(tri);
    vt->taut = std::move(s);
    return vt;
}

Development::Development(std::shared_ptr<const VeeringTriangulation> vt) : vt_(std::move(vt)) {
    VEERKIT_ASSERT(vt_->taut.has_colour() && vt_->tri.orientation(), "development needs a veering structure");
}

int Development::create(int base_tet) {
    if (base_tet < 0 || base_tet >= tri().tet_count())
        throw Error(ErrorKind::BadTetIndex, "no base tetrahedron " + std::to_string(base_tet));
    int id = size();
    LTet t{base_tet, {-1, -1, -1, -1}, {}};
    for (int f = 0; f < 4; ++f) {
        t.face_id[f] = next_face_id_++;
        face_ref_.push_back({id, f});
    }
    tets_.push_back(t);
    for (int v = 0; v < 4; ++v) cusp_parent_.push_back(4 * id + v);
    for (int e = 0; e < 6; ++e) {
        edge_parent_.push_back(6 * id + e);
        edge_base_.push_back(tri().edge_class(base_tet, e));
    }
    return id;
}

FaceRef Development::across(const FaceRef& r) const {
    int n = tets_[r.tet].nbr[r.face];
    if (n < 0) return {};
    return {n, tri().gluing(base(r.tet), r.face).face};
}

Development::WalkEnd Development::walk(int t, int a, int b, int exit, int max_steps) const {
    int steps = 0;
    while (steps < max_steps) {
        int n = tets_[t].nbr[exit];
        if (n < 0) break;
        const Perm4& p = tri().gluing(base(t), exit).perm;
        int na = p[a], nb = p[b], entry = p[exit];
        int next_exit = 6 - na - nb - entry;
        t = n;
        a = na;
        b = nb;
        exit = next_exit;
        ++steps;
    }
    return {t, a, b, exit, steps};
}

void Development::close_around(int t, int f) {
    for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        // Edge of face f opposite v within the face.
        int a = -1, b = -1;
        for (int w = 0; w < 4; ++w)
            if (w != f && w != v) (a < 0 ? a : b) = w;
        const int d = tri().edge_degree(tri().edge_class(base(t), edge_index(a, b)));
        // Faces of t containing ab are opposite f and opposite v.
        WalkEnd e1 = walk(t, a, b, v, d);
        if (e1.steps == d) continue;  // closed cycle
        WalkEnd e2 = walk(t, a, b, f, d);
        int count = 1 + e1.steps + e2.steps;
        VEERKIT_ASSERT(count <= d, "edge cycle longer than its degree: development is inconsistent");
        if (count < d) continue;
        const Gluing& g = tri().gluing(base(e1.tet), e1.exit);
        VEERKIT_ASSERT(g.tet == base(e2.tet) && g.face == e2.exit && g.perm[e1.a] == e2.a &&
                           g.perm[e1.b] == e2.b,
                       "closing gluing disagrees with the base triangulation");
        link(e1.tet, e1.exit, e2.tet);
    }
}

void Development::link(int t, int f, int t2) {
    const Gluing& g = tri().gluing(base(t), f);
    VEERKIT_ASSERT(g.tet == base(t2), "link base mismatch");
    VEERKIT_ASSERT(tets_[t].nbr[f] < 0 && tets_[t2].nbr[g.face] < 0, "link onto a resolved face");
    tets_[t].nbr[f] = t2;
    tets_[t2].nbr[g.face] = t;
    int id = std::min(tets_[t].face_id[f], tets_[t2].face_id[g.face]);
    tets_[t].face_id[f] = tets_[t2].face_id[g.face] = id;
    for (int v = 0; v < 4; ++v)
        if (v != f) unite(cusp_parent_, 4 * t + v, 4 * t2 + g.perm[v]);
    for (int e = 0; e < 6; ++e) {
        int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
        if (a == f || b == f) continue;
        unite(edge_parent_, 6 * t + e, 6 * t2 + edge_index(g.perm[a], g.perm[b]));
    }
    ++links_;
    close_around(t, f);
}

int Development::resolve(int t, int f) {
    if (tets_[t].nbr[f] >= 0) return tets_[t].nbr[f];
    const Gluing& g = tri().gluing(base(t), f);
    VEERKIT_ASSERT(g.glued(), "boundary face in a veering triangulation");
    // The neighbour may already exist: try to close each edge cycle of the face.
    for (int v = 0; v < 4 && tets_[t].nbr[f] < 0; ++v) {
        if (v == f) continue;
        int a = -1, b = -1;
        for (int w = 0; w < 4; ++w)
            if (w != f && w != v) (a < 0 ? a : b) = w;
        const int d = tri().edge_degree(tri().edge_class(base(t), edge_index(a, b)));
        WalkEnd e1 = walk(t, a, b, v, d);
        if (e1.steps == d - 1) {
            VEERKIT_ASSERT(base(e1.tet) == g.tet && e1.exit == g.face, "closing gluing disagrees");
            link(t, f, e1.tet);
        }
    }
    if (tets_[t].nbr[f] >= 0) return tets_[t].nbr[f];
    int n = create(g.tet);
    link(t, f, n);
    return n;
}

FaceView Development::face_view(int t, int f) {
    FaceView fv;
    fv.id = face_id(t, f);
    fv.ref = {t, f};
    fv.ref_below = is_upper_face(t, f);
    auto v = face_vertices_outside_ccw(f, (*tri().orientation())[base(t)]);
    if (!fv.ref_below) std::swap(v[1], v[2]);
    fv.local = v;
    for (int i = 0; i < 3; ++i) {
        fv.cusp[i] = cusp(t, v[i]);
        fv.edge[i] = edge(t, edge_index(v[(i + 1) % 3], v[(i + 2) % 3]));
    }
    for (int i = 0; i < 3; ++i) {
        Colour prev = edge_colour(fv.edge[(i + 1) % 3]);
        Colour next = edge_colour(fv.edge[(i + 2) % 3]);
        if (prev == Colour::Blue && next == Colour::Red) fv.up = i;
        if (prev == Colour::Red && next == Colour::Blue) fv.low = i;
    }
    VEERKIT_ASSERT(fv.up >= 0 && fv.low >= 0, "monochromatic face");
    return fv;
}

Development::Around Development::around_edge(int t, int e) {
    Around out;
    const int a0 = kEdgeVerts[e][0], b0 = kEdgeVerts[e][1];
    int c = -1, d = -1;
    for (int w = 0; w < 4; ++w)
        if (w != a0 && w != b0) (c < 0 ? c : d) = w;
    const int deg = tri().edge_degree(tri().edge_class(base(t), e));
    out.chain.push_back({t, e});
    int cur = t, a = a0, b = b0, exit = c;
    for (int i = 0; i < deg; ++i) {
        WalkEnd w = walk(cur, a, b, exit, 1);
        if (w.steps == 0) break;
        if (w.tet == t && edge_index(w.a, w.b) == e && w.exit == c) {
            out.closed = true;
            return out;
        }
        out.chain.push_back({w.tet, edge_index(w.a, w.b)});
        cur = w.tet;
        a = w.a;
        b = w.b;
        exit = w.exit;
    }
    // Open: pick up the tets on the other side of t, listed before it.
    std::vector<FaceRef> before;
    cur = t, a = a0, b = b0, exit = d;
    while (int(before.size() + out.chain.size()) < deg) {
        WalkEnd w = walk(cur, a, b, exit, 1);
        if (w.steps == 0) break;
        before.push_back({w.tet, edge_index(w.a, w.b)});
        cur = w.tet;
        a = w.a;
        b = w.b;
        exit = w.exit;
    }
    out.chain.insert(out.chain.begin(), before.rbegin(), before.rend());
    return out;
}

} // namespace veerkit
