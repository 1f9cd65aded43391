#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "veerkit/taut.hpp"

namespace veerkit {

// A veering triangulation together with its derived structure.
struct VeeringTriangulation {
    Triangulation tri;
    TransverseTautStructure taut;  // with co-orientation and colours

    static std::shared_ptr<const VeeringTriangulation> from_signature(const std::string& sig);
    static std::shared_ptr<const VeeringTriangulation> from_parts(Triangulation tri, TransverseTautStructure s);
};

enum class Side { Upper, Lower };
inline Side opposite(Side s) { return s == Side::Upper ? Side::Lower : Side::Upper; }
const char* to_string(Side s);

struct FaceRef {
    int tet = -1;
    int face = -1;
    bool valid() const { return tet >= 0; }
    friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

// A lifted face as seen from above: cusps anticlockwise, edge[i] opposite
// cusp[i], and the indices of the edges the two track-cusps point at.
struct FaceView {
    int id = -1;
    FaceRef ref;            // a tet containing the face
    bool ref_below = true;  // whether ref's tet lies below the face
    std::array<int, 3> cusp{};
    std::array<int, 3> edge{};
    std::array<int, 3> local{};  // vertex labels of ref's tet, matching cusp[]
    int up = -1;   // index i: the upper track-cusp points at edge[i], away from cusp[i]
    int low = -1;  // same for the lower track

    int pointed(Side s) const { return s == Side::Upper ? up : low; }
    int index_of_edge(int e) const {
        for (int i = 0; i < 3; ++i)
            if (edge[i] == e) return i;
        return -1;
    }
    int index_of_cusp(int c) const {
        for (int i = 0; i < 3; ++i)
            if (cusp[i] == c) return i;
        return -1;
    }
};

// Lazily developed part of the universal cover. Lifted tets are created
// on demand across faces; cusps and edges are union-find classes of the
// lifted model vertices and edges.
class Development {
public:
    explicit Development(std::shared_ptr<const VeeringTriangulation> vt);

    const VeeringTriangulation& vt() const { return *vt_; }
    std::shared_ptr<const VeeringTriangulation> vt_ptr() const { return vt_; }
    const Triangulation& tri() const { return vt_->tri; }
    const TransverseTautStructure& taut() const { return vt_->taut; }

    int create(int base_tet);  // isolated lifted tet
    int size() const { return int(tets_.size()); }
    int base(int t) const { return tets_[t].base; }
    int neighbour(int t, int f) const { return tets_[t].nbr[f]; }
    // The face on the other side, or an invalid ref when unresolved.
    FaceRef across(const FaceRef& r) const;
    // Develops the neighbour across (t, f) if necessary.
    int resolve(int t, int f);

    int cusp(int t, int v) { return find(cusp_parent_, 4 * t + v); }
    int edge(int t, int e) { return find(edge_parent_, 6 * t + e); }
    int face_id(int t, int f) const { return tets_[t].face_id[f]; }
    // Some tet containing the face with this id.
    FaceRef face_ref(int id) const { return face_ref_[id]; }
    FaceView face_view(int id) { return face_view(face_ref_[id].tet, face_ref_[id].face); }
    int edge_base(int edge_node) const { return edge_base_[edge_node]; }
    Colour edge_colour(int edge_node) const { return taut().colour[edge_base_[edge_node]]; }
    int edge_degree(int edge_node) const { return tri().edge_degree(edge_base_[edge_node]); }
    std::array<int, 2> edge_cusps(int t, int e) {
        return {cusp(t, kEdgeVerts[e][0]), cusp(t, kEdgeVerts[e][1])};
    }

    bool is_upper_face(int t, int f) const { return taut().is_upper_face(base(t), f); }
    int top_edge_local(int t) const { return taut().top_edge[base(t)]; }
    int bottom_edge_local(int t) const { return taut().bottom_edge(base(t)); }
    int top_edge(int t) { return edge(t, top_edge_local(t)); }
    int bottom_edge(int t) { return edge(t, bottom_edge_local(t)); }
    std::array<int, 4> cusps_of(int t) {
        return {cusp(t, 0), cusp(t, 1), cusp(t, 2), cusp(t, 3)};
    }

    FaceView face_view(int t, int f);

    // Tets around the edge (t, e) reachable through resolved links, in
    // cyclic order, and whether the cycle closed. A closed chain starts at
    // t; an open one runs from one unresolved end to the other.
    struct Around {
        std::vector<FaceRef> chain;  // tet and local edge index (stored in .face)
        bool closed = false;
    };
    Around around_edge(int t, int e);

    // Diagnostics.
    int links() const { return links_; }

private:
    struct LTet {
        int base;
        std::array<int, 4> nbr{-1, -1, -1, -1};
        std::array<int, 4> face_id{};
    };
    static int find(std::vector<int>& p, int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    static void unite(std::vector<int>& p, int a, int b) {
        a = find(p, a);
        b = find(p, b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        p[a] = b;  // the older class keeps its id
    }
    void link(int t, int f, int t2);
    void close_around(int t, int f);
    struct WalkEnd { int tet, a, b, exit; int steps; };
    WalkEnd walk(int t, int a, int b, int exit, int max_steps) const;

    std::shared_ptr<const VeeringTriangulation> vt_;
    std::vector<LTet> tets_;
    std::vector<int> cusp_parent_, edge_parent_, edge_base_;
    std::vector<FaceRef> face_ref_;
    int next_face_id_ = 0;
    int links_ = 0;
};

} // namespace veerkit
