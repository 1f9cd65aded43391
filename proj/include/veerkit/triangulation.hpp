#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "veerkit/perm.hpp"

namespace veerkit {

struct Gluing {
    int tet = -1;  // -1 for a boundary face
    int face = -1;
    Perm4 perm;    // vertex labels of this tet -> vertex labels of `tet`
    bool glued() const { return tet >= 0; }
};

// Ideal triangulation. Face f of a tetrahedron is opposite vertex f.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int tet_count);

    int tet_count() const { return int(glue_.size()); }
    const Gluing& gluing(int t, int f) const { return glue_[t][f]; }

    // Glues (t,f) to (t2, p[f]) and records the inverse on the other side.
    void join(int t, int f, int t2, const Perm4& p);

    // Throws InvalidGluing when some gluing is not an involution or is
    // the identity self-gluing.
    void validate() const;

    // Derived classes; computed by finalize().
    void finalize();
    int edge_count() const { return edge_count_; }
    int vertex_count() const { return vertex_count_; }
    int edge_class(int t, int e) const { return edge_of_[t][e]; }
    int vertex_class(int t, int v) const { return vertex_of_[t][v]; }
    int edge_degree(int cls) const { return edge_degree_[cls]; }
    int max_edge_degree() const;
    bool closed() const;  // every face glued

    // Orientation sign per tet (+1 for tet 0); nullopt when non-orientable
    // or not connected through gluings.
    const std::optional<std::vector<int>>& orientation() const { return orient_; }

    // The model edges around an edge class, in cyclic order.
    struct Corner { int tet; int edge; };
    std::vector<Corner> edge_cycle(int cls) const;

    // Breadth-first spanning tree of the dual graph from tet 0: the
    // face word leading from tet 0 to each tet.
    const std::vector<std::vector<int>>& tree_words() const { return tree_words_; }

private:
    std::vector<std::array<Gluing, 4>> glue_;
    std::vector<std::array<int, 6>> edge_of_;
    std::vector<std::array<int, 4>> vertex_of_;
    std::vector<int> edge_degree_;
    int edge_count_ = 0;
    int vertex_count_ = 0;
    std::optional<std::vector<int>> orient_;
    std::vector<std::vector<int>> tree_words_;
};

// Faces are viewed with their three remaining vertices. Returns them so
// that they read anticlockwise as seen from outside the tetrahedron.
std::array<int, 3> face_vertices_outside_ccw(int face, int orient_sign);

} // namespace veerkit
