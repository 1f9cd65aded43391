#pragma once

#include <optional>
#include <vector>

#include "veerkit/rectangles.hpp"

namespace veerkit {

struct Reconstruction {
    Triangulation tri;
    std::vector<int> pi_pair;      // per tet
    std::vector<Colour> colour;    // per edge class of tri
    std::vector<int> reps;         // lifted tet standing for each tet
    std::vector<int> base_label;   // deck orbit label of each tet
    int interior = 0;              // interior tets of the input set
    long containment_checks = 0;
};

// Rebuilds a triangulation from rectangle signatures of the lifted tets
// `tets`: gluings from face-in-tet containment, pi-angles from spanning,
// colours from the ideal corners of edge rectangles. Lifts with the same
// deck orbit label are identified. Throws InsufficientContinent when the
// interior tets do not close up.
Reconstruction reconstruct(LinkSpace& ls, const std::vector<int>& tets);

struct Isomorphism {
    std::vector<int> tet;          // tet of a -> tet of b
    std::vector<Perm4> vertices;   // vertex labels of a's tet -> b's tet
};
// Simplicial isomorphism from a to b carrying pi-pairs and colours.
std::optional<Isomorphism> find_isomorphism(const Triangulation& a, const std::vector<int>& pi_a,
                                            const std::vector<Colour>& col_a, const Triangulation& b,
                                            const std::vector<int>& pi_b, const std::vector<Colour>& col_b);

} // namespace veerkit
