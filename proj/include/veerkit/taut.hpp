#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "veerkit/triangulation.hpp"

namespace veerkit {

enum class Colour { Red, Blue };
inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }
const char* to_string(Colour c);

enum class TetKind { ToggleRedTop, ToggleBlueTop, FanRed, FanBlue };
const char* to_string(TetKind k);
inline bool is_toggle(TetKind k) { return k == TetKind::ToggleRedTop || k == TetKind::ToggleBlueTop; }

struct TransverseTautStructure {
    std::vector<int> pi_pair;            // per tet: 0 {01,23}, 1 {02,13}, 2 {03,12}
    std::vector<int> top_edge;           // per tet: local index of the top pi-edge; empty until derived
    std::vector<Colour> colour;          // per edge class; empty until derived

    bool has_coorientation() const { return !top_edge.empty(); }
    bool has_colour() const { return !colour.empty(); }

    int bottom_edge(int t) const { return kOppositeEdge[top_edge[t]]; }
    // Upper faces of t contain the top pi-edge.
    bool is_upper_face(int t, int f) const {
        int e = top_edge[t];
        return kEdgeVerts[e][0] != f && kEdgeVerts[e][1] != f;
    }
    bool is_pi(int t, int e) const { return pi_pair_of_edge(e) == pi_pair[t]; }
};

struct TautReport {
    bool pass = true;
    std::vector<int> pi_count;        // per edge class
    std::vector<int> vertex_corner;   // per (tet,vertex) flattened: pi angles at that corner, always 1
    std::vector<std::string> violations;
};

TautReport check_taut(const Triangulation& tri, const std::vector<int>& pi_pair);

// Throws NotTransverse.
TransverseTautStructure derive_coorientations(const Triangulation& tri, const std::vector<int>& pi_pair);
// Local constraint check for a given polarity assignment.
bool coorientation_consistent(const Triangulation& tri, const TransverseTautStructure& s);
TransverseTautStructure reversed(const TransverseTautStructure& s);

// Fills colour; throws NotVeering or UnconstrainedEdge.
TransverseTautStructure derive_veering_colours(const Triangulation& tri, TransverseTautStructure s);

// The colours the veering rule forces on (tet, face): the two
// non-pi edges of the face, listed anticlockwise from the pi-edge as seen
// from outside, get (Red, Blue).
struct FaceRule { int pi_edge; int red_edge; int blue_edge; };
FaceRule face_rule(const Triangulation& tri, const TransverseTautStructure& s, int t, int f);

std::vector<TetKind> classify_tetrahedra(const Triangulation& tri, const TransverseTautStructure& s);

struct EdgeReport {
    int edge = -1;
    Colour colour = Colour::Red;
    int degree = 0;
    bool one_above = false, one_below = false;
    std::array<int, 2> side_sizes{0, 0};
    bool side_pattern = false;
    int majority_faces = 0;  // incident face slots whose majority is the edge's colour
    bool pass = false;
    std::string detail;
};
std::vector<EdgeReport> edge_neighbourhood_report(const Triangulation& tri, const TransverseTautStructure& s);

} // namespace veerkit
