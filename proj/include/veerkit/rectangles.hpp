#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "veerkit/tracks.hpp"

namespace veerkit {

// A point of the circle: a lifted cusp or the endpoint of a branch line.
struct LeafPoint {
    int cusp = -1;
    int line = -1;  // line id in a LinkSpace
    bool is_cusp() const { return line < 0; }
};

// A leaf of the upper or lower foliation, modelled by the chord joining
// the endpoints of the two prongs at `pivot` next to a rectangle side.
struct Chord {
    LeafPoint a, b;
    int pivot = -1;
};

enum class RectKind { Edge, Face, Tet };
const char* to_string(RectKind k);
enum class Corner { SW, SE, NW, NE };
const char* to_string(Corner c);
enum class Axis { SN, WE };

struct RectangleSignature {
    RectKind kind = RectKind::Edge;
    int tet = -1;    // a lifted tet of the master containing the cell
    int local = -1;  // local edge or face index; -1 for tets
    std::vector<int> cusps;   // cusps of the cell
    std::vector<int> ideal;   // edge: the two corners; face: the corner; tet: one per side
    std::array<Chord, 2> upper, lower;  // bounding leaves, in no particular order

    // Edge rectangles only.
    int c = -1, d = -1;
    Colour colour = Colour::Red;
    // S, T, U, V, S', T', U', V' as line ids.
    std::array<int, 8> leaves{};
    std::vector<LeafPoint> cyclic;  // certified anticlockwise order from c
    bool order_certified = false;   // matches the expected ten-point order
    Corner corner_c = Corner::SW;   // position of the ideal corner c
    bool slope_matches = false;     // corner agrees with the edge colour
};

// Rectangle models on top of one session. Lines are deduplicated, and two
// line ids are merged once their prefixes share a track-cusp.
class LinkSpace {
public:
    explicit LinkSpace(Session& s) : s_(s), bl_(s) {}

    Session& session() { return s_; }
    BranchLines& lines() { return bl_; }

    int line_of(const TrackCusp& tip);
    const BranchLinePrefix& line(int id) const { return lines_[id]; }
    int line_count() const { return int(lines_.size()); }
    int find(int id);
    bool same(LeafPoint a, LeafPoint b);

    // Certified anticlockwise order. Equal points are grouped; groups are
    // listed starting at the one holding pts[0].
    std::vector<std::vector<int>> order(const std::vector<LeafPoint>& pts);

    const RectangleSignature& edge_rectangle(int t, int e);
    const RectangleSignature& face_rectangle(int t, int f);
    // Hull of the upper faces' rectangles, or of the lower faces'.
    RectangleSignature tet_rectangle(int t, Side from = Side::Upper);

    bool contains(const RectangleSignature& inner, const RectangleSignature& outer);
    bool spans(const RectangleSignature& a, const RectangleSignature& b, Axis axis);
    bool same_rectangle(const RectangleSignature& a, const RectangleSignature& b);

    long deepenings() const { return deepenings_; }

private:
    void deepen(int id, int by);
    void note_steps(int id, int from);
    std::pair<int, int> layer_of_edge(int t, int e);
    struct Tips { std::vector<CrownTip> acw, cw; };
    Tips tips_around(int t, int e, int x);
    // Chord hull of a family, all points certified together.
    std::array<Chord, 2> hull(const std::vector<Chord>& chords);
    bool chord_equal(const Chord& x, const Chord& y);
    // x weakly between a and b; positions from one certified order.
    bool between(const Chord& x, const Chord& a, const Chord& b);
    bool interval_contains(const std::array<Chord, 2>& outer, const std::array<Chord, 2>& inner);

    Session& s_;
    BranchLines bl_;
    std::vector<BranchLinePrefix> lines_;
    std::vector<int> parent_;
    std::map<std::pair<int, int>, int> by_step_;  // (face, side) -> line
    std::map<int, RectangleSignature> edge_cache_, face_cache_;
    long layering_version_ = -1;
    Layering layering_;
    std::map<int, int> tet_pos_;
    long deepenings_ = 0;
};

// Short label of a point: a cusp, or a line by side, cusp and first face.
std::string point_str(const LinkSpace& ls, const LeafPoint& p);

} // namespace veerkit
