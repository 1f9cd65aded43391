#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "veerkit/order.hpp"

namespace veerkit {

// The cusp of the upper or lower train track in a lifted face. It sits
// at the midpoint of `edge` and points away from `apex`.
struct TrackCusp {
    FaceRef at;  // a tet of the master containing the face
    int face = -1;
    int edge = -1;
    int apex = -1;
    Side which = Side::Upper;

    friend bool operator==(const TrackCusp& a, const TrackCusp& b) {
        return a.face == b.face && a.which == b.which;
    }
};

TrackCusp track_cusp(Development& dev, FaceRef at, Side which);
// The track-cusp of the face that points away from cusp c, if any.
std::optional<TrackCusp> track_cusp_at(Development& dev, FaceRef at, Side which, int c);

// Per-face branches and per-edge switch types of one track on a landscape.
struct TrackStructure {
    Side which = Side::Upper;
    struct Branches {
        int face;
        int pointed;               // edge both branches run into
        std::array<int, 2> feeds;  // the other two edges
    };
    std::vector<Branches> faces;
    std::map<int, EdgeKind> edges;
};
TrackStructure upper_track(const Landscape& L);
TrackStructure lower_track(const Landscape& L);

// Prefix of a branch line of cusp `cusp`: upper lines are followed upward,
// lower lines downward, so that the arcs beyond the pointed edges nest.
struct BranchLinePrefix {
    int cusp = -1;
    Side which = Side::Upper;
    std::vector<TrackCusp> steps;
    std::vector<int> edges;  // pointed edge of each step
    int size() const { return int(steps.size()); }
};

// Cusps on the far side of a step's pointed edge: the coastal arc from
// `from` anticlockwise to `to`, not containing the apex.
struct Arc {
    int from = -1, to = -1;
};
Arc arc_of(Development& dev, const TrackCusp& s);
// Offset of v from b going anticlockwise along the master coast.
int coast_offset(Session& s, int b, int v);
bool open_arcs_disjoint(Session& s, Arc p, Arc q);
bool outside_open_arc(Session& s, int z, Arc p);

// Follows branch lines through the master continent of a session,
// growing it on demand. Successors are cached.
class BranchLines {
public:
    explicit BranchLines(Session& s) : s_(s) {}

    Session& session() { return s_; }
    TrackCusp next(const TrackCusp& tc);
    BranchLinePrefix follow(const TrackCusp& start, int n);
    void extend(BranchLinePrefix& p, int n);

private:
    Session& s_;
    std::unordered_map<long long, TrackCusp> next_;
};

BranchLinePrefix follow_branch_line(Session& s, const TrackCusp& start, int n);

// Checks on a prefix.
bool arcs_nested(Session& s, const BranchLinePrefix& p);
// Smallest window length in which every window contains both colours; -1
// when some window of the whole prefix is monochromatic.
int colour_window(Session& s, const BranchLinePrefix& p);
// First step whose arc excludes cusp x, or -1 within the prefix.
int exclusion_depth(Session& s, const BranchLinePrefix& p, int x);

// For each step, the layers of `lay` containing its face as [first, last].
std::vector<std::pair<int, int>> layer_ranges(const Layering& lay, const BranchLinePrefix& p);

// A point of the circle: a cusp, or the endpoint of a branch line given by
// its nested arc chain.
struct CirclePoint {
    int cusp = -1;
    BranchLinePrefix* line = nullptr;
    bool is_cusp() const { return line == nullptr; }
};

// Deepens the lines until their current arcs are pairwise disjoint and
// exclude the cusps, then returns indices of `pts` in anticlockwise order
// starting at pts[0]. Throws DepthExhausted past max_arc_depth steps.
std::vector<int> certify_order(BranchLines& bl, std::vector<CirclePoint> pts);

struct CrownTip {
    Side which;
    TrackCusp tc;
};
struct CrownSnapshot {
    int cusp = -1;
    std::vector<int> fan;    // face ids around the cusp, anticlockwise
    std::vector<int> edges;  // edges at the cusp, anticlockwise, fan.size()+1 when linear
    bool cyclic = false;
    std::vector<CrownTip> tips;
};
// Faces of `L` around cusp c; tips read from face track-cusps.
CrownSnapshot crown_snapshot(Development& dev, const Landscape& L, int c);
// Tip sides predicted from edge colour changes alone.
std::vector<Side> crown_pattern(Development& dev, const CrownSnapshot& cs);
bool crown_interleaves(Development& dev, const CrownSnapshot& cs);

enum class Turn { Left, Right };
struct TrainRay {
    int layer = -1;              // index in the layering of the master
    TrackCusp tip;               // the line's track-cusp in that layer
    std::vector<int> crossings;  // edges crossed, starting at the tip's switch
    std::vector<int> faces;      // faces between consecutive crossings
    std::vector<Turn> turns;     // one per entry of faces
};
// Image in the layer of the first step of `p` of the switch of step n,
// pulled down through the in-fills between the two layers. Each in-fill
// collapses the added tet's far faces onto its near faces. Extends the
// prefix and grows the master as needed.
TrainRay cusp_train_ray(BranchLines& bl, BranchLinePrefix& p, int n);
// Whether the crossing sequence is a route of the track on L.
bool route_valid(const Landscape& L, Side side, const std::vector<int>& crossings);

} // namespace veerkit
