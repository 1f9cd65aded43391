#pragma once

#include <compare>
#include <memory>
#include <vector>

#include "veerkit/landscape.hpp"

namespace veerkit {

// A finite union of lifted tets bounded by an upper and a lower landscape
// meeting along the coast. All continents sharing a Development must be
// nested (each grown from the previous one).
class Continent {
public:
    Continent(std::shared_ptr<Development> dev, int tet);
    static Continent initial(std::shared_ptr<const VeeringTriangulation> vt, int base_tet);

    Development& dev() const { return *dev_; }
    std::shared_ptr<Development> dev_ptr() const { return dev_; }

    bool contains(int tet) const { return tet >= 0 && tet < int(in_.size()) && in_[tet]; }
    const std::vector<int>& tets() const { return tets_; }
    int size() const { return int(tets_.size()); }
    const Landscape& boundary(Side s) const { return s == Side::Upper ? upper_ : lower_; }
    const Landscape& upper() const { return upper_; }
    const Landscape& lower() const { return lower_; }

    // Adds a tet adjacent to the continent, updating both landscapes.
    void add(int tet);

    std::vector<int> coast() const;  // asserts upper and lower agree
    std::vector<int> cusps() const { return upper_.cusps(); }
    bool is_convex() const;
    // Tet of the continent on the inner side of a boundary face.
    FaceRef inner(int face_id, Side s) const;
    // Tet on the outer side, developed on demand.
    int outer_resolve(int face_id, Side s);

    long version() const { return version_; }

private:
    std::shared_ptr<Development> dev_;
    std::vector<int> tets_;
    std::vector<char> in_;
    Landscape upper_, lower_;
    long version_ = 0;
};

struct River {
    Side side = Side::Upper;
    std::vector<int> faces;  // source first
    std::vector<int> falls;  // edges between consecutive faces
    int mouth = -1;          // edge the last face flows into
    bool coastal = false;    // mouth on the coast, otherwise a sink
    std::vector<int> heights;  // per fall, when computed on a continent
    int length() const { return int(faces.size()); }
};

River maximal_river(const Landscape& L, int face_id, Side s);
// Also records heights: degree minus the number of continent tets at each fall.
River maximal_river(const Continent& C, int face_id, Side s);

struct Complexity {
    std::vector<int> v;  // (length, h_1, ..., h_{l-1})
    friend auto operator<=>(const Complexity& a, const Complexity& b) { return a.v <=> b.v; }
    friend bool operator==(const Complexity&, const Complexity&) = default;
};
Complexity river_complexity(const River& r);

struct LandfillResult {
    int tet = -1;
    bool coastal = false;
};
// Attaches the tet whose lower (upper) pi-edge is the mouth on the upper
// (lower) boundary. Throws NotAMouth.
LandfillResult landfill(Continent& C, int mouth_edge, Side s);

struct ConvexifyStats {
    int infills_upper = 0, infills_lower = 0;
    int faces_upper_start = 0, faces_lower_start = 0;
};
ConvexifyStats convexify(Continent& C);

struct ChannelResult {
    River river;
    int coastal_tet = -1;
    ConvexifyStats convexify;
};
ChannelResult channelise(Continent& C, int face_id, Side s);

// Grows C along a face-crossing path from a tet of C; returns the final
// tet. Each crossing may take at most max_rounds channelisations.
int grow_to_include(Continent& C, int start_tet, const std::vector<int>& path, int max_rounds = -1);

// Default cap, honouring VEERKIT_MAX_DEPTH.
int default_max_rounds();

class Layering {
public:
    int size() const { return int(tets_.size()) + 1; }  // number of layers
    const std::vector<int>& tets() const { return tets_; }
    Landscape layer(int k) const;
    std::vector<Landscape> all() const;
    const Landscape& bottom() const { return bottom_; }
    // Faces added at step k (upper faces of tets()[k-1]).
    friend Layering extract_layering(const Continent& C);

private:
    Landscape bottom_;
    std::vector<int> tets_;
    std::vector<std::array<FaceView, 2>> added_;
    std::vector<std::array<int, 2>> removed_;
};
Layering extract_layering(const Continent& C);

// Lifted edges of C joining the same cusp pair; empty when none.
std::vector<std::pair<int, int>> parallel_edges(const Continent& C);

} // namespace veerkit
