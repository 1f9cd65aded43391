#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "veerkit/development.hpp"

namespace veerkit {

// A finite triangulated disk of lifted faces, with faces viewed from above.
class Landscape {
public:
    void add(const FaceView& f);
    void remove(int face_id);
    bool contains(int face_id) const { return faces_.count(face_id) > 0; }
    const FaceView& face(int face_id) const { return faces_.at(face_id); }
    int size() const { return int(faces_.size()); }
    const std::map<int, FaceView>& faces() const { return faces_; }

    // Faces of the landscape containing an edge (one or two).
    std::vector<int> faces_at(int edge) const;
    bool has_edge(int edge) const { return at_edge_.count(edge) > 0; }
    bool is_coastal(int edge) const;
    // The other face across an interior edge, or -1.
    int across(int face_id, int edge) const;

    std::vector<int> edges() const;
    std::vector<int> cusps() const;
    // Cusps in anticlockwise order around the boundary, starting at the
    // smallest cusp id. Empty when the boundary is not a single cycle.
    std::vector<int> coast() const;
    int euler_characteristic() const;
    bool is_disk() const;

    friend bool operator==(const Landscape& a, const Landscape& b) {
        if (a.faces_.size() != b.faces_.size()) return false;
        for (auto& [id, f] : a.faces_)
            if (!b.contains(id)) return false;
        return true;
    }

private:
    std::map<int, FaceView> faces_;
    std::unordered_map<int, std::vector<int>> at_edge_;
};

enum class EdgeKind { Sink, FallLeft, FallRight, WatershedLeft, WatershedRight, Coastal };
const char* to_string(EdgeKind k);

// Classification of an edge of the landscape for the given track.
EdgeKind classify_edge(const Landscape& L, int edge, Side s);
std::vector<int> sinks(const Landscape& L, Side s);

} // namespace veerkit
