#include "veerkit/landscape.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "veerkit/error.hpp"

namespace veerkit {

const char* to_string(EdgeKind k) {
    switch (k) {
    case EdgeKind::Sink: return "Sink";
    case EdgeKind::FallLeft: return "FallLeft";
    case EdgeKind::FallRight: return "FallRight";
    case EdgeKind::WatershedLeft: return "WatershedLeft";
    case EdgeKind::WatershedRight: return "WatershedRight";
    case EdgeKind::Coastal: return "Coastal";
    }
    return "?";
}

void Landscape::add(const FaceView& f) {
    VEERKIT_ASSERT(!contains(f.id), "face added twice to a landscape");
    faces_[f.id] = f;
    for (int e : f.edge) at_edge_[e].push_back(f.id);
}

void Landscape::remove(int face_id) {
    auto it = faces_.find(face_id);
    VEERKIT_ASSERT(it != faces_.end(), "removing a face not in the landscape");
    for (int e : it->second.edge) {
        auto& v = at_edge_[e];
        v.erase(std::find(v.begin(), v.end(), face_id));
        if (v.empty()) at_edge_.erase(e);
    }
    faces_.erase(it);
}

std::vector<int> Landscape::faces_at(int edge) const {
    auto it = at_edge_.find(edge);
    if (it == at_edge_.end()) return {};
    return it->second;
}

bool Landscape::is_coastal(int edge) const {
    auto it = at_edge_.find(edge);
    return it != at_edge_.end() && it->second.size() == 1;
}

int Landscape::across(int face_id, int edge) const {
    auto it = at_edge_.find(edge);
    if (it == at_edge_.end()) return -1;
    for (int f : it->second)
        if (f != face_id) return f;
    return -1;
}

std::vector<int> Landscape::edges() const {
    std::vector<int> out;
    for (auto& [e, v] : at_edge_) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Landscape::cusps() const {
    std::set<int> s;
    for (auto& [id, f] : faces_) s.insert(f.cusp.begin(), f.cusp.end());
    return {s.begin(), s.end()};
}

std::vector<int> Landscape::coast() const {
    std::unordered_map<int, int> next;
    for (auto& [id, f] : faces_)
        for (int k = 0; k < 3; ++k)
            if (is_coastal(f.edge[k])) {
                int from = f.cusp[(k + 1) % 3], to = f.cusp[(k + 2) % 3];
                if (next.count(from)) return {};
                next[from] = to;
            }
    if (next.empty()) return {};
    int start = next.begin()->first;
    for (auto& [a, b] : next) start = std::min(start, a);
    std::vector<int> cyc{start};
    for (int c = next.at(start); c != start; c = next.at(c)) {
        if (!next.count(c) || cyc.size() > next.size()) return {};
        cyc.push_back(c);
    }
    if (cyc.size() != next.size()) return {};
    return cyc;
}

int Landscape::euler_characteristic() const {
    return int(cusps().size()) - int(at_edge_.size()) + int(faces_.size());
}

bool Landscape::is_disk() const {
    if (faces_.empty()) return false;
    for (auto& [e, v] : at_edge_)
        if (v.size() > 2) return false;
    auto c = coast();
    return euler_characteristic() == 1 && !c.empty() && c.size() == cusps().size();
}

EdgeKind classify_edge(const Landscape& L, int edge, Side s) {
    auto fs = L.faces_at(edge);
    VEERKIT_ASSERT(!fs.empty(), "edge not in landscape");
    if (fs.size() == 1) return EdgeKind::Coastal;
    const FaceView& F = L.face(std::min(fs[0], fs[1]));
    const FaceView& G = L.face(std::max(fs[0], fs[1]));
    bool fp = F.edge[F.pointed(s)] == edge, gp = G.edge[G.pointed(s)] == edge;
    if (fp && gp) return EdgeKind::Sink;
    // The face the flow enters (fall) or the lower-id face (watershed).
    const FaceView& H = (fp || !gp) ? (fp ? G : F) : F;
    int k = H.index_of_edge(edge);
    bool left = H.pointed(s) == (k + 2) % 3;
    if (fp || gp) return left ? EdgeKind::FallLeft : EdgeKind::FallRight;
    return left ? EdgeKind::WatershedLeft : EdgeKind::WatershedRight;
}

std::vector<int> sinks(const Landscape& L, Side s) {
    std::vector<std::pair<int, int>> keyed;
    for (int e : L.edges()) {
        auto fs = L.faces_at(e);
        if (fs.size() != 2) continue;
        const FaceView& F = L.face(fs[0]);
        const FaceView& G = L.face(fs[1]);
        if (F.edge[F.pointed(s)] == e && G.edge[G.pointed(s)] == e)
            keyed.push_back({std::min(fs[0], fs[1]), e});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto& [f, e] : keyed) out.push_back(e);
    return out;
}

} // namespace veerkit
