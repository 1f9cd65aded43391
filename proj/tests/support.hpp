// Shared generators and fixtures for the unit tests and the acceptance run.
#pragma once

#include <deque>
#include <random>
#include <set>

#include "veerkit/error.hpp"
#include "veerkit/order.hpp"

namespace vktest {

using namespace veerkit;

inline constexpr const char* kFigureEight = "cPcbbbiht_12";

inline std::shared_ptr<const VeeringTriangulation> figure_eight() {
    static auto vt = VeeringTriangulation::from_signature(kFigureEight);
    return vt;
}

// Face word of length n with no immediate backtrack through the same face.
inline std::vector<int> random_path(std::mt19937_64& rng, const Triangulation& tri, int start, int n) {
    std::vector<int> w;
    int t = start, back = -1;
    while (int(w.size()) < n) {
        int f = int(rng() % 4);
        if (f == back) continue;
        const Gluing& g = tri.gluing(t, f);
        w.push_back(f);
        back = g.face;
        t = g.tet;
    }
    return w;
}

inline int end_of(const Triangulation& tri, int start, const std::vector<int>& w) {
    for (int f : w) start = tri.gluing(start, f).tet;
    return start;
}

// Shortest face word from base tet a to base tet b.
inline std::vector<int> route(const Triangulation& tri, int a, int b) {
    std::vector<std::pair<int, int>> from(tri.tet_count(), {-1, -1});
    std::deque<int> q{a};
    from[a] = {a, -1};
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int f = 0; f < 4; ++f) {
            int u = tri.gluing(t, f).tet;
            if (u < 0 || from[u].first >= 0) continue;
            from[u] = {t, f};
            q.push_back(u);
        }
    }
    std::vector<int> w;
    for (int t = b; t != a; t = from[t].first) w.insert(w.begin(), from[t].second);
    return w;
}

inline DeckLoop random_loop(std::mt19937_64& rng, const Triangulation& tri, int n) {
    auto w = random_path(rng, tri, 0, n);
    auto back = route(tri, end_of(tri, 0, w), 0);
    w.insert(w.end(), back.begin(), back.end());
    return {w};
}

inline CuspName random_cusp(std::mt19937_64& rng, const Triangulation& tri, int max_len) {
    CuspName n;
    n.tet = int(rng() % tri.tet_count());
    n.vertex = int(rng() % 4);
    int len = int(rng() % (max_len + 1));
    n.faces = random_path(rng, tri, n.tet, len);
    return n;
}

// Distinct lifted cusps get distinct ids; names may still collide.
inline std::array<CuspName, 3> random_triple(std::mt19937_64& rng, const Triangulation& tri, int max_len) {
    return {random_cusp(rng, tri, max_len), random_cusp(rng, tri, max_len), random_cusp(rng, tri, max_len)};
}

} // namespace vktest
