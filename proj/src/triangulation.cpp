#include "veerkit/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "veerkit/error.hpp"

namespace veerkit {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::MalformedSignature: return "MalformedSignature";
    case ErrorKind::AngleLengthMismatch: return "AngleLengthMismatch";
    case ErrorKind::InvalidGluing: return "InvalidGluing";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NotVeering: return "NotVeering";
    case ErrorKind::UnconstrainedEdge: return "UnconstrainedEdge";
    case ErrorKind::BadTetIndex: return "BadTetIndex";
    case ErrorKind::NotAMouth: return "NotAMouth";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::FaceNotOnBoundary: return "FaceNotOnBoundary";
    case ErrorKind::ForkedRiverHasNoComplexity: return "ForkedRiverHasNoComplexity";
    case ErrorKind::EdgeNotInContinent: return "EdgeNotInContinent";
    case ErrorKind::DepthExhausted: return "DepthExhausted";
    case ErrorKind::InsufficientContinent: return "InsufficientContinent";
    case ErrorKind::BadCuspName: return "BadCuspName";
    case ErrorKind::Internal: return "Internal";
    }
    return "?";
}

int Perm4::ordered_index() const {
    int idx = 0;
    std::array<bool, 4> used{};
    static constexpr int fact[4] = {6, 2, 1, 1};
    for (int i = 0; i < 4; ++i) {
        int smaller = 0;
        for (int v = 0; v < img[i]; ++v)
            if (!used[v]) ++smaller;
        idx += smaller * fact[i];
        used[img[i]] = true;
    }
    return idx;
}

Perm4 Perm4::from_ordered_index(int i) {
    static constexpr int fact[4] = {6, 2, 1, 1};
    std::vector<int> pool{0, 1, 2, 3};
    Perm4 p;
    for (int k = 0; k < 4; ++k) {
        int q = i / fact[k];
        i %= fact[k];
        p.img[k] = uint8_t(pool[q]);
        pool.erase(pool.begin() + q);
    }
    return p;
}

std::string Perm4::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) s += char('0' + img[i]);
    return s;
}

Triangulation::Triangulation(int tet_count) : glue_(tet_count) {}

void Triangulation::join(int t, int f, int t2, const Perm4& p) {
    glue_[t][f] = Gluing{t2, p[f], p};
    glue_[t2][p[f]] = Gluing{t, f, p.inverse()};
}

void Triangulation::validate() const {
    for (int t = 0; t < tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[t][f];
            if (!g.glued()) continue;
            if (g.tet >= tet_count() || g.face != g.perm[f])
                throw Error(ErrorKind::InvalidGluing, "bad destination at tet " + std::to_string(t));
            const Gluing& back = glue_[g.tet][g.face];
            if (back.tet != t || back.face != f || !(back.perm == g.perm.inverse()))
                throw Error(ErrorKind::InvalidGluing,
                            "gluing of tet " + std::to_string(t) + " face " + std::to_string(f) +
                                " is not an involution");
            if (g.tet == t && g.face == f)
                throw Error(ErrorKind::InvalidGluing, "face glued to itself");
        }
}

bool Triangulation::closed() const {
    for (auto& row : glue_)
        for (auto& g : row)
            if (!g.glued()) return false;
    return true;
}

int Triangulation::max_edge_degree() const {
    int m = 0;
    for (int d : edge_degree_) m = std::max(m, d);
    return m;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

void Triangulation::finalize() {
    const int n = tet_count();
    Dsu ed(6 * n), vd(4 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[t][f];
            if (!g.glued()) continue;
            for (int v = 0; v < 4; ++v)
                if (v != f) vd.unite(4 * t + v, 4 * g.tet + g.perm[v]);
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                if (a == f || b == f) continue;
                ed.unite(6 * t + e, 6 * g.tet + edge_index(g.perm[a], g.perm[b]));
            }
        }
    edge_of_.assign(n, {});
    vertex_of_.assign(n, {});
    std::vector<int> label(6 * n, -1);
    edge_count_ = 0;
    edge_degree_.clear();
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            int r = ed.find(6 * t + e);
            if (label[r] < 0) {
                label[r] = edge_count_++;
                edge_degree_.push_back(0);
            }
            edge_of_[t][e] = label[r];
            ++edge_degree_[label[r]];
        }
    std::fill(label.begin(), label.end(), -1);
    vertex_count_ = 0;
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) {
            int r = vd.find(4 * t + v);
            if (label[r] < 0) label[r] = vertex_count_++;
            vertex_of_[t][v] = label[r];
        }

    // Orientation and spanning tree, both by BFS over the dual graph.
    tree_words_.assign(n, {});
    std::vector<int> sigma(n, 0);
    bool orientable = n > 0;
    if (n > 0) {
        sigma[0] = 1;
        std::deque<int> q{0};
        while (!q.empty()) {
            int t = q.front();
            q.pop_front();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = glue_[t][f];
                if (!g.glued()) continue;
                int want = -g.perm.sign() * sigma[t];
                if (sigma[g.tet] == 0) {
                    sigma[g.tet] = want;
                    tree_words_[g.tet] = tree_words_[t];
                    tree_words_[g.tet].push_back(f);
                    q.push_back(g.tet);
                } else if (sigma[g.tet] != want) {
                    orientable = false;
                }
            }
        }
        for (int s : sigma)
            if (s == 0) orientable = false;
    }
    if (orientable)
        orient_ = sigma;
    else
        orient_.reset();
}

std::vector<Triangulation::Corner> Triangulation::edge_cycle(int cls) const {
    std::vector<Corner> out;
    int t0 = -1, e0 = -1;
    for (int t = 0; t < tet_count() && t0 < 0; ++t)
        for (int e = 0; e < 6; ++e)
            if (edge_of_[t][e] == cls) {
                t0 = t;
                e0 = e;
                break;
            }
    if (t0 < 0) return out;
    // Walk: in the current tet with edge {a,b} and complementary {c,d},
    // leave through face d (which contains a,b,c) and enter the next tet.
    int t = t0, a = kEdgeVerts[e0][0], b = kEdgeVerts[e0][1];
    int c = -1, d = -1;
    for (int v = 0; v < 4; ++v)
        if (v != a && v != b) (c < 0 ? c : d) = v;
    const int cap = 6 * tet_count() + 6;
    for (int step = 0; step < cap; ++step) {
        out.push_back({t, edge_index(a, b)});
        const Gluing& g = glue_[t][d];
        if (!g.glued()) break;
        int na = g.perm[a], nb = g.perm[b], nc = g.perm[c];
        int nd = 6 - na - nb - nc;
        t = g.tet;
        a = na;
        b = nb;
        // Entered through the face opposite nd; leave through the other
        // face containing the edge.
        d = nc;
        c = nd;
        if (t == t0 && edge_index(a, b) == e0) break;
    }
    return out;
}

std::array<int, 3> face_vertices_outside_ccw(int face, int orient_sign) {
    std::array<int, 3> r{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != face) r[k++] = v;
    Perm4 p(r[0], r[1], r[2], face);
    // (a,b,c) increasing is anticlockwise from outside iff sign * sigma < 0.
    if (p.sign() * orient_sign > 0) std::swap(r[1], r[2]);
    return r;
}

} // namespace veerkit
