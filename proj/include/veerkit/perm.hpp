#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace veerkit {

// Permutation of {0,1,2,3}; img[i] is the image of i.
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    constexpr Perm4() = default;
    constexpr Perm4(int a, int b, int c, int d)
        : img{uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)} {}

    constexpr int operator[](int i) const { return img[i]; }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[img[i]] = uint8_t(i);
        return r;
    }
    // (a * b)[i] = a[b[i]]
    friend constexpr Perm4 operator*(const Perm4& a, const Perm4& b) {
        return Perm4(a[b[0]], a[b[1]], a[b[2]], a[b[3]]);
    }
    friend constexpr bool operator==(const Perm4&, const Perm4&) = default;

    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[i] > img[j]) ++inv;
        return inv % 2 ? -1 : 1;
    }
    bool is_identity() const { return img == std::array<uint8_t, 4>{0, 1, 2, 3}; }

    // Lexicographic rank among the 24 permutations.
    int ordered_index() const;
    static Perm4 from_ordered_index(int i);

    std::string str() const;
};

// Local edge numbering: 0=01 1=02 2=03 3=12 4=13 5=23.
inline constexpr int kEdgeVerts[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
inline constexpr int kEdgeIndex[4][4] = {
    {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
inline constexpr int kOppositeEdge[6] = {5, 4, 3, 2, 1, 0};

inline int edge_index(int a, int b) { return kEdgeIndex[a][b]; }

// pi_pair digit -> the two local edges of the pair.
inline constexpr int kPiPairEdges[3][2] = {{0, 5}, {1, 4}, {2, 3}};
inline int pi_pair_of_edge(int e) { return e < 3 ? e : 5 - e; }

} // namespace veerkit
