#include "veerkit/isosig.hpp"

#include <algorithm>

#include "veerkit/error.hpp"

namespace veerkit {

namespace {

int sval(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '-') return 63;
    return -1;
}

char schar(int v) {
    if (v < 26) return char('a' + v);
    if (v < 52) return char('A' + v - 26);
    if (v < 62) return char('0' + v - 52);
    return v == 62 ? '+' : '-';
}

void malformed(const std::string& why) { throw Error(ErrorKind::MalformedSignature, why); }

struct Reader {
    const std::string& s;
    size_t pos = 0;
    int next() {
        if (pos >= s.size()) malformed("signature ends early");
        int v = sval(s[pos++]);
        if (v < 0) malformed("bad character in signature");
        return v;
    }
    long read(int nchars) {
        long v = 0;
        for (int i = 0; i < nchars; ++i) v |= long(next()) << (6 * i);
        return v;
    }
};

void write_int(std::string& out, long v, int nchars) {
    for (int i = 0; i < nchars; ++i) {
        out += schar(int(v & 63));
        v >>= 6;
    }
}

} // namespace

Triangulation decode_isosig(const std::string& sig) {
    Reader r{sig};
    if (sig.empty()) malformed("empty signature");
    long n = r.next();
    int nchars = 1;
    if (n == 63) {
        nchars = r.next();
        n = r.read(nchars);
    }
    if (n == 0) {
        if (r.pos != sig.size()) malformed("trailing characters");
        return Triangulation(0);
    }
    const long nfacets = 4 * n;
    std::vector<int> action;
    long seen = 0, njoins = 0;
    while (seen < nfacets) {
        int v = r.next();
        for (int i = 0; i < 3; ++i) {
            int trit = (v >> (2 * i)) & 3;
            if (seen == nfacets) {
                if (trit != 0) malformed("nonzero padding trit");
                continue;
            }
            if (trit == 3) malformed("bad facet action");
            action.push_back(trit);
            seen += trit == 0 ? 1 : 2;
            if (trit == 2) ++njoins;
            if (seen > nfacets) malformed("facet count overflow");
        }
    }
    std::vector<long> dest(njoins);
    for (auto& d : dest) d = r.read(nchars);
    std::vector<int> perm(njoins);
    for (auto& p : perm) {
        p = r.next();
        if (p >= 24) malformed("permutation index out of range");
    }
    if (r.pos != sig.size()) malformed("trailing characters");

    Triangulation tri{int(n)};
    long next_unused = 1;
    size_t ai = 0, ji = 0;
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (tri.gluing(t, f).glued()) continue;
            if (ai >= action.size()) malformed("facet actions exhausted");
            int a = action[ai++];
            if (a == 1) {
                if (next_unused >= n) throw Error(ErrorKind::InvalidGluing, "too many new simplices");
                tri.join(t, f, int(next_unused++), Perm4());
            } else if (a == 2) {
                Perm4 p = Perm4::from_ordered_index(perm[ji]);
                long d = dest[ji++];
                if (d >= next_unused || tri.gluing(int(d), p[f]).glued() ||
                    (d == t && p[f] == f))
                    throw Error(ErrorKind::InvalidGluing, "inconsistent join destination");
                tri.join(t, f, int(d), p);
            }
        }
    if (next_unused != n) throw Error(ErrorKind::InvalidGluing, "disconnected signature");
    tri.validate();
    tri.finalize();
    return tri;
}

std::string isosig_from(const Triangulation& tri, int tet, const Perm4& start,
                        std::vector<int>* tet_map, std::vector<Perm4>* vertex_maps) {
    const int n = tri.tet_count();
    std::vector<int> image(n, -1), pre(n, -1);
    std::vector<Perm4> vmap(n);
    image[tet] = 0;
    pre[0] = tet;
    vmap[tet] = start;
    int next_unused = 1;
    std::vector<int> actions, dests, perms;
    for (int img = 0; img < n; ++img) {
        int src = pre[img];
        if (src < 0) break;
        for (int fimg = 0; fimg < 4; ++fimg) {
            int fsrc = vmap[src].inverse()[fimg];
            const Gluing& g = tri.gluing(src, fsrc);
            if (!g.glued()) {
                actions.push_back(0);
                continue;
            }
            if (image[g.tet] >= 0) {
                int other_face = vmap[g.tet][g.face];
                if (image[g.tet] < img || (image[g.tet] == img && other_face < fimg)) continue;
                actions.push_back(2);
                dests.push_back(image[g.tet]);
                perms.push_back((vmap[g.tet] * g.perm * vmap[src].inverse()).ordered_index());
            } else {
                image[g.tet] = next_unused;
                pre[next_unused++] = g.tet;
                vmap[g.tet] = vmap[src] * g.perm.inverse();
                actions.push_back(1);
            }
        }
    }
    int nchars = 1;
    std::string out;
    if (n < 63) {
        out += schar(n);
    } else {
        nchars = 0;
        for (long v = n; v > 0; v >>= 6) ++nchars;
        out += '-';
        out += schar(nchars);
        write_int(out, n, nchars);
    }
    for (size_t i = 0; i < actions.size(); i += 3) {
        int v = 0;
        for (size_t k = 0; k < 3 && i + k < actions.size(); ++k) v |= actions[i + k] << (2 * k);
        out += schar(v);
    }
    for (int d : dests) write_int(out, d, nchars);
    for (int p : perms) out += schar(p);
    if (tet_map) *tet_map = image;
    if (vertex_maps) *vertex_maps = vmap;
    return out;
}

std::string canonical_isosig(const Triangulation& tri) {
    if (tri.tet_count() == 0) return "a";
    std::string best;
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int i = 0; i < 24; ++i) {
            std::string s = isosig_from(tri, t, Perm4::from_ordered_index(i));
            if (best.empty() || s < best) best = s;
        }
    return best;
}

TautSig parse_taut_isosig(const std::string& sig) {
    auto us = sig.find('_');
    if (us == std::string::npos) malformed("missing '_' between signature and angles");
    std::string iso = sig.substr(0, us), angles = sig.substr(us + 1);
    TautSig out{decode_isosig(iso), {}};
    for (char c : angles) {
        if (c < '0' || c > '2') malformed("angle digits must be 0, 1 or 2");
        out.pi_pair.push_back(c - '0');
    }
    if (int(out.pi_pair.size()) != out.tri.tet_count())
        throw Error(ErrorKind::AngleLengthMismatch,
                    std::to_string(out.pi_pair.size()) + " angle digits for " +
                        std::to_string(out.tri.tet_count()) + " tetrahedra");
    return out;
}

std::string serialize_taut_isosig(const Triangulation& tri, const std::vector<int>& pi_pair) {
    std::string best, best_angles;
    const int n = tri.tet_count();
    if (n == 0) return "a_";
    for (int t = 0; t < n; ++t)
        for (int i = 0; i < 24; ++i) {
            std::vector<int> tmap;
            std::vector<Perm4> vmaps;
            std::string s = isosig_from(tri, t, Perm4::from_ordered_index(i), &tmap, &vmaps);
            if (!best.empty() && s > best) continue;
            std::string ang(n, '0');
            for (int u = 0; u < n; ++u) {
                int e = kPiPairEdges[pi_pair[u]][0];
                int a = vmaps[u][kEdgeVerts[e][0]], b = vmaps[u][kEdgeVerts[e][1]];
                ang[tmap[u]] = char('0' + pi_pair_of_edge(edge_index(a, b)));
            }
            if (best.empty() || s < best || ang < best_angles) {
                best = s;
                best_angles = ang;
            }
        }
    return best + "_" + best_angles;
}

} // namespace veerkit
