#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "veerkit/continent.hpp"

namespace veerkit {

// Cusp of the cover named by `t<k>.v<j>/g<f1>/g<f2>...`: start at the
// canonical lift of base tet k, cross faces f1, f2, ..., take vertex j of
// the tet reached.
struct CuspName {
    int tet = 0;
    int vertex = 0;
    std::vector<int> faces;

    static CuspName parse(const std::string& s);  // throws BadCuspName
    std::string str() const;
};

// A deck transformation given by a closed face-crossing word at base tet 0.
struct DeckLoop {
    std::vector<int> word;
    static bool is_loop(const Triangulation& tri, const std::vector<int>& word);
};

struct SessionConfig {
    int max_rounds = -1;      // channelisations per face crossing; -1 = default
    int max_arc_depth = 256;  // branch-line steps per endpoint chain
};

// A development session: one master continent that only grows, rooted at
// a lift of base tet 0, plus the circular order read off its coast.
class Session {
public:
    explicit Session(std::shared_ptr<const VeeringTriangulation> vt, SessionConfig cfg = {});

    const VeeringTriangulation& vt() const { return *vt_; }
    std::shared_ptr<const VeeringTriangulation> vt_ptr() const { return vt_; }
    Development& dev() { return *dev_; }
    Continent& master() { return master_; }
    const SessionConfig& config() const { return cfg_; }
    int root() const { return root_; }

    // Face word from the root for a name.
    std::vector<int> word_of(const CuspName& n) const;
    // Lifted tet at the end of a word from the root; grows the master.
    int tet_at(const std::vector<int>& word);
    int cusp(const CuspName& n);
    CuspName apply(const DeckLoop& g, const CuspName& n) const;

    // Makes sure the tet across (t, f) is in the master; t must be in it.
    int ensure_across(int t, int f);
    // Grows the master so that it contains `t`'s neighbours within the
    // given number of crossings of faces containing cusp vertex v.
    void grow_around_cusp(int t, int v, int radius);
    // Lifted tets within `radius` face crossings of the root, all added to
    // the master; in BFS order.
    std::vector<int> grow_ball(int radius);

    // Circular order of lifted cusps of the master.
    int order(int a, int b, int c);
    int order(const CuspName& a, const CuspName& b, const CuspName& c);
    // Whether x lies in the closed arc from p anticlockwise to q.
    bool in_arc(int x, int p, int q);
    int position(int cusp);  // index in the master coast
    const std::vector<int>& coast();

    long memo_checks() const { return memo_checks_; }

private:
    void refresh();

    std::shared_ptr<const VeeringTriangulation> vt_;
    SessionConfig cfg_;
    std::shared_ptr<Development> dev_;
    int root_;
    Continent master_;
    long coast_version_ = -1;
    std::vector<int> coast_;
    std::map<int, int> pos_;
    std::map<std::tuple<int, int, int>, int> memo_;
    long memo_checks_ = 0;
};

struct CompatibilityReport {
    int faces_checked = 0;
    std::vector<int> failures;  // face ids
    bool pass() const { return failures.empty(); }
};
// Every face of every tet of the continent reads anticlockwise in the order.
CompatibilityReport check_compatibility(Session& s, const Continent& C);

struct DeckReport {
    int checked = 0;
    int failures = 0;
    bool pass() const { return failures == 0; }
};
DeckReport check_deck_invariance(Session& s, const DeckLoop& g,
                                 const std::vector<std::array<CuspName, 3>>& triples);

// Cusps of the coast from x anticlockwise to y, inclusive.
std::vector<int> coastal_arc(const std::vector<int>& coast, int x, int y);

// Arc on the far side of edge[k] of a face, co-oriented away from the face.
struct CoastalArc {
    int from = -1, to = -1;  // endpoints, arc runs anticlockwise from `from` to `to`
    std::vector<int> cusps;  // including endpoints
};
CoastalArc coastal_arc(const Continent& C, const FaceView& f, int k);

} // namespace veerkit
