#include "veerkit/order.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>

#include "veerkit/error.hpp"

namespace veerkit {

CuspName CuspName::parse(const std::string& s) {
    static const std::regex head(R"(^t(\d+)\.v([0-3])((?:/g[0-3])*)$)");
    std::smatch m;
    if (!std::regex_match(s, m, head)) throw Error(ErrorKind::BadCuspName, "cannot parse cusp name '" + s + "'");
    CuspName n;
    n.tet = std::stoi(m[1]);
    n.vertex = std::stoi(m[2]);
    std::string rest = m[3];
    for (size_t i = 0; i < rest.size(); i += 3) n.faces.push_back(rest[i + 2] - '0');
    return n;
}

std::string CuspName::str() const {
    std::string s = "t" + std::to_string(tet) + ".v" + std::to_string(vertex);
    for (int f : faces) s += "/g" + std::to_string(f);
    return s;
}

bool DeckLoop::is_loop(const Triangulation& tri, const std::vector<int>& word) {
    int t = 0;
    for (int f : word) t = tri.gluing(t, f).tet;
    return t == 0;
}

Session::Session(std::shared_ptr<const VeeringTriangulation> vt, SessionConfig cfg)
    : vt_(vt), cfg_(cfg), dev_(std::make_shared<Development>(vt)), root_(dev_->create(0)),
      master_(dev_, root_) {
    if (cfg_.max_rounds < 0) cfg_.max_rounds = default_max_rounds();
}

std::vector<int> Session::word_of(const CuspName& n) const {
    if (n.tet < 0 || n.tet >= vt_->tri.tet_count())
        throw Error(ErrorKind::BadCuspName, "no base tetrahedron " + std::to_string(n.tet));
    std::vector<int> w = vt_->tri.tree_words()[n.tet];
    w.insert(w.end(), n.faces.begin(), n.faces.end());
    return w;
}

int Session::tet_at(const std::vector<int>& word) {
    return grow_to_include(master_, root_, word, cfg_.max_rounds);
}

int Session::cusp(const CuspName& n) {
    int t = tet_at(word_of(n));
    return dev_->cusp(t, n.vertex);
}

CuspName Session::apply(const DeckLoop& g, const CuspName& n) const {
    CuspName out;
    out.tet = 0;
    out.vertex = n.vertex;
    out.faces = g.word;
    auto w = word_of(n);
    out.faces.insert(out.faces.end(), w.begin(), w.end());
    return out;
}

int Session::ensure_across(int t, int f) {
    return grow_to_include(master_, t, {f}, cfg_.max_rounds);
}

void Session::grow_around_cusp(int t, int v, int radius) {
    std::set<int> seen{t};
    std::deque<std::tuple<int, int, int>> q{{t, v, 0}};
    while (!q.empty()) {
        auto [x, w, d] = q.front();
        q.pop_front();
        if (d == radius) continue;
        for (int g = 0; g < 4; ++g) {
            if (g == w) continue;
            int y = ensure_across(x, g);
            if (!seen.insert(y).second) continue;
            int wy = vt_->tri.gluing(dev_->base(x), g).perm[w];
            q.push_back({y, wy, d + 1});
        }
    }
}

std::vector<int> Session::grow_ball(int radius) {
    std::vector<int> out{root_};
    std::set<int> seen{root_};
    std::deque<std::pair<int, int>> q{{root_, 0}};
    while (!q.empty()) {
        auto [x, d] = q.front();
        q.pop_front();
        if (d == radius) continue;
        for (int g = 0; g < 4; ++g) {
            int y = ensure_across(x, g);
            if (!seen.insert(y).second) continue;
            out.push_back(y);
            q.push_back({y, d + 1});
        }
    }
    return out;
}

void Session::refresh() {
    if (coast_version_ == master_.version()) return;
    coast_ = master_.coast();
    pos_.clear();
    for (size_t i = 0; i < coast_.size(); ++i) pos_[coast_[i]] = int(i);
    coast_version_ = master_.version();
}

const std::vector<int>& Session::coast() {
    refresh();
    return coast_;
}

int Session::position(int c) {
    refresh();
    auto it = pos_.find(c);
    VEERKIT_ASSERT(it != pos_.end(), "cusp not on the master coast");
    return it->second;
}

int Session::order(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    int pa = position(a), pb = position(b), pc = position(c);
    int sign = ((pa < pb) + (pb < pc) + (pc < pa)) == 2 ? 1 : -1;
    // Memo keyed by the rotation starting at the smallest id.
    std::tuple<int, int, int> key;
    int m = std::min({a, b, c});
    key = m == a ? std::make_tuple(a, b, c) : m == b ? std::make_tuple(b, c, a) : std::make_tuple(c, a, b);
    auto [it, fresh] = memo_.emplace(key, sign);
    if (!fresh) {
        ++memo_checks_;
        VEERKIT_ASSERT(it->second == sign, "circular order changed under growth");
    }
    return sign;
}

int Session::order(const CuspName& a, const CuspName& b, const CuspName& c) {
    int x = cusp(a), y = cusp(b), z = cusp(c);
    return order(x, y, z);
}

bool Session::in_arc(int x, int p, int q) {
    if (x == p || x == q) return true;
    return order(p, x, q) == 1;
}

CompatibilityReport check_compatibility(Session& s, const Continent& C) {
    CompatibilityReport r;
    Development& dev = C.dev();
    std::set<int> done;
    for (int t : C.tets())
        for (int f = 0; f < 4; ++f) {
            FaceView fv = dev.face_view(t, f);
            if (!done.insert(fv.id).second) continue;
            ++r.faces_checked;
            if (s.order(fv.cusp[0], fv.cusp[1], fv.cusp[2]) != 1) r.failures.push_back(fv.id);
        }
    return r;
}

DeckReport check_deck_invariance(Session& s, const DeckLoop& g,
                                 const std::vector<std::array<CuspName, 3>>& triples) {
    VEERKIT_ASSERT(DeckLoop::is_loop(s.vt().tri, g.word), "deck word is not a loop at tet 0");
    DeckReport r;
    for (auto& t : triples) {
        int a = s.order(t[0], t[1], t[2]);
        int b = s.order(s.apply(g, t[0]), s.apply(g, t[1]), s.apply(g, t[2]));
        ++r.checked;
        if (a != b) ++r.failures;
    }
    return r;
}

std::vector<int> coastal_arc(const std::vector<int>& coast, int x, int y) {
    auto ix = std::find(coast.begin(), coast.end(), x);
    VEERKIT_ASSERT(ix != coast.end() && std::find(coast.begin(), coast.end(), y) != coast.end(),
                   "arc endpoints not on the coast");
    std::vector<int> out;
    size_t i = ix - coast.begin();
    while (true) {
        out.push_back(coast[i]);
        if (coast[i] == y) break;
        i = (i + 1) % coast.size();
    }
    return out;
}

CoastalArc coastal_arc(const Continent& C, const FaceView& f, int k) {
    if (!C.upper().has_edge(f.edge[k]) && !C.lower().has_edge(f.edge[k])) {
        bool inside = false;
        for (int t : C.tets())
            for (int e = 0; e < 6 && !inside; ++e)
                if (C.dev().edge(t, e) == f.edge[k]) inside = true;
        if (!inside) throw Error(ErrorKind::EdgeNotInContinent, "edge not in the continent");
    }
    CoastalArc a;
    a.from = f.cusp[(k + 1) % 3];
    a.to = f.cusp[(k + 2) % 3];
    a.cusps = coastal_arc(C.coast(), a.from, a.to);
    return a;
}

} // namespace veerkit
