#pragma once

#include <string>
#include <utility>
#include <vector>

#include "veerkit/triangulation.hpp"

namespace veerkit {

// Regina-style isomorphism signature, without angles.
Triangulation decode_isosig(const std::string& sig);
// Signature of the labelling that starts at `tet` with vertex map `start`.
std::string isosig_from(const Triangulation& tri, int tet, const Perm4& start,
                        std::vector<int>* tet_map = nullptr,
                        std::vector<Perm4>* vertex_maps = nullptr);
// Canonical signature: minimum over all starting labellings.
std::string canonical_isosig(const Triangulation& tri);

struct TautSig {
    Triangulation tri;
    std::vector<int> pi_pair;  // per tet, digit 0/1/2
};

// "<isoSig>_<angles>"
TautSig parse_taut_isosig(const std::string& sig);
std::string serialize_taut_isosig(const Triangulation& tri, const std::vector<int>& pi_pair);

} // namespace veerkit
