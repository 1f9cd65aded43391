#pragma once

#include <string>

#include <json.hpp>

#include "veerkit/error.hpp"
#include "veerkit/rectangles.hpp"

namespace veerkit {

using json = nlohmann::json;

// Exit codes shared by the command-line tool and its tests.
enum Exit { kPass = 0, kFailed = 1, kParse = 2, kDepth = 3, kInsufficient = 4 };
int exit_code_of(ErrorKind k);

struct CheckOutcome {
    json report;
    int exit = kPass;
};
// parse -> taut -> transverse -> veering -> edge neighbourhoods.
CheckOutcome check_signature(const std::string& sig);

// Lifted tets with base labels and neighbours, both landscapes, the coast.
json continent_json(const Continent& C);

json point_json(const LinkSpace& ls, const LeafPoint& p);
json rectangle_json(const LinkSpace& ls, const RectangleSignature& r);

} // namespace veerkit
