#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "veerkit/render.hpp"
#include "support.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::vector<json> lines;
};

Run cli_env(const std::string& env, const std::string& args);

Run cli(const std::string& args) {
    return cli_env("", args);
}

Run cli_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " " + std::string(VEERKIT_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) r.lines.push_back(json::parse(line));
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::string tmp(const std::string& name) { return testing::TempDir() + name; }

// Every report carries the same envelope.
void envelope(const json& j, const std::string& command) {
    EXPECT_EQ(j["command"], command);
    EXPECT_TRUE(j.contains("input"));
    EXPECT_TRUE(j["timing_ms"].is_number());
    EXPECT_TRUE(j["exit_code"].is_number_integer());
    EXPECT_EQ(j["seed"], 0);
}

} // namespace

TEST(Cli, CheckFigureEight) {
    auto r = cli("check cPcbbbiht_12");
    EXPECT_EQ(r.code, 0);
    ASSERT_EQ(r.lines.size(), 1u);
    const json& j = r.lines[0];
    envelope(j, "check");
    const json& res = j["results"];
    EXPECT_EQ(res["signature"], "cPcbbbiht_12");
    EXPECT_EQ(res["tet_count"], 2);
    EXPECT_EQ(res["tet_kinds"], json({"Toggle", "Toggle"}));
    for (auto& e : res["edges"]) {
        EXPECT_TRUE(e.contains("colour"));
        EXPECT_EQ(e["degree"], 6);
        EXPECT_EQ(e["pi_count"], 2);
    }
    for (auto k : {"taut", "transverse", "veering"}) EXPECT_TRUE(res["checks"][k].get<bool>());
}

TEST(Cli, CheckExitCodes) {
    auto r = cli("check cPcbbbiht_1");
    EXPECT_EQ(r.code, 2);
    ASSERT_EQ(r.lines.size(), 1u);
    EXPECT_EQ(r.lines[0]["results"]["error"]["kind"], "AngleLengthMismatch");
    EXPECT_EQ(cli("check cPcbbbiht_11").code, 1);
    EXPECT_EQ(cli("check").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
}

TEST(Cli, CheckFile) {
    std::string path = tmp("census.txt");
    {
        std::ofstream f(path);
        f << "# comment\n\ncPcbbbiht_12 m004 extra\ncPcbbbiht_12\n";
    }
    auto r = cli("check --file " + path);
    EXPECT_EQ(r.code, 0);
    ASSERT_EQ(r.lines.size(), 2u);
    EXPECT_EQ(r.lines[0]["line"], 3);
    {
        std::ofstream f(path, std::ios::app);
        f << "cPcbbbiht_11\n";
    }
    r = cli("check --file " + path);
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.lines.size(), 3u);
    EXPECT_EQ(r.lines[2]["exit_code"], 1);
    EXPECT_EQ(cli("check --file " + tmp("missing.txt")).code, 2);
}

TEST(Cli, Order) {
    auto r = cli("order cPcbbbiht_12 t0.v0 t0.v1 t0.v2");
    EXPECT_EQ(r.code, 0);
    envelope(r.lines.at(0), "order");
    int sign = r.lines[0]["results"]["sign"];
    EXPECT_EQ(std::abs(sign), 1);
    EXPECT_GE(r.lines[0]["results"]["witness_size"].get<int>(), 1);
    auto rev = cli("order cPcbbbiht_12 t0.v0 t0.v2 t0.v1");
    EXPECT_EQ(rev.lines.at(0)["results"]["sign"], -sign);
    EXPECT_EQ(cli("order cPcbbbiht_12 t0.v3 t0.v3 t1.v0").lines.at(0)["results"]["sign"], 0);
    EXPECT_EQ(cli("order cPcbbbiht_12 t0.v9 t0.v3 t1.v0").code, 2);
}

TEST(Cli, OrderDepthExhausted) {
    const std::string q = "order cPcbbbiht_12 t0.v0 t1.v2/g3/g2/g1/g0/g3/g2/g1/g0 t0.v2";
    auto r = cli(q + " --max-depth 1");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(r.lines.at(0)["error"]["kind"], "DepthExhausted");
    EXPECT_EQ(cli_env("VEERKIT_MAX_DEPTH=1", q).code, 3);
    EXPECT_EQ(cli(q).code, 0);
}

TEST(Cli, RoundTrip) {
    auto r = cli("roundtrip cPcbbbiht_12");
    EXPECT_EQ(r.code, 0);
    const json& j = r.lines.at(0);
    envelope(j, "roundtrip");
    EXPECT_TRUE(j["results"]["pass"].get<bool>());
    const json& iso = j["results"]["isomorphism"];
    EXPECT_EQ(iso["tet"].size(), 2u);
    EXPECT_EQ(iso["vertices"].size(), 2u);
    for (auto& v : iso["vertices"]) EXPECT_EQ(v.size(), 4u);
    auto z = cli("roundtrip cPcbbbiht_12 --radius 0");
    EXPECT_EQ(z.code, 4);
    EXPECT_EQ(z.lines.at(0)["error"]["kind"], "InsufficientContinent");
}

TEST(Cli, RenderDeterministic) {
    std::string a = tmp("a.svg"), b = tmp("b.svg");
    auto r = cli("render cPcbbbiht_12 --what layer --out " + a);
    EXPECT_EQ(r.code, 0);
    cli("render cPcbbbiht_12 --what layer --out " + b);
    std::string sa = slurp(a), sb = slurp(b);
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, sb);
    // One polygon per face of the layer.
    size_t faces = 0;
    for (size_t p = sa.find("class=\"face\""); p != std::string::npos; p = sa.find("class=\"face\"", p + 1)) ++faces;
    EXPECT_EQ(int(faces), r.lines.at(0)["results"]["faces"].get<int>());
    EXPECT_EQ(cli("render cPcbbbiht_12 --what nonsense").code, 2);
}

TEST(Cli, RenderRectangles) {
    std::string a = tmp("r.svg");
    auto r = cli("render cPcbbbiht_12 --what rectangles --radius 1 --out " + a);
    EXPECT_EQ(r.code, 0);
    const json& res = r.lines.at(0)["results"];
    EXPECT_EQ(res["rectangles"], res["edges"]);
    EXPECT_EQ(res["slope_matches"], res["rectangles"]);
    std::string svg = slurp(a);
    size_t groups = 0, red_ok = 0;
    for (size_t p = svg.find("class=\"rect\""); p != std::string::npos; p = svg.find("class=\"rect\"", p + 1)) {
        ++groups;
        size_t end = svg.find('>', p);
        std::string tag = svg.substr(p, end - p);
        bool red = tag.find("data-colour=\"red\"") != std::string::npos;
        bool sw_ne = tag.find("data-corner=\"SW\"") != std::string::npos ||
                     tag.find("data-corner=\"NE\"") != std::string::npos;
        red_ok += red == sw_ne;
    }
    EXPECT_EQ(int(groups), res["edges"].get<int>());
    EXPECT_EQ(red_ok, groups);
}

TEST(Render, LibraryMatchesAcrossSessions) {
    veerkit::Session a(vktest::figure_eight()), b(vktest::figure_eight());
    for (auto what : {veerkit::RenderWhat::Tracks, veerkit::RenderWhat::Crowns}) {
        auto x = veerkit::render_svg(a, {what, 1, -1}), y = veerkit::render_svg(b, {what, 1, -1});
        EXPECT_EQ(x.svg, y.svg);
    }
}
