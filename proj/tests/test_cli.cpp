#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace hyperell;
using namespace hyperell::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

template <class F>
Run run(F&& f) {
    std::ostringstream out, err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

RunConfig genus(int g) {
    RunConfig cfg;
    cfg.genus = g;
    return cfg;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(Cli, TableGenusOne) {
    const auto r = run([](auto& o, auto& e) { return cmd_table(genus(1), o, e); });
    EXPECT_EQ(r.code, ok);
    EXPECT_EQ(r.out, "genus 1\n[lambda]\nla4 = -3*b1_1^2 + 1/2*b3_1\nla6 = 2*b1_1^3 - 1/2*b1_1*b3_1 + 1/4*b2_1^2\n[w]\n");
}

TEST(Cli, TableTreeGolden) {
    auto cfg = genus(2);
    cfg.format = "tree";
    const auto r = run([&](auto& o, auto& e) { return cmd_table(cfg, o, e); });
    EXPECT_EQ(r.code, ok);
    EXPECT_EQ(r.out, slurp(HYPERELL_GOLDEN_DIR "/table_g2_tree.json"));
    const auto doc = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(doc["genus"], 2);
    EXPECT_EQ(doc["w"]["3,3"], "3*b1_1*b1_3 - 1/2*b3_3");
    EXPECT_EQ(doc["provenance"]["w_3_3"], "BEL1[3]");
}

TEST(Cli, GenusZeroRejected) {
    EXPECT_THROW(run([](auto& o, auto& e) { return cmd_table(genus(0), o, e); }), error);
}

TEST(Cli, Verify) {
    auto r = run([](auto& o, auto& e) { return cmd_verify(genus(3), o, e); });
    EXPECT_EQ(r.code, ok);
    EXPECT_NE(r.out.find("9/9 equations ZERO"), std::string::npos);
    EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
    r = run([](auto& o, auto& e) { return cmd_verify(genus(4), o, e); });
    EXPECT_EQ(r.code, ok);
    EXPECT_NE(r.out.find("14/14 equations ZERO"), std::string::npos);

    auto cfg = genus(2);
    cfg.inject_fault = true;
    r = run([&](auto& o, auto& e) { return cmd_verify(cfg, o, e); });
    EXPECT_EQ(r.code, verification_failure);
    EXPECT_NE(r.out.find("BEL1[1]: NONZERO"), std::string::npos);
    EXPECT_NE(r.out.find("FAILED: BEL1[1]"), std::string::npos);
}

TEST(Cli, Reduce) {
    std::istringstream none;
    auto r = run([&](auto& o, auto& e) {
        return cmd_reduce(genus(1), "p[1,1,1]^2 - 4*p[1,1]^3 - 4*la4*p[1,1] - 4*la6", none, o, e);
    });
    EXPECT_EQ(r.code, ok);
    EXPECT_EQ(r.out, "0\n");
    r = run([&](auto& o, auto& e) { return cmd_reduce(genus(2), "p[3,3]", none, o, e); });
    EXPECT_EQ(r.out, "3*b1_1*b1_3 - 1/2*b3_3\n");
    r = run([&](auto& o, auto& e) { return cmd_reduce(genus(1), "p[1,3,3]", none, o, e); });
    EXPECT_EQ(r.code, usage);
    EXPECT_NE(r.err.find("UnsupportedSymbol"), std::string::npos);
    EXPECT_NE(r.err.find("hint:"), std::string::npos);
    r = run([&](auto& o, auto& e) { return cmd_reduce(genus(1), "p[1,1] +", none, o, e); });
    EXPECT_EQ(r.code, usage);
    EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
    r = run([&](auto& o, auto& e) { return cmd_reduce(genus(1), "1/(la4 - la4)", none, o, e); });
    EXPECT_NE(r.err.find("DivisionByZeroPoly"), std::string::npos);
}

TEST(Cli, ReduceBatch) {
    std::istringstream in("p[1,1]\n\np[1,1,1,1]/2\np[2,2]\nla4\n");
    const auto r = run([&](auto& o, auto& e) { return cmd_reduce(genus(1), "", in, o, e); });
    EXPECT_EQ(r.code, usage);
    EXPECT_EQ(r.out, "b1_1\n1/2*b3_1\n-3*b1_1^2 + 1/2*b3_1\n");
    EXPECT_NE(r.err.find("IndexError"), std::string::npos);
}

TEST(Cli, Rank) {
    auto cfg = genus(2);
    cfg.samples = 10;
    auto r = run([&](auto& o, auto& e) { return cmd_rank(cfg, o, e); });
    EXPECT_EQ(r.code, ok);
    EXPECT_EQ(r.out, "rank 4 at 10/10 points; rank 2 at origin\n");
    cfg = genus(1);
    cfg.point = "1,1,0";
    r = run([&](auto& o, auto& e) { return cmd_rank(cfg, o, e); });
    EXPECT_EQ(r.out, "rank 2 at (1,1,0)\n");
    // At (1,0,0) the two gradients are (-6,0,1/2) and (6,0,-1/2).
    cfg.point = "1,0,0";
    r = run([&](auto& o, auto& e) { return cmd_rank(cfg, o, e); });
    EXPECT_EQ(r.out, "rank 1 at (1,0,0)\n");
}

TEST(Cli, Disc) {
    auto cfg = genus(1);
    cfg.lambda = "-3,2";
    auto r = run([&](auto& o, auto& e) { return cmd_disc(cfg, o, e); });
    EXPECT_EQ(r.out, "disc = 0; lambda IN Sigma_g\n");
    cfg.lambda = "-1,0";
    r = run([&](auto& o, auto& e) { return cmd_disc(cfg, o, e); });
    EXPECT_EQ(r.out, "disc = 4; lambda NOT IN Sigma_g\n");
    cfg.lambda = "1/2";
    EXPECT_THROW(run([&](auto& o, auto& e) { return cmd_disc(cfg, o, e); }), error);
}

TEST(Cli, Numeric) {
    RunConfig cfg;
    cfg.samples = 20;
    auto r = run([&](auto& o, auto& e) { return cmd_numeric(cfg, o, e); });
    EXPECT_EQ(r.code, ok);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    cfg.samples = 3;
    cfg.omega1 = "1,0";
    cfg.omega2 = "0,1";
    r = run([&](auto& o, auto& e) { return cmd_numeric(cfg, o, e); });
    EXPECT_EQ(r.code, ok);
    cfg.omega2 = "2,0";
    EXPECT_THROW(run([&](auto& o, auto& e) { return cmd_numeric(cfg, o, e); }), degenerate_lattice);
}

TEST(Cli, IndependenceDeterministic) {
    RunConfig cfg;
    cfg.samples = 40;
    const auto a = run([&](auto& o, auto& e) { return cmd_independence(cfg, o, e); });
    const auto b = run([&](auto& o, auto& e) { return cmd_independence(cfg, o, e); });
    EXPECT_EQ(a.code, ok);
    EXPECT_NE(a.out.find("verdict FULL RANK"), std::string::npos);
    EXPECT_NE(a.out.find("verdict DEFICIENCY 1"), std::string::npos);
    EXPECT_EQ(a.out, b.out);
}
