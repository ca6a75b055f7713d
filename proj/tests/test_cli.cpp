#include "cli_report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace affchar;
using namespace affchar::cli;

namespace {

RunConfig config(const std::string& command)
{
    RunConfig c;
    c.command = command;
    return c;
}

} // namespace

TEST(Cli, GkoPassReport)
{
    auto c = config("verify-gko");
    c.order = Rational(4);
    auto r = run(c);
    EXPECT_EQ(r.exit_code, exit_pass);
    EXPECT_EQ(r.report["schema"], 1);
    EXPECT_EQ(r.report["command"], "verify-gko");
    EXPECT_EQ(r.report["elapsed_ms"], 0);
    ASSERT_EQ(r.report["reports"].size(), 1u);
    EXPECT_EQ(r.report["reports"][0]["status"], "pass");
    EXPECT_EQ(r.report["reports"][0]["elapsed_ms"], 0);
    EXPECT_TRUE(r.report["reports"][0]["first_mismatch"].is_null());
}

TEST(Cli, UsageErrors)
{
    auto b2 = config("verify-gko");
    b2.type_label = "B2";
    auto r = run(b2);
    EXPECT_EQ(r.exit_code, exit_usage);
    EXPECT_NE(r.error.find("non-simply-laced"), std::string::npos);

    EXPECT_EQ(run(config("no-such-command")).exit_code, exit_usage);
    auto lv = config("levels");
    EXPECT_EQ(run(lv).exit_code, exit_usage); // no kappa
    lv.kappas = {Rational(-2)};
    EXPECT_EQ(run(lv).exit_code, exit_usage); // critical
    auto bad_spec = config("verify-kw");
    bad_spec.spec = "diagonal";
    EXPECT_EQ(run(bad_spec).exit_code, exit_usage);
    auto gko = config("verify-gko");
    gko.kappas = {Rational(-1)}; // kappa + h^vee = 1 has no partner
    EXPECT_EQ(run(gko).exit_code, exit_usage);
}

TEST(Cli, LevelsFfDual)
{
    auto c = config("levels");
    c.kappas = {Rational(0)};
    auto r = run(c);
    EXPECT_EQ(r.exit_code, exit_pass);
    EXPECT_EQ(r.report["reports"][0]["details"]["kappa_check"], "-3/2");
    c.op = "gluing";
    c.kappas = {Rational(-1)};
    r = run(c);
    EXPECT_EQ(r.exit_code, exit_pass);
    EXPECT_EQ(r.report["reports"][0]["details"]["kappa"], "-1");
    EXPECT_EQ(r.report["reports"][0]["details"]["varkappa"], "-3/2");
}

TEST(Cli, DeterministicAcrossRuns)
{
    auto c = config("weights");
    c.type_label = "B2";
    c.samples = 4;
    c.seed = 42;
    EXPECT_EQ(run(c).report.dump(), run(c).report.dump());
    auto e = config("classify-ext");
    e.random_pairs = 3;
    e.seed = 7;
    auto r1 = run(e);
    EXPECT_EQ(r1.exit_code, exit_pass);
    EXPECT_EQ(r1.report["reports"].size(), 6u);
    EXPECT_EQ(r1.report.dump(), run(e).report.dump());
    e.seed = 8;
    EXPECT_NE(r1.report.dump(), run(e).report.dump());
}

TEST(Cli, FiniteLieCommands)
{
    for (const char* t : {"A1", "A2", "B2"}) {
        auto c = config("takiff-forms");
        c.type_label = t;
        EXPECT_EQ(run(c).exit_code, exit_pass) << t;
    }
    auto h = config("hom-dim");
    h.type_label = "A2";
    EXPECT_EQ(run(h).report["reports"][0]["details"]["hom_dim"], 1);
    auto s = config("singular");
    auto r = run(s);
    EXPECT_EQ(r.exit_code, exit_pass);
    EXPECT_EQ(r.report["reports"][0]["details"]["constraints"].size(), 3u);
}

TEST(Cli, CharDump)
{
    auto c = config("char");
    c.type_label = "A2";
    c.order = Rational(3);
    c.spec = "trivial";
    auto r = run(c);
    ASSERT_EQ(r.exit_code, exit_pass);
    const auto& series = r.report["reports"][0]["details"]["series"]["series"];
    // Theta_Q / (q;q)^2 for A2: 1 + 8q + 34q^2 + ...
    EXPECT_EQ(series[1]["terms"][0]["coeff"], 8);
    c.which = "t-module";
    c.kappas = {Rational(1, 3)};
    EXPECT_EQ(run(c).exit_code, exit_pass);
    c.which = "nonsense";
    EXPECT_EQ(run(c).exit_code, exit_usage);
}

TEST(Cli, AtomicWrite)
{
    auto dir = std::filesystem::temp_directory_path() / "affchar_cli_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "report.json").string();
    write_atomically(path, "{}\n");
    write_atomically(path, "{\"a\":1}\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "{\"a\":1}\n");
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}
