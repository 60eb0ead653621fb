#include "json.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
};

// stdout and stderr merged.
Outcome run(const std::string& args)
{
    const std::string cmd = std::string(RODWAVE_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("rodwave_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content)
    {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

    fs::path dir_;
};

const char* kSetA = R"({"material": {"lambda1": "3/2", "mu1": "5/2", "nu1": 2, "nu2": 3, "nu4": 5,
                                     "rho": 3, "c": 4, "delta": "5/2", "epsilon": "7/2"}})";
const char* kSetB = R"({"material": {"lambda1": "3/4", "mu1": "5/4", "nu1": 1, "nu2": 2, "nu4": 4,
                                     "rho": "5/2", "c": "7/2", "delta": 1, "epsilon": 2}})";
const char* kZero = R"({"material": {"lambda1": 0, "mu1": "5/2", "nu1": 2, "nu2": 3, "nu4": 5,
                                     "rho": 3, "c": 4, "delta": "5/2", "epsilon": "7/2"}})";

}  // namespace

TEST_F(Cli, ParamsSetA)
{
    const Outcome r = run("params " + write("a.json", kSetA));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(R"("alpha2": "38065/55296")"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(R"("n1": "3/16")"), std::string::npos);
}

TEST_F(Cli, ParamsSetBThroughGlobalConfig)
{
    const Outcome r = run("--config " + write("b.json", kSetB) + " params");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find(R"("alpha1": "19/196")"), std::string::npos) << r.out;
}

TEST_F(Cli, ParamsZeroPoissonRatio)
{
    const Outcome r = run("params " + write("z.json", kZero));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("ZeroPoissonRatio"), std::string::npos) << r.out;
}

TEST_F(Cli, ParamsMalformed)
{
    EXPECT_EQ(run("params " + write("bad.json", "{not json")).code, 2);
    const Outcome r = run("params " + write("m.json", R"({"material": {"lambda1": 1}})"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("mu1"), std::string::npos) << r.out;
}

TEST_F(Cli, VerifyCase1Passes)
{
    const Outcome r = run("verify --family sg.case1.tanh.plus");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sg.case1.tanh.plus"), std::string::npos);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(Cli, VerifyUnreachableTolerance) { EXPECT_EQ(run("verify --tol 1e-30").code, 1); }

TEST_F(Cli, VerifyJsonOneObjectPerEntry)
{
    const Outcome r = run("verify --json --allow-errata");
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    int n = 0;
    for (std::string line; std::getline(in, line); ++n) {
        const json j = json::parse(line);
        EXPECT_TRUE(j.contains("status"));
    }
    EXPECT_EQ(n, 53);
}

TEST_F(Cli, VerifyErrataAffectExitCodeUnlessAllowed)
{
    EXPECT_EQ(run("verify --family mefm.case11.tanh.plus").code, 1);
    EXPECT_EQ(run("verify --family mefm.case11.tanh.plus --allow-errata").code, 0);
}

TEST_F(Cli, BadFlags)
{
    EXPECT_EQ(run("verify --bogus").code, 2);
    EXPECT_EQ(run("verify --grid 0x3").code, 2);
    EXPECT_EQ(run("verify --grid abc").code, 2);
    EXPECT_EQ(run("verify --family sg.case99.tanh.plus").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, SystemCounts)
{
    Outcome r = run("system mefm 1 full");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equations: 8 (predicted 8), unknowns: 8 (predicted 8)"), std::string::npos) << r.out;
    r = run("system sg");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("equations: 9"), std::string::npos) << r.out;
    r = run("system mefm 2 discrim0");
    EXPECT_NE(r.out.find("equations: 11 (predicted 9)"), std::string::npos) << r.out;
}

TEST_F(Cli, SystemCheck)
{
    Outcome r = run("system mefm 1 sigma0 --check mefm.case13");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all residuals zero"), std::string::npos) << r.out;
    r = run("system mefm 1 full --check mefm.case11");
    EXPECT_EQ(r.code, 1);
    r = run("--json system sg --check sg.case1");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["check"]["all_zero"].get<bool>());
}

TEST_F(Cli, SystemRejectsLargeM)
{
    EXPECT_EQ(run("system mefm 4").code, 2);
    EXPECT_EQ(run("system mefm 1 cubic").code, 2);
    EXPECT_EQ(run("system kdv").code, 2);
}

TEST_F(Cli, ListAndEval)
{
    Outcome r = run("--json list");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).size(), 53u);
    r = run("--json eval --family mefm.case13.exp.plus --x 0.5 --t 1");
    EXPECT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_LT(j["pde_relative"].get<double>(), 1e-9);
    const std::string cfg = write("c.json", R"({"material": {"preset": "B"}, "family": "sg.case2.coth.plus",
                                                "inputs": {"mu": "9/4"}})");
    r = run("--config " + cfg + " eval --x 1 --t 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sg.case2.coth.plus"), std::string::npos);
    EXPECT_EQ(run("eval").code, 2);
    EXPECT_EQ(run("eval --family sg.case2.coth.plus --x 0 --t 0").code, 2);
}

TEST_F(Cli, FigureWritesFilesDeterministically)
{
    const fs::path a = dir_ / "a", b = dir_ / "b";
    ASSERT_EQ(run("figure fig5 --out " + a.string()).code, 0);
    ASSERT_EQ(run("figure fig5 --out " + b.string()).code, 0);
    int files = 0;
    for (const auto& e : fs::directory_iterator(a)) {
        ++files;
        std::ifstream fa(e.path()), fb(b / e.path().filename());
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        EXPECT_EQ(sa.str(), sb.str()) << e.path();
    }
    EXPECT_EQ(files, 6);
    const json m = json::parse(std::ifstream(a / "fig5_manifest.json"));
    EXPECT_EQ(m["tau^2-4sigma"], "-15/4");
}

TEST_F(Cli, FigureErrors)
{
    EXPECT_EQ(run("figure fig12 --out " + (dir_ / "x").string()).code, 2);
    EXPECT_EQ(run("figure fig1 --format xlsx --out " + (dir_ / "x").string()).code, 2);
}
