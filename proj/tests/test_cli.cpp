#include <gtest/gtest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string& args)
{
    std::string cmd = std::string(KLMASKS_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json run_json(const std::string& args)
{
    CliRun r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, KlPolynomial)
{
    nlohmann::json j = run_json("kl --x 1324 --w 3412");
    EXPECT_EQ(j["poly"], "1+q");
    EXPECT_EQ(j["coefficients"]["0"], 1);
    EXPECT_EQ(j["coefficients"]["1"], 1);
    EXPECT_EQ(j["w"], (std::vector<int>{3, 4, 1, 2}));
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run("kl --x 1324").code, 2);
    EXPECT_EQ(run("kl --x 1324 --w 3412 --bogus").code, 2);
    EXPECT_EQ(run("nosuch").code, 2);
    EXPECT_EQ(run("kl --x 13x4 --w 3412").code, 2);
    EXPECT_EQ(run("zel tau --perm 4231 --variant sideways").code, 2);
    EXPECT_EQ(run("zel tau --perm 4231 --ordering 7").code, 2);
}

TEST(Cli, RenderHeapAscii)
{
    CliRun r = run("render heap --word 2,3,1,2,4 --format ascii");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, ". * . .\n* . * .\n. * . *\n");
}

TEST(Cli, RenderSvg)
{
    CliRun r = run("render mask --word 2,1,3,2 --mask 1011 --format svg");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("<svg", 0), 0u);
}

TEST(Cli, VerifyGoldenSuite)
{
    nlohmann::json j = run_json("verify --suite paper-examples");
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_GE(j["checks"].size(), 8u);
}

TEST(Cli, InjectedMutationIsCaught)
{
    EXPECT_EQ(run("verify --suite full --n-max 4 --inject-mutation").code, 0);
}

TEST(Cli, Construction2AndGeometric)
{
    nlohmann::json c2 = run_json("construct2 --perm 4231");
    EXPECT_EQ(c2["masks"].size(), 24u);
    nlohmann::json g = run_json("zel geometric --perm 4231");
    EXPECT_FALSE(g["geometric"].get<bool>());
    EXPECT_EQ(g["collisions"].size(), 4u);
}

TEST(Cli, MaskSetFileRoundTrip)
{
    nlohmann::json c1 = run_json("construct1 --perm 4231");
    std::string path = testing::TempDir() + "klmasks_set.json";
    {
        std::ofstream f(path);
        f << nlohmann::json{{"n", c1["n"]}, {"word", c1["word"]}, {"masks", c1["masks"]}}.dump();
    }
    nlohmann::json chk = run_json("masks check --set " + path);
    EXPECT_TRUE(chk["ok"].get<bool>());
    nlohmann::json geo = run_json("zel geometric --perm 4231 --set " + path);
    EXPECT_EQ(geo["masks"], 24);

    nlohmann::json bad = c1;
    bad["masks"][0] = bad["masks"][1];
    {
        std::ofstream f(path);
        f << nlohmann::json{{"n", bad["n"]}, {"word", bad["word"]}, {"masks", bad["masks"]}}.dump();
    }
    EXPECT_EQ(run("masks check --set " + path).code, 1);
}

TEST(Cli, LsAndBs)
{
    nlohmann::json e = run_json("ls expansion --perm 4231");
    EXPECT_EQ(e["terms"].size(), 2u);
    nlohmann::json f = run_json("bs fiber --word 2,1,3,2 --x 1324");
    EXPECT_EQ(f["poly"], "1+q");
    nlohmann::json fp = run_json("bs fixed-point --word 1,2,1 --mask +-+");
    EXPECT_EQ(fp["encoding"], "+-+");
}

TEST(Cli, CompareDeterministic)
{
    CliRun a = run("compare-constructions --n-max 5 --format ascii");
    CliRun b = run("compare-constructions --n-max 5 --format ascii --threads 1");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("total 51 geometric 44 not-geometric 7"), std::string::npos);
}
