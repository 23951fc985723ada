#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    Run r;
    const std::string cmd = env + " " + HALG_CLI_PATH + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    fs::path dir;
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("halg_cli_" + std::to_string(::getpid()) + "_" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text)
    {
        std::ofstream(dir / name) << text;
        return (dir / name).string();
    }
};

}  // namespace

TEST_F(Cli, InvariantsOfRunningExample)
{
    auto f = write("gcm.halg", "field prime 32003\nvars x y\nideal x^2, x*y\nmodule m ring\n");
    auto r = run("invariants " + f);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("gcm/m: g=0 t=1 type=1 betti=[1,0,0,"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("bass=[1,"), std::string::npos);
    EXPECT_NE(r.out.find("K^0: dim=0"), std::string::npos);
    auto j = run("invariants " + f + " --format json");
    EXPECT_EQ(nlohmann::json::parse(j.out)[0]["type"], 1);
}

TEST_F(Cli, ExitCodes)
{
    auto missing = run("verify " + (dir / "missing.halg").string());
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.out.find("no such file"), std::string::npos);

    auto flag = run("verify " + std::string(HALG_CORPUS_DIR) + " --no-such-flag");
    EXPECT_EQ(flag.code, 2);
    EXPECT_NE(flag.out.find("Usage"), std::string::npos);

    auto bad = write("bad.halg", "field prime 32003\nvars x y\nideal x + 1\n");
    auto parse = run("verify " + bad);
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.out.find("inhomogeneous generator at line 3"), std::string::npos) << parse.out;

    EXPECT_EQ(run("verify " + std::string(HALG_CORPUS_DIR) + "/gcm.halg --checks nonsense").code, 2);
    EXPECT_EQ(run("explore " + std::string(HALG_CORPUS_DIR) + "/gcm.halg --questions 3").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, ReportSchema)
{
    auto r = run("verify " + std::string(HALG_CORPUS_DIR) + "/gcm.halg --checks bass_bounds,ci_characterization");
    ASSERT_EQ(r.code, 0) << r.out;
    auto doc = nlohmann::json::parse(r.out);
    for (const char* key : {"version", "field", "bound", "entries", "summary"}) EXPECT_TRUE(doc.contains(key)) << key;
    std::map<std::string, int> seen;
    for (const auto& e : doc["entries"]) {
        for (const char* key : {"module", "check", "status", "window", "witnesses", "notes"}) EXPECT_TRUE(e.contains(key)) << key;
        ++seen[e["status"].get<std::string>()];
        if (e["status"] == "fail") {
            EXPECT_FALSE(e["witnesses"].empty());
        }
    }
    for (const auto& [k, v] : seen) EXPECT_EQ(doc["summary"][k], v);
    EXPECT_EQ(doc["bounds"]["gcm"], 7);  // s + dim R + 4
}

TEST_F(Cli, FieldAndBoundOverrides)
{
    auto f = write("r.halg", "vars x y\nideal x^2 - 1/3 y^2\nmodule m ring\n");
    auto def = nlohmann::json::parse(run("verify " + f + " --checks bass_bounds").out);
    EXPECT_EQ(def["field"], "prime 32003");
    auto env = nlohmann::json::parse(run("verify " + f + " --checks bass_bounds", "HALG_FIELD=rational").out);
    EXPECT_EQ(env["field"], "rational");
    auto flag = nlohmann::json::parse(run("verify " + f + " --checks bass_bounds --field 'prime 101'", "HALG_FIELD=rational").out);
    EXPECT_EQ(flag["field"], "prime 101");
    EXPECT_EQ(run("verify " + f + " --field 'prime 100'").code, 2);
    auto bound = nlohmann::json::parse(run("verify " + f + " --checks bass_bounds --bound 3").out);
    EXPECT_EQ(bound["bound"], 3);
    EXPECT_EQ(bound["entries"][0]["window"][1], 3);
}

TEST_F(Cli, MarkdownAndOutputFile)
{
    const auto out = (dir / "report.md").string();
    auto r = run("verify " + std::string(HALG_CORPUS_DIR) + "/ci2.halg --format markdown --output " + out);
    EXPECT_EQ(r.code, 0);
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NE(text.find("| module | depth | dim | betti | bass |"), std::string::npos);
    EXPECT_NE(text.find("| ci2/k |"), std::string::npos);
}

TEST_F(Cli, DeficiencyAndOracle)
{
    auto d = run("deficiency " + std::string(HALG_CORPUS_DIR) + "/gcm.halg --module ring");
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("K^0: generators in degrees -1"), std::string::npos) << d.out;
    EXPECT_NE(d.out.find("K^2 = 0"), std::string::npos);
    EXPECT_EQ(run("deficiency " + std::string(HALG_CORPUS_DIR) + "/gcm.halg --module nope").code, 2);
    auto o = run("oracle " + std::string(HALG_CORPUS_DIR) + "/gcm.halg");
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(nlohmann::json::parse(o.out)["summary"]["fail"], 0);
}

TEST_F(Cli, ParallelMergeIsDeterministic)
{
    auto a = run("verify " + std::string(HALG_CORPUS_DIR) + " --jobs 1");
    auto b = run("verify " + std::string(HALG_CORPUS_DIR) + " --jobs 3");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
