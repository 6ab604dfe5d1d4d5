#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(WICKETLAB_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expected = 0) {
    const auto r = run(args);
    EXPECT_EQ(r.code, expected) << args << "\n" << r.out;
    return json::parse(r.out);
}

fs::path scratch(const std::string& name, const std::string& contents) {
    const auto dir = fs::temp_directory_path() / "wicketlab_cli_test";
    fs::create_directories(dir);
    const auto p = dir / name;
    std::ofstream(p) << contents;
    return p;
}

std::size_t count_lines(const fs::path& p) {
    std::ifstream in(p);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) ++n;
    return n;
}

}  // namespace

TEST(Cli, BoundsText) {
    const auto r = run("bounds exponent --base 2.2202");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1.5445"), std::string::npos) << r.out;
    const auto c = run_json("--format json bounds corollary --c 0.31");
    EXPECT_NEAR(c["base"].get<double>(), 2.7477, 5e-4);
    EXPECT_TRUE(c["improvement"].get<bool>());
    EXPECT_EQ(run("bounds exponent --base 0.5").code, 1);
}

TEST(Cli, CapCommands) {
    const auto good = scratch("good.cap", "00\n01\n10\n11\n");
    EXPECT_EQ(run("cap verify " + good.string()).code, 0);
    const auto bad = scratch("bad.cap", "00\n01\n02\n");
    const auto r = run("--format json cap verify " + bad.string());
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.out)["witness"], (json{"00", "01", "02"}));
    EXPECT_EQ(run("cap verify " + scratch("junk.cap", "00\n0x\n").string()).code, 1);
    EXPECT_EQ(run("cap verify /nonexistent/file.cap").code, 1);

    const auto out = fs::temp_directory_path() / "wicketlab_cli_test" / "max3.cap";
    const auto m = run_json("--format json cap max --n 3 --out " + out.string());
    EXPECT_EQ(m["size"], 9);
    EXPECT_EQ(run("cap verify " + out.string()).code, 0);
    const auto p = run_json("--format json cap product " + good.string() + " " + good.string());
    EXPECT_EQ(p["size"], 16);
}

TEST(Cli, BuildReports) {
    const auto two = scratch("two.cap", "0\n1\n");
    const auto f3 = run_json("build f3 --cap " + two.string());
    for (const char* key : {"construction", "n", "set_size", "vertices", "edges", "linear", "wickets",
                            "max_dependency_degree", "sixthree", "k", "seed", "selected_edges", "exponent"})
        EXPECT_TRUE(f3.contains(key)) << key;
    EXPECT_EQ(f3["edges"], 6);
    EXPECT_EQ(f3["wickets"], 6);
    EXPECT_EQ(f3["sixthree"], 0);
    EXPECT_EQ(f3["max_dependency_degree"], 5);

    const auto residues = scratch("s.txt", "0\n1\n4\n");
    const auto mod = run_json("build modular --k 3 --set " + residues.string());
    EXPECT_EQ(mod["n"], 7);
    EXPECT_GT(mod["wickets"].get<int>(), 0);
    EXPECT_EQ(run("build modular --k 3 --n 8 --set " + residues.string()).code, 1);

    const auto origin = scratch("origin.txt", "0,0\n");
    const auto eis = run_json("build eisenstein --bound 2 --set " + origin.string());
    EXPECT_EQ(eis["wickets"], 0);
}

TEST(Cli, ColorExitCodes) {
    const auto grid = scratch("grid.tlh", "p tlh 3 3 3 6\n0 0 0\n1 1 1\n2 2 2\n0 1 2\n1 2 0\n2 0 1\n");
    const auto ok = run_json("color --hypergraph " + grid.string());
    EXPECT_TRUE(ok["selected_wicket_free"].get<bool>());

    bool exhausted = false;
    for (int seed = 0; seed < 32 && !exhausted; ++seed) {
        const auto r = run("--seed " + std::to_string(seed) + " color --hypergraph " + grid.string() +
                           " --k 2 --max-resamples 0 --attempts 1");
        if (r.code == 3) {
            exhausted = true;
            const auto j = json::parse(r.out);
            EXPECT_EQ(j["error"], "budget exhausted");
            EXPECT_EQ(j["wickets"], 6);
        } else {
            EXPECT_EQ(r.code, 0);
        }
    }
    EXPECT_TRUE(exhausted);
}

TEST(Cli, DeterministicOutput) {
    const auto four = scratch("four.cap", "00\n01\n10\n11\n");
    for (const std::string args : {"--seed 7 build f3 --cap " + four.string(), std::string("--seed 3 search eq1 --n 40"),
                                   std::string("claim1 --minimality --audit")}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, SearchAndClaim) {
    const auto s = run_json("search eq2 --k 3");
    EXPECT_EQ(s["size"], 3);
    EXPECT_TRUE(s["optimal"].get<bool>());
    const auto t = run_json("search triangle --bound 2 --norm paper");
    EXPECT_EQ(t["size"], 5);

    const auto csv = fs::temp_directory_path() / "wicketlab_cli_test" / "claim.csv";
    const auto c = run_json("claim1 --minimality --csv " + csv.string());
    EXPECT_EQ(c["candidates"], 80730);
    EXPECT_EQ(c["counterexamples"].size(), 0u);
    EXPECT_TRUE(c["verified"].get<bool>());
    EXPECT_TRUE(c["minimality"].contains("witness"));
    EXPECT_EQ(count_lines(csv), 80731u);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "index,e1,e2,e3,e4,e5,linear,wicket,sixthree,covered");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("no-such-command").code, 1);
    EXPECT_EQ(run("search eq1").code, 1);
}
