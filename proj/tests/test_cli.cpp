#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

using json = nlohmann::json;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(const std::string& args) {
    static int counter = 0;
    const std::string err_path =
        ::testing::TempDir() + "ecdga_cli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".txt";
    const std::string cmd = std::string(ECDGA_CLI) + " " + args + " 2>" + err_path;
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(err_path);
    r.err.assign(std::istreambuf_iterator<char>(in), {});
    std::remove(err_path.c_str());
    return r;
}

json run_json(const std::string& args) {
    auto r = run(args + " --format json");
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out);
}

// stderr must be exactly one JSON line naming the error.
void expect_error(const Run& r, int code, const std::string& kind) {
    EXPECT_EQ(r.code, code) << r.out << r.err;
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
    auto e = json::parse(r.err);
    EXPECT_EQ(e["error"], kind);
    EXPECT_EQ(e["exit_code"], code);
}

}  // namespace

TEST(CliOrbits, C2669) {
    auto j = run_json("orbits --q 13 --group C2669");
    EXPECT_EQ(j["l"], 12);
    std::map<int, int> t;
    for (const auto& row : j["by_element_order"]) t[row["element_order"]] = row["t"];
    EXPECT_EQ(t[17], 4);
    EXPECT_EQ(t[157], 6);
    EXPECT_EQ(t[2669], 12);
}

TEST(CliOrbits, C176) {
    auto j = run_json("orbits --q 25 --group C176");
    EXPECT_EQ(j["l"], 10);
    const auto& h = j["histogram"];
    EXPECT_TRUE(h.contains("2"));
    EXPECT_TRUE(h.contains("5"));
    EXPECT_TRUE(h.contains("10"));
}

TEST(CliOrbits, TrivialAction) {
    auto j = run_json("orbits --q 3 --group C2");
    EXPECT_EQ(j["l"], 1);
    EXPECT_EQ(j["histogram"], json({{"1", 2}}));
}

TEST(CliClassify, Examples) {
    auto a = run_json("classify --q 25 --group 11x11");
    EXPECT_EQ(a["minimal_ecd"], true);
    EXPECT_EQ(a["totient_condition"], false);
    auto b = run_json("classify --q 5^6 --group 2x16x9x3");
    EXPECT_EQ(b["minimal_ecd"], true);
    EXPECT_EQ(b["splitting_degree_condition"], true);
    auto c = run_json("classify --q 4 --group C3");
    EXPECT_EQ(c["ecd_algebra"], true);
    auto d = run_json("classify --q 5^6 --group 8x8x16x9 --t 4");
    EXPECT_EQ(d["splitting_degree"], 4);
    EXPECT_EQ(d["splitting_degree_condition"], true);
}

TEST(CliIdempotents, Examples) {
    auto a = run_json("idempotents --q 2 --group C3");
    ASSERT_EQ(a["idempotents"].size(), 2u);
    EXPECT_EQ(a["idempotents"][0]["dimension"], 1);
    EXPECT_EQ(a["idempotents"][1]["dimension"], 2);
    EXPECT_EQ(a["idempotents"][1]["idempotent"]["coeffs"], json::parse("[[0],[1],[1]]"));
    EXPECT_EQ(a["idempotents"][1]["idempotent"]["group"], "C3");
    auto b = run_json("idempotents --q 3 --group C4");
    std::vector<int> dims;
    for (const auto& i : b["idempotents"]) {
        dims.push_back(i["dimension"]);
        EXPECT_EQ(i["oracle_verified"], true);
    }
    std::sort(dims.begin(), dims.end());
    EXPECT_EQ(dims, (std::vector<int>{1, 1, 2}));
    auto c = run_json("idempotents --q 9 --group 2x20");
    EXPECT_EQ(c["dimension_sum"], 40);
}

TEST(CliConstruct, Examples) {
    auto a = run_json("construct --p 5 --alpha 6 --t 4 --max-order 3000");
    bool found = false;
    for (const auto& g : a["groups"]) {
        if (g["exponent"] == 144) found = true;
        EXPECT_EQ(g["certificate"]["divides"], "q^t-1");
        EXPECT_EQ(g["certificate"]["condition"], "corollary-splitting-degree");
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(a["factorization"], "2^5 * 3^2 * 7 * 13 * 31 * 313 * 601 * 390001");
    auto b = run_json("construct --p 3 --alpha 1 --t 1");
    ASSERT_FALSE(b["groups"].empty());
    EXPECT_EQ(b["groups"][0]["group"], "C2");
    for (const auto& g : b["groups"]) EXPECT_EQ(g["exponent"], 2);
    expect_error(run("construct --p 5 --alpha 1 --t 6"), 2, "InvalidRequest");
}

TEST(CliCriteria, SingleRowAndJson) {
    auto j = run_json("paper-examples --criterion 2");
    ASSERT_EQ(j["results"].size(), 1u);
    EXPECT_EQ(j["results"][0]["criterion"], 2);
    EXPECT_EQ(j["results"][0]["passed"], true);
    auto t = run("paper-examples --criterion 1");
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("PASS"), std::string::npos);
    expect_error(run("paper-examples --criterion 12"), 2, "InvalidRequest");
}

TEST(CliErrors, ExitCodesAndDiagnostics) {
    expect_error(run("orbits --q 5 --group C10"), 2, "NotSemisimple");
    expect_error(run("orbits --q 12 --group C5"), 2, "InvalidField");
    expect_error(run("orbits --q 3 --group 2y3"), 1, "ParseError");
    expect_error(run("orbits --q 3"), 1, "UsageError");
    expect_error(run("frobnicate"), 1, "UsageError");
    expect_error(run("orbits --q 3 --group C2 --format xml"), 1, "UsageError");
    expect_error(run("orbits --q 7 --group 1000x1000 --enum-cap 1000"), 3, "GroupTooLarge");
    expect_error(run("idempotents --q 2 --group C15 --rank-cap 10"), 3, "GroupTooLarge");
    expect_error(run("construct --p 7 --alpha 6 --t 7 --rho-cap 1"), 3, "FactorizationBudgetExceeded");
}

TEST(CliDeterminism, ByteIdenticalOutput) {
    for (const char* args : {"idempotents --q 25 --group 2x12 --seed 5 --format json",
                             "orbits --q 13 --group 7x7 --format csv", "construct --p 7 --t 2 --format table",
                             "classify --q 49 --group 8x8"}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args << a.err;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(CliFormats, CsvAndTable) {
    auto csv = run("orbits --q 2 --group C7 --format csv");
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "element_order,t,elements,orbits,example");
    auto table = run("classify --q 25 --group 11x11");
    EXPECT_NE(table.out.find("minimal_ecd"), std::string::npos);
    EXPECT_NE(table.out.find("true"), std::string::npos);
}
