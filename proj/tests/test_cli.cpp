#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "ntlab/catalog.hpp"
#include "ntlab/cli.hpp"
#include "ntlab/io.hpp"

using namespace ntlab;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() : dir(std::filesystem::temp_directory_path() / ("ntlab_cli_" + std::to_string(::getpid()))) {
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

} // namespace

TEST_CASE("construct then analyze the golay code") {
    TempDir tmp;
    const auto g24 = tmp / "g24.code";
    REQUIRE(run({"construct", "golay24", "-o", g24}).code == 0);
    const auto r = run({"analyze", g24, "--weights"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "W[8] = 759\n"));
    CHECK(contains(r.out, "delta = 8\n"));
    CHECK(source_line(g24).find("construct golay24") != std::string::npos);
}

TEST_CASE("check-2nt with the Mathieu group") {
    TempDir tmp;
    REQUIRE(run({"construct", "golay24", "-o", tmp / "g24.code"}).code == 0);
    REQUIRE(run({"construct", "golay24", "--group", "-o", tmp / "m24.perm"}).code == 0);
    const auto r = run({"check-2nt", tmp / "g24.code", tmp / "m24.perm"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "VERDICT = PASS\n"));
}

TEST_CASE("check-2nt fails on a perfect code") {
    TempDir tmp;
    REQUIRE(run({"construct", "hamming", "--t", "4", "-o", tmp / "h.code"}).code == 0);
    REQUIRE(run({"construct", "hamming", "--t", "4", "--group", "-o", tmp / "h.perm"}).code == 0);
    const auto r = run({"check-2nt", tmp / "h.code", tmp / "h.perm", "--oracle"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "reason = perfect-delta3"));
    CHECK(contains(r.out, "agreement = true"));
    CHECK(contains(r.out, "VERDICT = FAIL\n"));
}

TEST_CASE("verify-table summary line") {
    const auto r = run({"verify-table", "--line", "2", "--t", "4", "--summary"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 t=4 16 5 8 PASS\n");
    const auto again = run({"verify-table", "--line", "2", "--t", "4", "--summary"});
    CHECK(again.out == r.out);
}

TEST_CASE("full verification report") {
    const auto r = run({"verify-table", "--line", "13"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "---\n"));
    CHECK(contains(r.out, "delta = 8\n"));
    CHECK(r.out.substr(r.out.size() - 15) == "VERDICT = PASS\n");
}

TEST_CASE("round trip of every native family") {
    TempDir tmp;
    const std::vector<std::vector<std::string>> builds = {
        {"repetition", "--m", "7"}, {"even_weight", "--m", "7"}, {"rm1", "--t", "4"},
        {"hamming", "--t", "3"},    {"pg_hyperplane", "--t", "3", "--k", "2"}, {"pg_complement", "--t", "4"},
        {"qr", "--r", "17"},        {"eqr", "--r", "23"},                      {"golay23"},
        {"golay23_even"},           {"m22_code"},                              {"hadamard12"},
        {"punct_hadamard11"},       {"punct_hadamard11_even"},                 {"sp_quadric", "--type", "plus"},
        {"hermitian_unital_code"}};
    for (const auto& b : builds) {
        CAPTURE(b[0]);
        auto args = std::vector<std::string>{"construct"};
        args.insert(args.end(), b.begin(), b.end());
        args.push_back("-o");
        args.push_back(tmp / (b[0] + ".code"));
        REQUIRE(run(args).code == 0);
        FamilyParams p;
        for (std::size_t i = 1; i + 1 < b.size(); i += 2) {
            if (b[i] == "--m") p.m = std::stoul(b[i + 1]);
            if (b[i] == "--t") p.t = std::stoul(b[i + 1]);
            if (b[i] == "--k") p.k = std::stoul(b[i + 1]);
            if (b[i] == "--r") p.r = std::stoul(b[i + 1]);
            if (b[i] == "--type") p.type = b[i + 1];
        }
        CHECK(read_code_file(tmp / (b[0] + ".code")) == construct_code(b[0], p));
    }
}

TEST_CASE("design subcommand") {
    TempDir tmp;
    REQUIRE(run({"construct", "golay24", "-o", tmp / "g.code"}).code == 0);
    const auto r = run({"design", tmp / "g.code", "--weight", "8"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lambda = 77\n"));
    CHECK(contains(r.out, "r = 253\n"));
    const auto five = run({"design", tmp / "g.code", "--weight", "8", "--t", "5"});
    CHECK(contains(five.out, "lambda = 1\n"));
}

TEST_CASE("spin subcommand") {
    TempDir tmp;
    REQUIRE(run({"construct", "hamming", "--t", "3", "--group", "-o", tmp / "p.perm"}).code == 0);
    const auto r = run({"spin", tmp / "p.perm", "--seed", "1101000"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "dimension = "));
    const auto bad = run({"spin", tmp / "p.perm", "--seed", "11"});
    CHECK(bad.code == 2);
}

TEST_CASE("submodules reports its seed") {
    TempDir tmp;
    REQUIRE(run({"construct", "rm1", "--t", "3", "--group", "-o", tmp / "a.perm"}).code == 0);
    const auto r = run({"submodules", tmp / "a.perm", "--seed", "17"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "seed = 17\n"));
}

TEST_CASE("usage and parse errors exit with 2") {
    TempDir tmp;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"census", "--bogus"}).code == 2);
    CHECK(run({"analyze", tmp / "missing.code"}).code == 2);
    {
        std::ofstream f(tmp / "bad.code");
        f << "# comment\nLINEAR 4 2\n1100\n11x0\n";
    }
    const auto r = run({"analyze", tmp / "bad.code"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "line 4"));
    CHECK(run({"construct", "qr", "--r", "13", "-o", tmp / "q.code"}).code == 2);
    CHECK(run({"verify-table", "--line", "16"}).code == 2);
}
