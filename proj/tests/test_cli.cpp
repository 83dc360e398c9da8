#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using cfk::cli::run_command;
namespace fs = std::filesystem;

namespace {
struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kCbrt2 = R"({"kind":"nthroot","radicand":2,"degree":3})";
} // namespace

TEST_CASE("expand emits the exact prefix as JSON") {
    auto r = cli({"expand", "--number", kCbrt2, "--terms", "10", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("meta"));
    REQUIRE(j.contains("rows"));
    auto& row = j["rows"][0];
    CHECK(row["b0"] == "1");
    std::vector<std::string> want{"3", "1", "5", "1", "1", "4", "1", "1", "8"};
    CHECK(row["coeffs"].get<std::vector<std::string>>() == want);
    CHECK(row["certified_len"] == 9);
}

TEST_CASE("expand csv lists n,b rows") {
    auto r = cli({"expand", "--number", kCbrt2, "--terms", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("n,b\n0,1\n1,3\n2,1\n3,5\n") != std::string::npos);
    CHECK(r.out.find("# tool: cfk") == 0);
}

TEST_CASE("usage errors exit 1") {
    CHECK(cli({"expand", "--number", kCbrt2, "--terms", "0"}).code == 1);
    CHECK(cli({"expand", "--no-such-flag"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    auto r = cli({"expand", "--terms", "5"}); // no number at all
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("certification failures exit 2") {
    // 8 = 2^3: rational root
    auto r = cli({"expand", "--number", R"({"kind":"nthroot","radicand":8,"degree":3})",
                  "--terms", "5"});
    CHECK(r.code == 2);
    CHECK(r.err.find("rational") != std::string::npos);
    // interval with two roots
    auto amb = cli({"expand", "--number",
                    R"({"kind":"poly","coeffs":[-2,0,1],"interval":["-2","2"]})", "--terms", "5"});
    CHECK(amb.code == 2);
}

TEST_CASE("kc subcommand") {
    auto one = cli({"kc", "--maxn", "1"});
    CHECK(one.code == 0);
    CHECK(one.out == "1.000000\n");
    auto k0 = cli({"kc", "--tolerance", "0.001"});
    CHECK(k0.code == 0);
    CHECK(k0.out.substr(0, 5) == "2.684"); // 2.6845...-ish below 2.6855
    CHECK(cli({"kc"}).code == 1);
}

TEST_CASE("analyze reruns are byte-identical") {
    std::vector<std::string> args{"analyze", "--number", kCbrt2, "--terms", "301"};
    auto a = cli(args);
    auto b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("number,n,kld_gk,kld_trunc,chi2,p,gmean,amean,k_of_a,k_argmax,bailey_c\n") !=
          std::string::npos);
    CHECK(a.out.find("2^(1/3),300,") != std::string::npos);
}

TEST_CASE("poly number spec with exact decimal interval") {
    auto r = cli({"analyze", "--number",
                  R"({"kind":"poly","coeffs":[-1,-1,1],"interval":["1.5","1.7"]})", "--terms",
                  "101", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["number"] == "x^2-x-1[3/2..17/10]");
    CHECK(j["rows"][0]["amean"] == 1.0); // golden ratio: all ones
}

TEST_CASE("speed bucket counts sum to the requested count") {
    auto r = cli({"speed", "--number", kCbrt2, "--count", "60", "--metric", "khinchin",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::uint64_t total = 0;
    for (const auto& row : j["rows"]) total += row["khinchin"].get<std::uint64_t>();
    CHECK(total == 60);
    CHECK(j["meta"]["log_base"] == "e");
}

TEST_CASE("rn reports the count above one") {
    auto r = cli({"rn", "--number", kCbrt2, "--from", "1", "--to", "50", "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 50);
    CHECK(j["meta"].contains("count_above_one"));
}

TEST_CASE("random subcommand embeds seeds and generator") {
    auto r = cli({"random", "--seed", "5", "--digits", "200", "--count", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# generator: mt19937_64-rej10/1\n") != std::string::npos);
    CHECK(r.out.find("# seed: 5\n") != std::string::npos);
    CHECK(r.out.find("\n5,") != std::string::npos);
    CHECK(r.out.find("\n6,") != std::string::npos);
    auto again = cli({"random", "--seed", "5", "--digits", "200", "--count", "2"});
    CHECK(again.out == r.out);
}

TEST_CASE("config file provides defaults, flags override") {
    fs::path cfg = fs::temp_directory_path() / "cfk_test_config.json";
    {
        std::ofstream f(cfg);
        f << R"({"numbers":[{"kind":"nthroot","radicand":2,"degree":3}],"terms":51,)"
          << R"("format":"json"})";
    }
    auto r = cli({"analyze", "--config", cfg.string()});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["n"] == 50);

    // flag wins over config
    auto r2 = cli({"analyze", "--config", cfg.string(), "--terms", "21"});
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["rows"][0]["n"] == 20);
    fs::remove(cfg);
}

TEST_CASE("interval-mode expand certifies a shared prefix") {
    auto r = cli({"expand", "--interval-lo", "1.41", "--interval-hi", "1.42", "--terms", "100",
                  "--format", "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["b0"] == "1");
    std::vector<std::string> want{"2", "2"};
    CHECK(j["rows"][0]["coeffs"].get<std::vector<std::string>>() == want);
}

TEST_CASE("env var sets the default log base") {
    setenv("KHINCHIN_LOG_BASE", "2", 1);
    auto r = cli({"rn", "--number", kCbrt2, "--from", "1", "--to", "10", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["meta"]["log_base"] == "2");
    // explicit flag still wins
    auto r2 = cli({"rn", "--number", kCbrt2, "--from", "1", "--to", "10", "--log-base", "e",
                   "--format", "json"});
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["meta"]["log_base"] == "e");
    unsetenv("KHINCHIN_LOG_BASE");
}

TEST_CASE("reproduce table 2 writes computed and diff artifacts") {
    fs::path dir = fs::temp_directory_path() / "cfk_test_repro";
    fs::remove_all(dir);
    auto r = cli({"reproduce", "--table", "2", "--out", dir.string()});
    REQUIRE(r.code == 0);
    std::ifstream comp(dir / "computed_table2.csv");
    REQUIRE(comp.good());
    std::stringstream cs;
    cs << comp.rdbuf();
    CHECK(cs.str().find("number,kld\n2^(1/3),0.0955\n") != std::string::npos);
    std::ifstream diff(dir / "diff_table2.csv");
    REQUIRE(diff.good());
    std::stringstream ds;
    ds << diff.rdbuf();
    CHECK(ds.str().find("label,field,published,computed,abs_diff,note") != std::string::npos);
    CHECK(ds.str().find("2^(1/3),kld,0.0955,") != std::string::npos);
    fs::remove_all(dir);
}
