#include "strichartz/cli.hpp"
#include "strichartz/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace strichartz;

TEST_CASE("config parsing and validation", "[cli]") {
    RunConfig def;
    CHECK(def.format == "json");
    CHECK(def.max_s == 8);

    RunConfig c = RunConfig::from_json_text(
        R"({"max_s": 4, "max_n": 5, "format": "csv", "jobs": 2, "tol_flow": 1e-7})");
    CHECK(c.max_s == 4);
    CHECK(c.max_n == 5);
    CHECK(c.format == "csv");
    CHECK(c.jobs == 2);
    CHECK(c.tol_flow == 1e-7);

    CHECK_THROWS_AS(RunConfig::from_json_text("{not json"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"format": "xml"})"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"jobs": 0})"), ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text(R"({"tol_norm": -1.0})"), ConfigError);

    // round trip through the echo
    RunConfig echoed = RunConfig::from_json_text(c.to_json().dump());
    CHECK(echoed.max_s == c.max_s);
    CHECK(echoed.format == c.format);
}

TEST_CASE("qtable subcommand emits exact tables and passes", "[cli]") {
    RunConfig cfg;
    cfg.max_s = 3;
    cfg.format = "csv";
    std::ostringstream out, diag;
    int code = cli::run_subcommand("qtable", cfg, out, diag);
    CHECK(code == 0);
    std::string payload = out.str();
    CHECK(payload.rfind("S,a,c,value,value_decimal,row_sum\n", 0) == 0);
    CHECK(payload.find("0,0,0,1,1,1") != std::string::npos);
    CHECK(payload.find("1,0,0,1/2,0.5,1") != std::string::npos);
    // deterministic byte-for-byte
    std::ostringstream out2, diag2;
    cli::run_subcommand("qtable", cfg, out2, diag2);
    CHECK(out.str() == out2.str());
}

TEST_CASE("words-check subcommand grid", "[cli]") {
    RunConfig cfg;
    cfg.max_n = 4;
    cfg.format = "csv";
    std::ostringstream out, diag;
    int code = cli::run_subcommand("words-check", cfg, out, diag);
    CHECK(code == 0);
    std::string payload = out.str();
    CHECK(payload.rfind("a,b,c,d,signed_count,q_value,matches_integral\n", 0) == 0);
    CHECK(payload.find("1,0,1,0,2,1/2,true") != std::string::npos);
    CHECK(payload.find("false") == std::string::npos);
}

TEST_CASE("report-all json schema and parallel determinism", "[cli]") {
    RunConfig cfg;
    cfg.max_s = 2;
    cfg.max_n = 3;
    cfg.suites = {"qtable", "words-check", "funk-hecke"};
    std::ostringstream out1, diag1;
    int code = cli::run_subcommand("report-all", cfg, out1, diag1);
    CHECK(code == 0);
    nlohmann::json j = nlohmann::json::parse(out1.str());
    CHECK(j["version"] == kToolkitVersion);
    CHECK(j.contains("config_echo"));
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"].get<std::size_t>() == j["checks"].size());
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("inputs"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("actual"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("wall_time"));
    }

    // ids are sorted and identical under a parallel run
    RunConfig par = cfg;
    par.jobs = 4;
    std::ostringstream out2, diag2;
    CHECK(cli::run_subcommand("report-all", par, out2, diag2) == 0);
    auto ids = [](const nlohmann::json& r) {
        std::vector<std::string> v;
        for (const auto& c : r["checks"]) v.push_back(c["id"].get<std::string>());
        return v;
    };
    nlohmann::json j2 = nlohmann::json::parse(out2.str());
    std::vector<std::string> serial_ids = ids(j);
    CHECK(serial_ids == ids(j2));
    CHECK(std::is_sorted(serial_ids.begin(), serial_ids.end()));
}

TEST_CASE("exit codes for caps and unknown suites", "[cli]") {
    RunConfig cfg;
    cfg.max_n = 12;    // needs > 10^5 words per tuple at the top; fine
    cfg.word_cap = 10;  // force the enumeration cap
    std::ostringstream out, diag;
    CHECK(cli::run_subcommand("words-check", cfg, out, diag) == 3);

    RunConfig cfg2;
    cfg2.sector_cap = 2;  // every nontrivial hermite sector now exceeds the cap
    std::ostringstream out2, diag2;
    CHECK(cli::run_subcommand("hermite-proj", cfg2, out2, diag2) == 3);

    std::ostringstream out3, diag3;
    RunConfig cfg3;
    cfg3.suites = {"no-such-suite"};
    CHECK(cli::run_subcommand("report-all", cfg3, out3, diag3) == 2);
}

TEST_CASE("polynomial json round trip", "[cli]") {
    Poly p = laguerre(4, Rational(1, 2));
    nlohmann::json j = cli::poly_to_json(p);
    CHECK(j.is_array());
    CHECK(j.size() == 5);
    CHECK(cli::poly_from_json(j) == p);
    CHECK(cli::poly_to_json(Poly::constant(Rational(-7, 3)))[0] == "-7/3");
}

TEST_CASE("hermite matrix export", "[cli]") {
    RunConfig cfg;
    cfg.max_s = 2;
    std::ostringstream out, diag;
    CHECK(cli::run_subcommand("hermite-proj", cfg, out, diag) == 0);
    nlohmann::json j = nlohmann::json::parse(out.str());
    REQUIRE(j.contains("sectors"));
    bool found = false;
    for (const auto& sec : j["sectors"]) {
        if (sec["k"] == 3 && sec["S"] == 0) {
            CHECK(sec["entries"][0][0] == "1");
            CHECK(sec["weights"][0] == "1");
            found = true;
        }
    }
    CHECK(found);

    RunConfig csv = cfg;
    csv.format = "csv";
    std::ostringstream out2, diag2;
    CHECK(cli::run_subcommand("hermite-proj", csv, out2, diag2) == 0);
    CHECK(out2.str().rfind("k,l,d,S,i,j,value,value_decimal,exact\n", 0) == 0);
}

TEST_CASE("qtable json carries exact and decimal entries", "[cli]") {
    RunConfig cfg;
    cfg.max_s = 1;
    std::ostringstream out, diag;
    CHECK(cli::run_subcommand("qtable", cfg, out, diag) == 0);
    nlohmann::json j = nlohmann::json::parse(out.str());
    CHECK(j["sectors"][1]["entries"][0][0] == "1/2");
    CHECK(j["sectors"][1]["entries_decimal"][0][0] == 0.5);
    CHECK(j["sectors"][1]["row_sums"][0] == "1");
}

TEST_CASE("check record formatting", "[cli]") {
    CheckRecord exact = cli::make_exact_check("x", "inp", Rational(1, 3), Rational(1, 3));
    CHECK(exact.pass);
    CHECK(exact.exact);
    CHECK(exact.expected == "1/3");

    CheckRecord miss = cli::make_exact_check("x", "inp", Rational(0), Rational(1, 1000000));
    CHECK_FALSE(miss.pass);

    CheckRecord f = cli::make_float_check("y", "inp", 1.0, 1.0 + 5e-9, 1e-8);
    CHECK(f.pass);
    CheckRecord f2 = cli::make_float_check("y", "inp", 1.0, 1.0 + 5e-8, 1e-8);
    CHECK_FALSE(f2.pass);
}
