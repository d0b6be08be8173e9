#pragma once

// Run configuration, check records, and report assembly for the command-line
// front end.  Checks execute on a small worker pool; report assembly is
// single-threaded and ordered by check id, so output is deterministic for a
// fixed configuration (wall times are informational only).

#include "strichartz/rational.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace strichartz {

inline constexpr const char* kToolkitVersion = "1.0.0";

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    // resource caps
    std::size_t sector_cap = 20000;
    unsigned laguerre_cap = 40;
    std::uint64_t word_cap = 10'000'000;
    // grid extents
    unsigned max_s = 8;   // sector sweeps (qtable, hermite suites)
    unsigned max_n = 8;   // words grid
    // tolerances per check family
    double tol_norm = 1e-8;
    double tol_spectrum = 1e-10;
    double tol_flow = 1e-6;
    double tol_sharp = 1e-6;
    double tol_equivalence = 1e-5;
    double tol_funk_hecke = 1e-10;
    double tol_weighted = 1e-5;
    double tol_parseval = 1e-10;
    // output
    std::string format = "json";  // "json" | "csv"
    std::string out_path;         // empty -> stdout
    unsigned jobs = 1;
    std::vector<std::string> suites;  // empty -> all (report-all)

    void validate() const {
        if (sector_cap == 0 || laguerre_cap == 0 || word_cap == 0)
            throw ConfigError("caps must be positive");
        for (double tol : {tol_norm, tol_spectrum, tol_flow, tol_sharp, tol_equivalence,
                           tol_funk_hecke, tol_weighted, tol_parseval})
            if (!(tol > 0)) throw ConfigError("tolerances must be positive");
        if (format != "json" && format != "csv")
            throw ConfigError("format must be json or csv");
        if (jobs == 0) throw ConfigError("jobs must be positive");
    }

    static RunConfig from_json_text(const std::string& text) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
        RunConfig c;
        try {
            c.sector_cap = j.value("sector_cap", c.sector_cap);
            c.laguerre_cap = j.value("laguerre_cap", c.laguerre_cap);
            c.word_cap = j.value("word_cap", c.word_cap);
            c.max_s = j.value("max_s", c.max_s);
            c.max_n = j.value("max_n", c.max_n);
            c.tol_norm = j.value("tol_norm", c.tol_norm);
            c.tol_spectrum = j.value("tol_spectrum", c.tol_spectrum);
            c.tol_flow = j.value("tol_flow", c.tol_flow);
            c.tol_sharp = j.value("tol_sharp", c.tol_sharp);
            c.tol_equivalence = j.value("tol_equivalence", c.tol_equivalence);
            c.tol_funk_hecke = j.value("tol_funk_hecke", c.tol_funk_hecke);
            c.tol_weighted = j.value("tol_weighted", c.tol_weighted);
            c.tol_parseval = j.value("tol_parseval", c.tol_parseval);
            c.format = j.value("format", c.format);
            c.out_path = j.value("out", c.out_path);
            c.jobs = j.value("jobs", c.jobs);
            if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("config field error: ") + e.what());
        }
        c.validate();
        return c;
    }

    nlohmann::json to_json() const {
        return nlohmann::json{{"sector_cap", sector_cap},
                              {"laguerre_cap", laguerre_cap},
                              {"word_cap", word_cap},
                              {"max_s", max_s},
                              {"max_n", max_n},
                              {"tol_norm", tol_norm},
                              {"tol_spectrum", tol_spectrum},
                              {"tol_flow", tol_flow},
                              {"tol_sharp", tol_sharp},
                              {"tol_equivalence", tol_equivalence},
                              {"tol_funk_hecke", tol_funk_hecke},
                              {"tol_weighted", tol_weighted},
                              {"tol_parseval", tol_parseval},
                              {"format", format},
                              {"out", out_path},
                              {"jobs", jobs},
                              {"suites", suites}};
    }
};

/// One verification record.  `exact` marks zero-tolerance rational checks.
struct CheckRecord {
    std::string id;
    std::string inputs;
    std::string expected;
    std::string actual;
    double tolerance = 0.0;
    bool exact = false;
    bool pass = false;
    double wall_time = 0.0;  // seconds, informational
};

inline std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

struct Report {
    nlohmann::json config_echo;
    std::vector<CheckRecord> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        std::size_t passed = 0;
        for (const auto& c : checks) {
            arr.push_back({{"id", c.id},
                           {"inputs", c.inputs},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"tolerance", c.tolerance},
                           {"exact", c.exact},
                           {"pass", c.pass},
                           {"wall_time", c.wall_time}});
            passed += c.pass ? 1 : 0;
        }
        return nlohmann::json{{"version", kToolkitVersion},
                              {"config_echo", config_echo},
                              {"checks", arr},
                              {"summary",
                               {{"total", checks.size()},
                                {"passed", passed},
                                {"failed", checks.size() - passed}}}};
    }

    std::string to_csv() const {
        std::ostringstream os;
        os << "id,inputs,expected,actual,tolerance,exact,pass,wall_time\n";
        for (const auto& c : checks) {
            os << c.id << ',' << '"' << c.inputs << '"' << ',' << c.expected << ','
               << c.actual << ',' << format_double(c.tolerance) << ','
               << (c.exact ? "true" : "false") << ',' << (c.pass ? "true" : "false") << ','
               << format_double(c.wall_time) << '\n';
        }
        return os.str();
    }
};

/// Runs independent check tasks on `jobs` workers; the result order is the
/// submission order regardless of scheduling.
inline std::vector<CheckRecord> run_checks(
    const std::vector<std::function<CheckRecord()>>& tasks, unsigned jobs) {
    std::vector<CheckRecord> results(tasks.size());
    if (tasks.empty()) return results;
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            auto start = std::chrono::steady_clock::now();
            results[i] = tasks[i]();
            results[i].wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            auto start = std::chrono::steady_clock::now();
            results[i] = tasks[i]();
            results[i].wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace strichartz
