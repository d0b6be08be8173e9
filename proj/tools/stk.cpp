// stk: batch verification front end for the sharp-estimate toolkit.
//
// Subcommands run one check family each (or report-all for the full battery),
// write their payload/report to --out (default stdout) in --format json|csv,
// and exit 0 only if every check passed (1 = check failure, 2 = bad
// config/usage, 3 = resource cap exceeded).

#include "strichartz/cli.hpp"
#include "strichartz/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace strichartz;

int main(int argc, char** argv) {
    CLI::App app{"Sharp Schrodinger/Strichartz orthogonal-polynomial toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    unsigned jobs = 0;
    unsigned max_s = 0, max_n = 0;

    const std::vector<std::string> subcommands = {
        "qtable",     "words-check", "hermite-proj", "hermite-norm", "ks-check",
        "flow-check", "strichartz",  "equivalence",  "funk-hecke",   "weighted",
        "report-all"};
    for (const auto& name : subcommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "flat JSON config file");
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "json|csv");
        sub->add_option("--jobs", jobs, "worker threads for independent checks");
        sub->add_option("--max-s", max_s, "sector sweep limit");
        sub->add_option("--max-n", max_n, "word grid limit");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "config error: cannot open " << config_path << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            cfg = RunConfig::from_json_text(buf.str());
        } catch (const ConfigError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }
    // flags override the config file
    if (!format.empty()) cfg.format = format;
    if (!out_path.empty()) cfg.out_path = out_path;
    if (jobs > 0) cfg.jobs = jobs;
    if (max_s > 0) cfg.max_s = max_s;
    if (max_n > 0) cfg.max_n = max_n;
    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "config error: cannot open output " << cfg.out_path << "\n";
            return 2;
        }
        return cli::run_subcommand(name, cfg, out, std::cerr);
    }
    return cli::run_subcommand(name, cfg, std::cout, std::cerr);
}
