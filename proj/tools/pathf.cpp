// Runs path-finding trials and reports depth and predecessor writes.
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Path finding over an incomplete 2D cluster state"};
    std::uint64_t seed = 0x5EED;
    bool debug = false;
    std::string alg = "gbfs";
    std::string rules = "loose";
    double p = 0.75;
    int block = 5;
    int height = 20;
    std::int64_t width = 2000;
    int reps = 1;
    std::string out;
    std::uint64_t find_failure = 0;
    app.add_option("-s,--seed", seed, "master seed");
    app.add_flag("-d,--debug", debug, "print the per-cycle window trace of the first trial");
    app.add_option("-a,--alg", alg, "gbfs or ibfs")->check(CLI::IsMember({"gbfs", "ibfs"}));
    app.add_option("--rules", rules, "path rules: loose or induced")
        ->check(CLI::IsMember({"loose", "induced"}));
    app.add_option("-p", p, "edge probability");
    app.add_option("-B", block, "block width");
    app.add_option("-H", height, "cluster height");
    app.add_option("-W", width, "cluster width");
    app.add_option("--reps", reps, "number of trials");
    app.add_option("--out", out, "per-trial CSV (default stdout)");
    app.add_option("--find-failure", find_failure,
                   "search this many seeds for an IBFS failure case and print its trace");
    CLI11_PARSE(app, argc, argv);

    cli::Config c;
    cli::check(mbqc_config_set_algorithm(c.cfg, alg.c_str()), "alg");
    cli::check(mbqc_config_set_path_rules(c.cfg, rules.c_str()), "rules");
    cli::check(mbqc_config_set_p(c.cfg, p), "p");
    cli::check(mbqc_config_set_block_width(c.cfg, block), "block_width");
    cli::check(mbqc_config_set_height(c.cfg, height), "height");
    cli::check(mbqc_config_set_width(c.cfg, width), "width");
    cli::check(mbqc_config_set_reps(c.cfg, reps), "reps");
    cli::check(mbqc_config_set_seed(c.cfg, seed), "seed");
    cli::check(mbqc_config_validate(c.cfg), "config");

    if (find_failure > 0) {
        mbqc_buffer *report = nullptr;
        cli::check(mbqc_find_failure(c.cfg, find_failure, &report), "find-failure");
        cli::write_buffer(out, report);
        return 0;
    }
    if (debug) {
        mbqc_config_set_trace(c.cfg, 1);
        mbqc_trial *t = nullptr;
        cli::check(mbqc_run_trial(c.cfg, mbqc_trial_seed(seed, 0), &t), "trial");
        std::cerr << mbqc_trial_trace(t);
        std::cerr << "depth " << mbqc_trial_depth(t) << " end " << mbqc_trial_termination(t) << '\n';
        mbqc_trial_destroy(t);
        mbqc_config_set_trace(c.cfg, 0);
    }
    mbqc_buffer *csv = nullptr;
    cli::check(mbqc_run_trials_csv(c.cfg, &csv), "trials");
    cli::write_buffer(out, csv);
    return 0;
}
