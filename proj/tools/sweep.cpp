// Depth / write sweep over (algorithm, p, B).
#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Sweep path depth and predecessor writes over a parameter grid"};
    std::string algs = "gbfs,ibfs";
    std::string ps = "0.5:1.0:0.05";
    std::string blocks = "5,6,7,8,9,10";
    std::string rules = "loose";
    int height = 20;
    std::int64_t width = 2000;
    int reps = 1000;
    std::uint64_t seed = 0x5EED;
    std::string out;
    app.add_option("--alg", algs, "comma-separated algorithms");
    app.add_option("--p", ps, "edge probabilities: a,b,c or start:stop:step");
    app.add_option("--B", blocks, "block widths: a,b,c or start:stop:step");
    app.add_option("--rules", rules, "path rules: loose or induced")
        ->check(CLI::IsMember({"loose", "induced"}));
    app.add_option("--H", height, "cluster height");
    app.add_option("--W", width, "cluster width");
    app.add_option("--reps", reps, "trials per grid point");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--out", out, "CSV output (default stdout)");
    CLI11_PARSE(app, argc, argv);

    cli::Config c;
    cli::check(mbqc_config_set_path_rules(c.cfg, rules.c_str()), "rules");
    cli::check(mbqc_config_set_height(c.cfg, height), "height");
    cli::check(mbqc_config_set_width(c.cfg, width), "width");
    cli::check(mbqc_config_set_reps(c.cfg, reps), "reps");
    cli::check(mbqc_config_set_seed(c.cfg, seed), "seed");
    mbqc_buffer *csv = nullptr;
    cli::check(mbqc_sweep(c.cfg, algs.c_str(), ps.c_str(), blocks.c_str(), &csv), "sweep");
    cli::write_buffer(out, csv);
    return 0;
}
