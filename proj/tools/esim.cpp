// Statevector fidelity of the logical qubit under modulator voltage noise.
#include <cstdint>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Simulate the measured pattern and track logical fidelity over time"};
    int height = 7;
    double p = 0.9;
    std::string alg = "gbfs";
    int block = 5;
    std::int64_t cols = 100;
    std::string sigmas = "0,0.01,0.02,0.05,0.1";
    int reps = 100;
    std::string angles = "identity";
    std::uint64_t seed = 0x5EED;
    double tp_ns = 1.0;
    double v_pi = 1.0;
    std::string out;
    std::string survival_out;
    app.add_option("--H", height, "cluster height (statevector limit 12)");
    app.add_option("--p", p, "edge probability");
    app.add_option("--alg", alg, "gbfs or ibfs")->check(CLI::IsMember({"gbfs", "ibfs"}));
    app.add_option("--B", block, "block width");
    app.add_option("--cols", cols, "cluster width in columns");
    app.add_option("--sigma", sigmas, "voltage noise std-devs (V): a,b,c or start:stop:step");
    app.add_option("--reps", reps, "trials per sigma");
    app.add_option("--angles", angles, "identity or random")
        ->check(CLI::IsMember({"identity", "random"}));
    app.add_option("--seed", seed, "master seed");
    app.add_option("--tp-ns", tp_ns, "photonic clock period in ns");
    app.add_option("--vpi", v_pi, "modulator half-wave voltage (V)");
    app.add_option("--out", out, "fidelity CSV (default stdout)");
    app.add_option("--survival-out", survival_out, "survivor counts CSV");
    CLI11_PARSE(app, argc, argv);

    cli::Config c;
    cli::check(mbqc_config_set_algorithm(c.cfg, alg.c_str()), "alg");
    cli::check(mbqc_config_set_height(c.cfg, height), "height");
    cli::check(mbqc_config_set_p(c.cfg, p), "p");
    cli::check(mbqc_config_set_block_width(c.cfg, block), "block_width");
    cli::check(mbqc_config_set_width(c.cfg, cols), "width");
    cli::check(mbqc_config_set_reps(c.cfg, reps), "reps");
    cli::check(mbqc_config_set_seed(c.cfg, seed), "seed");
    cli::check(mbqc_config_set_clock_period_ns(c.cfg, tp_ns), "clock_period_ns");
    cli::check(mbqc_config_validate(c.cfg), "config");

    mbqc_buffer *csv = nullptr;
    mbqc_buffer *survival = nullptr;
    cli::check(mbqc_esim(c.cfg, sigmas.c_str(), angles.c_str(), v_pi, &csv,
                         survival_out.empty() ? nullptr : &survival),
               "esim");
    cli::write_buffer(out, csv);
    if (survival) {
        cli::write_buffer(survival_out, survival);
    }
    return 0;
}
