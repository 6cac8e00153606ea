// Write-time bounds from a sweep CSV.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli_common.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Maximum memory write time per predecessor write, from a sweep CSV"};
    std::string in;
    double tp_ns = 1.0;
    std::string out;
    app.add_option("--in", in, "sweep CSV ('-' for stdin)")->required();
    app.add_option("--tp-ns", tp_ns, "photonic clock period in ns");
    app.add_option("--out", out, "CSV output (default stdout)");
    CLI11_PARSE(app, argc, argv);

    std::ostringstream text;
    if (in == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream f(in);
        if (!f) {
            std::cerr << "cannot read " << in << '\n';
            return 2;
        }
        text << f.rdbuf();
    }
    mbqc_buffer *csv = nullptr;
    cli::check(mbqc_timing_from_sweep_csv(text.str().c_str(), tp_ns, &csv), "timing");
    cli::write_buffer(out, csv);
    return 0;
}
