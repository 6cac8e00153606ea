#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "mbqc/mbqc.h"

namespace cli {

// Exits with a message when a C API call fails.
inline void check(mbqc_status st, const char *what) {
    if (st != MBQC_OK) {
        std::cerr << what << ": " << mbqc_status_string(st);
        const std::string detail = mbqc_last_error();
        if (!detail.empty()) {
            std::cerr << ": " << detail;
        }
        std::cerr << '\n';
        std::exit(st == MBQC_ERR_CONFIG || st == MBQC_ERR_PARSE || st == MBQC_ERR_INVALID_ARGUMENT ? 2 : 1);
    }
}

// Writes to `path`, or stdout for "" / "-".
inline void write_output(const std::string &path, const char *data, std::size_t size) {
    if (path.empty() || path == "-") {
        std::fwrite(data, 1, size, stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        std::exit(1);
    }
    out.write(data, static_cast<std::streamsize>(size));
}

inline void write_buffer(const std::string &path, mbqc_buffer *buf) {
    write_output(path, mbqc_buffer_data(buf), mbqc_buffer_size(buf));
    mbqc_buffer_destroy(buf);
}

struct Config {
    mbqc_config *cfg{nullptr};
    Config() { check(mbqc_config_create(&cfg), "config"); }
    ~Config() { mbqc_config_destroy(cfg); }
    Config(const Config &) = delete;
    Config &operator=(const Config &) = delete;
};

} // namespace cli
