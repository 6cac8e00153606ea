#pragma once

#include <cstdint>
#include <random>

namespace mbqc {

/// splitmix64 finaliser. Used for every seed derivation in the project.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent random streams consumed within one trial. The edge stream is
/// shared by every algorithm run on the same trial seed.
enum class Stream : std::uint64_t {
    Edges = 1,
    Choices = 2,
    Outcomes = 3,
    Angles = 4,
    Noise = 5,
    Input = 6,
    Verify = 7,
};

/// Seed of trial `index` of a sweep with master seed `master`:
/// splitmix64(master + index * golden_gamma).
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9E3779B97F4A7C15ULL);
}

/// Seed of one sub-stream of a trial: splitmix64(trial ^ (stream * C)).
constexpr std::uint64_t stream_seed(std::uint64_t trial, Stream s) {
    return splitmix64(trial ^ (static_cast<std::uint64_t>(s) * 0xD1B54A32D192ED03ULL));
}

inline std::mt19937_64 make_stream(std::uint64_t trial, Stream s) {
    return std::mt19937_64{stream_seed(trial, s)};
}

} // namespace mbqc
