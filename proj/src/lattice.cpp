#include "mbqc/lattice.hpp"

#include <cstdlib>

namespace mbqc {

std::string to_string(Coord c) {
    return std::to_string(c.x) + ":" + std::to_string(c.y);
}

Direction direction_between(Coord from, Coord to) {
    for (Direction d : kNeighborOrder) {
        if (step(from, d) == to) {
            return d;
        }
    }
    throw std::invalid_argument("nodes " + to_string(from) + " and " + to_string(to) +
                                " are not adjacent");
}

void LatticeParams::validate(int block_width) const {
    if (height < 2) {
        throw std::invalid_argument("cluster height H must be at least 2");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("edge probability p must lie in [0, 1]");
    }
    if (block_width < 2) {
        throw std::invalid_argument("block width B must be at least 2");
    }
    if (width < block_width + 1) {
        throw std::invalid_argument("cluster width W must be at least B+1");
    }
}

ColumnEdges ColumnEdges::none(int height) {
    return {std::vector<bool>(static_cast<std::size_t>(height - 1), false),
            std::vector<bool>(static_cast<std::size_t>(height), false)};
}

ColumnEdges ColumnEdges::complete(int height, bool first_column) {
    return {std::vector<bool>(static_cast<std::size_t>(height - 1), true),
            std::vector<bool>(static_cast<std::size_t>(height), !first_column)};
}

EndOfCluster::EndOfCluster(std::int64_t x)
    : std::out_of_range("column " + std::to_string(x) + " lies beyond the cluster width") {}

ColumnEdges generate_column(std::mt19937_64 &rng, const LatticeParams &params, std::int64_t x) {
    if (x >= params.width) {
        throw EndOfCluster(x);
    }
    std::bernoulli_distribution edge(params.p);
    ColumnEdges e = ColumnEdges::none(params.height);
    // Vertical bits first, then horizontal; column 0 still consumes its
    // horizontal draws so every column uses the same amount of the stream.
    for (std::size_t y = 0; y < e.vertical.size(); ++y) {
        e.vertical[y] = edge(rng);
    }
    for (std::size_t y = 0; y < e.horizontal.size(); ++y) {
        const bool bit = edge(rng);
        e.horizontal[y] = x > 0 && bit;
    }
    return e;
}

} // namespace mbqc
