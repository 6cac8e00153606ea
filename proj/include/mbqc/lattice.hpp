#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbqc {

/// Position of a cluster qubit. `x` is the global column index (grows without
/// bound as columns are generated), `y` the row in [0, H).
struct Coord {
    std::int64_t x{0};
    int y{0};

    auto operator<=>(const Coord &) const = default;
};

std::string to_string(Coord c);

enum class Direction : std::uint8_t { Up = 0, Right = 1, Down = 2, Left = 3 };

/// Neighbour enumeration order used everywhere (BFS tie-breaking depends on it).
inline constexpr std::array<Direction, 4> kNeighborOrder{Direction::Up, Direction::Right,
                                                        Direction::Down, Direction::Left};

constexpr Coord step(Coord c, Direction d) {
    switch (d) {
    case Direction::Up: return {c.x, c.y - 1};
    case Direction::Right: return {c.x + 1, c.y};
    case Direction::Down: return {c.x, c.y + 1};
    case Direction::Left: return {c.x - 1, c.y};
    }
    return c;
}

constexpr Direction opposite(Direction d) {
    return static_cast<Direction>((static_cast<int>(d) + 2) % 4);
}

/// Direction from `from` to the adjacent node `to`. Throws if not lattice-adjacent.
Direction direction_between(Coord from, Coord to);

struct LatticeParams {
    int height{20};
    double p{0.75};
    std::int64_t width{2000};

    /// Throws std::invalid_argument on H < 2, p outside [0,1], or W < B+1.
    void validate(int block_width) const;
};

/// Edge presence bits carried by one column: `vertical[y]` joins (x,y)-(x,y+1),
/// `horizontal[y]` joins (x-1,y)-(x,y).
struct ColumnEdges {
    std::vector<bool> vertical;
    std::vector<bool> horizontal;

    int height() const { return static_cast<int>(horizontal.size()); }

    static ColumnEdges none(int height);
    static ColumnEdges complete(int height, bool first_column = false);
};

/// Thrown when a column at or beyond the cluster width is requested.
class EndOfCluster : public std::out_of_range {
public:
    explicit EndOfCluster(std::int64_t x);
};

/// Draws the H-1 vertical and H horizontal bits of column `x`, each present with
/// probability p. Column 0 never has horizontal edges.
ColumnEdges generate_column(std::mt19937_64 &rng, const LatticeParams &params, std::int64_t x);

} // namespace mbqc
