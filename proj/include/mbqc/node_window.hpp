#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/lattice.hpp"

namespace mbqc {

/// Pair (r, s) used by the adaptive-setting and byproduct-update rules.
struct BitPair {
    bool r{false};
    bool s{false};

    constexpr BitPair operator^(BitPair o) const { return {r != o.r, s != o.s}; }
    constexpr bool operator==(const BitPair &) const = default;
};

/// Local measurement-pattern data of one cluster qubit.
struct PatternRules {
    bool z_flag{false}; ///< true: computational-basis (cut-out); false: xy-plane (on-path)
    double theta{0.0};  ///< base angle, xy-plane only
    BitPair r_s{};      ///< adaptive setting rule, xy-plane only
    BitPair r_b{};      ///< byproduct update rule

    bool on_path() const { return !z_flag; }
};

inline constexpr int kUnsetDistance = -1;

/// Everything stored per cluster qubit in the ring buffer. Predecessor and
/// successors are kept as directions, since both are always lattice neighbours.
struct NodeRecord {
    int distance{kUnsetDistance};
    std::optional<Direction> predecessor;
    std::uint8_t successors{0}; ///< bit i set: neighbour in Direction(i) is a successor
    bool right_node{false};
    bool inaccessible{false};
    std::optional<PatternRules> pattern;
    bool carried_z{false}; ///< Z byproduct left by an already-measured neighbour
    bool measured{false};
    bool outcome{false};

    bool visited() const { return distance != kUnsetDistance; }
    bool committed() const { return pattern.has_value(); }
    bool has_successor(Direction d) const { return (successors >> static_cast<int>(d)) & 1U; }
    int successor_count() const;
};

/// Memory-operation tallies for one photonic cycle.
struct MemCounters {
    std::uint64_t resets{0};
    std::uint64_t distance_writes{0};
    std::uint64_t predecessor_writes{0};
    std::uint64_t successor_writes{0};
    std::uint64_t flag_writes{0};
    std::uint64_t pattern_writes{0};
    std::uint64_t node_reads{0};

    std::uint64_t field_writes() const {
        return resets + distance_writes + predecessor_writes + successor_writes + flag_writes +
               pattern_writes;
    }
    MemCounters &operator+=(const MemCounters &o);
    bool operator==(const MemCounters &) const = default;
};

class WindowError : public std::out_of_range {
public:
    explicit WindowError(const std::string &what) : std::out_of_range(what) {}
};

/// In-block neighbours of a node (at most four, in kNeighborOrder).
struct Neighbors {
    std::array<Coord, 4> items{};
    std::array<Direction, 4> dirs{};
    int count{0};

    const Coord *begin() const { return items.data(); }
    const Coord *end() const { return items.data() + count; }
    int size() const { return count; }
};

/**
 * Ring buffer of cluster columns with instrumented per-node storage.
 *
 * The buffer has B+1 slots. A push into a full buffer overwrites the oldest
 * slot; no live column is ever moved. The newest B columns form the search
 * block; the remaining slot (if any) holds the column measured out in the
 * previous cycle until it is overwritten.
 *
 * Every mutation of a record goes through one of the setters below and is
 * tallied in counters(); reads through read() are tallied as node_reads.
 * peek() is an uncounted read intended for tracing and verification.
 */
class NodeWindow {
public:
    NodeWindow(int height, int block_width);

    int height() const { return height_; }
    int block_width() const { return block_width_; }
    int capacity() const { return static_cast<int>(slots_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    /// Global index of the oldest held column. Requires !empty().
    std::int64_t tail_x() const;
    /// Global index of the newest column. Requires !empty().
    std::int64_t head_x() const;
    /// Leftmost column of the search block.
    std::int64_t block_first() const;
    /// Global index the next push will receive.
    std::int64_t next_x() const { return next_x_; }
    /// Slot index of a held column.
    int slot_of(std::int64_t x) const;

    bool holds(Coord c) const;
    bool in_block(Coord c) const;

    /// Installs a new column at head+1 with cleared records (H reset writes).
    /// Returns the evicted column index if the buffer was full.
    std::optional<std::int64_t> push_column(ColumnEdges edges);

    const ColumnEdges &edges(std::int64_t x) const;
    /// True if the edge from `c` in direction `d` is present and both ends are held.
    bool has_edge(Coord c, Direction d) const;
    /// Lattice neighbours joined to `c` by a present edge and lying in the block.
    Neighbors neighbors(Coord c) const;

    const NodeRecord &read(Coord c);
    const NodeRecord &peek(Coord c) const;

    std::optional<Coord> predecessor_of(Coord c) const;
    std::vector<Coord> successors_of(Coord c) const;

    void set_distance(Coord c, int d);
    void set_predecessor(Coord c, std::optional<Coord> pred);
    void add_successor(Coord c, Coord succ);
    void remove_successor(Coord c, Coord succ);
    void set_right_node(Coord c, bool v);
    void set_inaccessible(Coord c, bool v);
    void set_pattern(Coord c, std::optional<PatternRules> rules);
    void set_carried_z(Coord c, bool v);
    void set_measured(Coord c, bool outcome);

    /// Clears the search fields of one record: one reset, one predecessor
    /// write and one distance write, unconditionally.
    void clear_record(Coord c);
    /// clear_record() over every node of the block. Pattern data survives.
    void clear_all();

    const MemCounters &counters() const { return counters_; }
    void reset_counters() { counters_ = {}; }
    /// Writes performed through the setters; always equals counters().field_writes().
    std::uint64_t instrumented_writes() const { return writes_; }

    /// One line per held node: `x,y,d,pred,succs,right,inacc`.
    std::string dump() const;

private:
    struct Column {
        std::int64_t x{-1};
        ColumnEdges edges;
        std::vector<NodeRecord> nodes;
    };

    enum class Field { Reset, Distance, Predecessor, Successor, Flag, Pattern };

    NodeRecord &slot_record(Coord c);
    const NodeRecord &slot_record(Coord c) const;
    void note_write(Field f, std::uint64_t n = 1);

    int height_;
    int block_width_;
    std::vector<Column> slots_;
    int tail_{0};
    int count_{0};
    std::int64_t next_x_{0};
    MemCounters counters_{};
    std::uint64_t writes_{0};
};

} // namespace mbqc
