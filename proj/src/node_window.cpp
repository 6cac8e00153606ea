#include "mbqc/node_window.hpp"

#include <bit>
#include <sstream>

namespace mbqc {

int NodeRecord::successor_count() const {
    return std::popcount(static_cast<unsigned>(successors));
}

MemCounters &MemCounters::operator+=(const MemCounters &o) {
    resets += o.resets;
    distance_writes += o.distance_writes;
    predecessor_writes += o.predecessor_writes;
    successor_writes += o.successor_writes;
    flag_writes += o.flag_writes;
    pattern_writes += o.pattern_writes;
    node_reads += o.node_reads;
    return *this;
}

NodeWindow::NodeWindow(int height, int block_width)
    : height_(height), block_width_(block_width) {
    if (height < 2 || block_width < 2) {
        throw std::invalid_argument("node window needs H >= 2 and B >= 2");
    }
    slots_.resize(static_cast<std::size_t>(block_width) + 1);
}

std::int64_t NodeWindow::tail_x() const {
    if (empty()) {
        throw WindowError("empty node window has no tail");
    }
    return next_x_ - count_;
}

std::int64_t NodeWindow::head_x() const {
    if (empty()) {
        throw WindowError("empty node window has no head");
    }
    return next_x_ - 1;
}

std::int64_t NodeWindow::block_first() const {
    const std::int64_t first = next_x_ - block_width_;
    return first < tail_x() ? tail_x() : first;
}

int NodeWindow::slot_of(std::int64_t x) const {
    if (empty() || x < tail_x() || x > head_x()) {
        throw WindowError("column " + std::to_string(x) + " is not held by the window");
    }
    return static_cast<int>((tail_ + (x - tail_x())) % capacity());
}

bool NodeWindow::holds(Coord c) const {
    return !empty() && c.x >= tail_x() && c.x <= head_x() && c.y >= 0 && c.y < height_;
}

bool NodeWindow::in_block(Coord c) const {
    return holds(c) && c.x >= block_first();
}

std::optional<std::int64_t> NodeWindow::push_column(ColumnEdges edges) {
    if (edges.height() != height_ || static_cast<int>(edges.vertical.size()) != height_ - 1) {
        throw std::invalid_argument("column edge data does not match the cluster height");
    }
    std::optional<std::int64_t> evicted;
    if (count_ == capacity()) {
        evicted = tail_x();
        tail_ = (tail_ + 1) % capacity();
        --count_;
    }
    const int slot = (tail_ + count_) % capacity();
    Column &col = slots_[static_cast<std::size_t>(slot)];
    col.x = next_x_;
    col.edges = std::move(edges);
    col.nodes.assign(static_cast<std::size_t>(height_), NodeRecord{});
    note_write(Field::Reset, static_cast<std::uint64_t>(height_));
    ++count_;
    ++next_x_;
    return evicted;
}

const ColumnEdges &NodeWindow::edges(std::int64_t x) const {
    return slots_[static_cast<std::size_t>(slot_of(x))].edges;
}

bool NodeWindow::has_edge(Coord c, Direction d) const {
    const Coord n = step(c, d);
    if (!holds(c) || !holds(n)) {
        return false;
    }
    switch (d) {
    case Direction::Up: return edges(c.x).vertical[static_cast<std::size_t>(n.y)];
    case Direction::Down: return edges(c.x).vertical[static_cast<std::size_t>(c.y)];
    case Direction::Right: return edges(n.x).horizontal[static_cast<std::size_t>(c.y)];
    case Direction::Left: return edges(c.x).horizontal[static_cast<std::size_t>(c.y)];
    }
    return false;
}

Neighbors NodeWindow::neighbors(Coord c) const {
    if (!in_block(c)) {
        throw WindowError("node " + to_string(c) + " lies outside the search block");
    }
    Neighbors out;
    for (Direction d : kNeighborOrder) {
        const Coord n = step(c, d);
        if (in_block(n) && has_edge(c, d)) {
            out.items[static_cast<std::size_t>(out.count)] = n;
            out.dirs[static_cast<std::size_t>(out.count)] = d;
            ++out.count;
        }
    }
    return out;
}

NodeRecord &NodeWindow::slot_record(Coord c) {
    if (!holds(c)) {
        throw WindowError("node " + to_string(c) + " is not held by the window");
    }
    return slots_[static_cast<std::size_t>(slot_of(c.x))].nodes[static_cast<std::size_t>(c.y)];
}

const NodeRecord &NodeWindow::slot_record(Coord c) const {
    if (!holds(c)) {
        throw WindowError("node " + to_string(c) + " is not held by the window");
    }
    return slots_[static_cast<std::size_t>(slot_of(c.x))].nodes[static_cast<std::size_t>(c.y)];
}

void NodeWindow::note_write(Field f, std::uint64_t n) {
    switch (f) {
    case Field::Reset: counters_.resets += n; break;
    case Field::Distance: counters_.distance_writes += n; break;
    case Field::Predecessor: counters_.predecessor_writes += n; break;
    case Field::Successor: counters_.successor_writes += n; break;
    case Field::Flag: counters_.flag_writes += n; break;
    case Field::Pattern: counters_.pattern_writes += n; break;
    }
    writes_ += n;
}

const NodeRecord &NodeWindow::read(Coord c) {
    const NodeRecord &r = slot_record(c);
    ++counters_.node_reads;
    return r;
}

const NodeRecord &NodeWindow::peek(Coord c) const {
    return slot_record(c);
}

std::optional<Coord> NodeWindow::predecessor_of(Coord c) const {
    const NodeRecord &r = slot_record(c);
    if (!r.predecessor) {
        return std::nullopt;
    }
    return step(c, *r.predecessor);
}

std::vector<Coord> NodeWindow::successors_of(Coord c) const {
    const NodeRecord &r = slot_record(c);
    std::vector<Coord> out;
    for (Direction d : kNeighborOrder) {
        if (r.has_successor(d)) {
            out.push_back(step(c, d));
        }
    }
    return out;
}

void NodeWindow::set_distance(Coord c, int d) {
    slot_record(c).distance = d;
    note_write(Field::Distance);
}

void NodeWindow::set_predecessor(Coord c, std::optional<Coord> pred) {
    NodeRecord &r = slot_record(c);
    r.predecessor = pred ? std::optional<Direction>{direction_between(c, *pred)} : std::nullopt;
    note_write(Field::Predecessor);
}

void NodeWindow::add_successor(Coord c, Coord succ) {
    NodeRecord &r = slot_record(c);
    r.successors |= static_cast<std::uint8_t>(1U << static_cast<int>(direction_between(c, succ)));
    note_write(Field::Successor);
}

void NodeWindow::remove_successor(Coord c, Coord succ) {
    NodeRecord &r = slot_record(c);
    r.successors &= static_cast<std::uint8_t>(~(1U << static_cast<int>(direction_between(c, succ))));
    note_write(Field::Successor);
}

void NodeWindow::set_right_node(Coord c, bool v) {
    slot_record(c).right_node = v;
    note_write(Field::Flag);
}

void NodeWindow::set_inaccessible(Coord c, bool v) {
    slot_record(c).inaccessible = v;
    note_write(Field::Flag);
}

void NodeWindow::set_pattern(Coord c, std::optional<PatternRules> rules) {
    slot_record(c).pattern = rules;
    note_write(Field::Pattern);
}

void NodeWindow::set_carried_z(Coord c, bool v) {
    slot_record(c).carried_z = v;
    note_write(Field::Pattern);
}

void NodeWindow::set_measured(Coord c, bool outcome) {
    NodeRecord &r = slot_record(c);
    r.measured = true;
    r.outcome = outcome;
    note_write(Field::Flag);
}

void NodeWindow::clear_record(Coord c) {
    NodeRecord &r = slot_record(c);
    r.distance = kUnsetDistance;
    r.predecessor.reset();
    r.successors = 0;
    r.right_node = false;
    r.inaccessible = false;
    note_write(Field::Reset);
    note_write(Field::Predecessor);
    note_write(Field::Distance);
}

void NodeWindow::clear_all() {
    if (empty()) {
        return;
    }
    for (std::int64_t x = block_first(); x <= head_x(); ++x) {
        for (int y = 0; y < height_; ++y) {
            clear_record({x, y});
        }
    }
}

std::string NodeWindow::dump() const {
    std::ostringstream os;
    if (empty()) {
        return {};
    }
    for (std::int64_t x = tail_x(); x <= head_x(); ++x) {
        for (int y = 0; y < height_; ++y) {
            const Coord c{x, y};
            const NodeRecord &r = peek(c);
            os << x << ',' << y << ',';
            if (r.visited()) {
                os << r.distance;
            } else {
                os << '-';
            }
            os << ',';
            if (auto p = predecessor_of(c)) {
                os << to_string(*p);
            } else {
                os << '-';
            }
            os << ',';
            const auto succs = successors_of(c);
            if (succs.empty()) {
                os << '-';
            }
            for (std::size_t i = 0; i < succs.size(); ++i) {
                os << (i ? ";" : "") << to_string(succs[i]);
            }
            os << ',' << (r.right_node ? 1 : 0) << ',' << (r.inaccessible ? 1 : 0) << '\n';
        }
    }
    return os.str();
}

} // namespace mbqc
