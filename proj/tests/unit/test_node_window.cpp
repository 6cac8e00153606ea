#include <gtest/gtest.h>

#include "mbqc/node_window.hpp"

using namespace mbqc;

namespace {

NodeWindow filled(int h, int b, int columns) {
    NodeWindow w(h, b);
    for (int x = 0; x < columns; ++x) {
        w.push_column(ColumnEdges::complete(h, x == 0));
    }
    return w;
}

} // namespace

TEST(NodeWindow, RingBufferEvictsOldest) {
    NodeWindow w(3, 2);
    EXPECT_EQ(w.capacity(), 3);
    EXPECT_TRUE(w.empty());
    for (int x = 0; x < 3; ++x) {
        EXPECT_FALSE(w.push_column(ColumnEdges::complete(3, x == 0)).has_value());
    }
    EXPECT_EQ(w.tail_x(), 0);
    EXPECT_EQ(w.head_x(), 2);
    EXPECT_EQ(w.block_first(), 1);
    const auto evicted = w.push_column(ColumnEdges::complete(3));
    ASSERT_TRUE(evicted.has_value());
    EXPECT_EQ(*evicted, 0);
    EXPECT_EQ(w.tail_x(), 1);
    EXPECT_EQ(w.next_x(), 4);
    EXPECT_FALSE(w.holds({0, 0}));
    EXPECT_TRUE(w.holds({1, 0}));
    EXPECT_FALSE(w.in_block({1, 0}));
    EXPECT_TRUE(w.in_block({2, 0}));
    EXPECT_THROW(w.read({0, 0}), WindowError);
    EXPECT_THROW(w.read({2, 3}), WindowError);
}

TEST(NodeWindow, SlotsAreReusedInPlace) {
    NodeWindow w(2, 2);
    for (int x = 0; x < 3; ++x) w.push_column(ColumnEdges::complete(2, x == 0));
    const int slot0 = w.slot_of(0);
    w.push_column(ColumnEdges::complete(2));
    EXPECT_EQ(w.slot_of(3), slot0);
}

TEST(NodeWindow, PushCountsResetsOnly) {
    NodeWindow w(5, 3);
    w.push_column(ColumnEdges::complete(5, true));
    const MemCounters &c = w.counters();
    EXPECT_EQ(c.resets, 5u);
    EXPECT_EQ(c.predecessor_writes, 0u);
    EXPECT_EQ(c.field_writes(), 5u);
    EXPECT_EQ(w.instrumented_writes(), c.field_writes());
}

TEST(NodeWindow, ClearAllCountsOverBlock) {
    NodeWindow w = filled(4, 3, 4);
    w.reset_counters();
    w.clear_all();
    EXPECT_EQ(w.counters().resets, 12u);
    EXPECT_EQ(w.counters().predecessor_writes, 12u);
    EXPECT_EQ(w.counters().distance_writes, 12u);
}

TEST(NodeWindow, EdgeMapping) {
    NodeWindow w(3, 2);
    ColumnEdges c0 = ColumnEdges::none(3);
    c0.vertical = {true, false};
    ColumnEdges c1 = ColumnEdges::none(3);
    c1.horizontal = {false, true, false};
    w.push_column(c0);
    w.push_column(c1);
    EXPECT_TRUE(w.has_edge({0, 0}, Direction::Down));
    EXPECT_TRUE(w.has_edge({0, 1}, Direction::Up));
    EXPECT_FALSE(w.has_edge({0, 1}, Direction::Down));
    EXPECT_FALSE(w.has_edge({0, 0}, Direction::Up));
    EXPECT_TRUE(w.has_edge({0, 1}, Direction::Right));
    EXPECT_TRUE(w.has_edge({1, 1}, Direction::Left));
    EXPECT_FALSE(w.has_edge({1, 1}, Direction::Right));
    EXPECT_FALSE(w.has_edge({0, 1}, Direction::Left));
    const Neighbors n = w.neighbors({0, 1});
    ASSERT_EQ(n.size(), 2);
    EXPECT_EQ(n.items[0], (Coord{0, 0}));
    EXPECT_EQ(n.items[1], (Coord{1, 1}));
    EXPECT_EQ(n.dirs[1], Direction::Right);
}

TEST(NodeWindow, NeighborsStayInBlock) {
    NodeWindow w = filled(3, 2, 3); // block is columns 1..2
    const Neighbors n = w.neighbors({1, 1});
    for (const Coord c : n) {
        EXPECT_GE(c.x, 1);
    }
    EXPECT_EQ(n.size(), 3);
}

TEST(NodeWindow, SettersAreCounted) {
    NodeWindow w = filled(3, 3, 3);
    w.reset_counters();
    const std::uint64_t before = w.instrumented_writes();
    w.set_distance({1, 1}, 2);
    w.set_predecessor({1, 1}, Coord{0, 1});
    w.add_successor({0, 1}, {1, 1});
    w.set_right_node({1, 1}, true);
    w.set_inaccessible({1, 1}, true);
    w.set_measured({0, 0}, true);
    PatternRules r;
    r.z_flag = true;
    w.set_pattern({0, 0}, r);
    const MemCounters &c = w.counters();
    EXPECT_EQ(c.distance_writes, 1u);
    EXPECT_EQ(c.predecessor_writes, 1u);
    EXPECT_EQ(c.successor_writes, 1u);
    EXPECT_EQ(c.flag_writes, 3u);
    EXPECT_EQ(c.pattern_writes, 1u);
    EXPECT_EQ(w.instrumented_writes() - before, c.field_writes());

    EXPECT_EQ(w.predecessor_of({1, 1}), (Coord{0, 1}));
    EXPECT_EQ(w.successors_of({0, 1}), std::vector<Coord>{(Coord{1, 1})});
    EXPECT_TRUE(w.peek({0, 0}).measured);
    EXPECT_TRUE(w.peek({0, 0}).outcome);
    EXPECT_TRUE(w.peek({0, 0}).committed());

    w.read({1, 1});
    EXPECT_EQ(w.counters().node_reads, 1u);
    w.peek({1, 1});
    EXPECT_EQ(w.counters().node_reads, 1u);
}

TEST(NodeWindow, PredecessorMustBeAdjacent) {
    NodeWindow w = filled(3, 3, 3);
    EXPECT_THROW(w.set_predecessor({1, 1}, Coord{2, 2}), std::invalid_argument);
}

TEST(NodeWindow, ClearRecordKeepsPattern) {
    NodeWindow w = filled(3, 3, 3);
    PatternRules r;
    r.theta = 0.5;
    w.set_pattern({1, 1}, r);
    w.set_distance({1, 1}, 4);
    w.set_right_node({1, 1}, true);
    w.clear_record({1, 1});
    const NodeRecord &rec = w.peek({1, 1});
    EXPECT_FALSE(rec.visited());
    EXPECT_FALSE(rec.predecessor.has_value());
    EXPECT_FALSE(rec.right_node);
    ASSERT_TRUE(rec.pattern.has_value());
    EXPECT_DOUBLE_EQ(rec.pattern->theta, 0.5);
}

TEST(NodeWindow, DumpFormat) {
    NodeWindow w(2, 2);
    w.push_column(ColumnEdges::complete(2, true));
    w.push_column(ColumnEdges::complete(2));
    w.set_distance({0, 0}, 0);
    w.set_distance({1, 0}, 1);
    w.set_predecessor({1, 0}, Coord{0, 0});
    w.add_successor({0, 0}, {1, 0});
    w.set_right_node({1, 0}, true);
    const std::string want = "0,0,0,-,1:0,0,0\n"
                             "0,1,-,-,-,0,0\n"
                             "1,0,1,0:0,-,1,0\n"
                             "1,1,-,-,-,0,0\n";
    EXPECT_EQ(w.dump(), want);
}
