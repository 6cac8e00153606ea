#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "mbqc/search.hpp"
#include "oracles.hpp"

using namespace mbqc;

namespace {

NodeWindow complete_block(int h, int b) {
    NodeWindow w(h, b);
    for (int x = 0; x < b; ++x) {
        w.push_column(ColumnEdges::complete(h, x == 0));
    }
    return w;
}

} // namespace

TEST(Search, ParseNames) {
    EXPECT_EQ(parse_algorithm("GBFS"), Algorithm::Gbfs);
    EXPECT_EQ(parse_algorithm("ibfs"), Algorithm::Ibfs);
    EXPECT_THROW(parse_algorithm("dfs"), std::invalid_argument);
    EXPECT_EQ(parse_path_rules("induced"), PathRules::Induced);
    EXPECT_THROW(parse_path_rules("strict"), std::invalid_argument);
    EXPECT_STREQ(to_string(Algorithm::Ibfs), "ibfs");
    EXPECT_STREQ(to_string(PathRules::Loose), "loose");
}

TEST(Search, CompleteBlockDistancesAreManhattan) {
    NodeWindow w = complete_block(3, 5);
    const SearchOutcome out = gbfs_search(w, {0, 1});
    EXPECT_TRUE(out.right_nodes_found);
    EXPECT_EQ(out.exit_nodes.size(), 3u);
    for (int x = 0; x < 5; ++x) {
        for (int y = 0; y < 3; ++y) {
            EXPECT_EQ(w.peek({x, y}).distance, x + std::abs(y - 1)) << x << "," << y;
        }
    }
}

TEST(Search, ReversePassFlagsRightNodesAndLinks) {
    NodeWindow w = complete_block(3, 4);
    gbfs_search(w, {0, 1});
    EXPECT_TRUE(w.peek({1, 1}).right_node);
    EXPECT_TRUE(w.peek({0, 1}).has_successor(Direction::Right));
    // Right nodes only in the column after the root's.
    for (int x : {0, 2, 3}) {
        for (int y = 0; y < 3; ++y) EXPECT_FALSE(w.peek({x, y}).right_node);
    }
    // Every successor link points to a node one step further from the root.
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 3; ++y) {
            for (const Coord s : w.successors_of({x, y})) {
                EXPECT_EQ(w.peek(s).distance, w.peek({x, y}).distance + 1);
                EXPECT_EQ(w.predecessor_of(s), (Coord{x, y}));
            }
        }
    }
}

TEST(Search, NoEdgesMeansNoRightNode) {
    NodeWindow w(4, 3);
    for (int x = 0; x < 3; ++x) w.push_column(ColumnEdges::none(4));
    const SearchOutcome out = gbfs_search(w, {0, 2});
    EXPECT_FALSE(out.right_nodes_found);
    EXPECT_TRUE(out.exit_nodes.empty());
    EXPECT_EQ(w.peek({0, 2}).distance, 0);
}

TEST(Search, DisconnectedColumnBlocksPath) {
    NodeWindow w(3, 3);
    w.push_column(ColumnEdges::complete(3, true));
    w.push_column(ColumnEdges::complete(3));
    ColumnEdges cut = ColumnEdges::complete(3);
    cut.horizontal = {false, false, false};
    w.push_column(cut);
    EXPECT_FALSE(gbfs_search(w, {0, 0}).right_nodes_found);
}

TEST(Search, GbfsMatchesBruteForceOracle) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 300; ++k) {
        const int h = 2 + k % 7;
        const int b = 2 + k % 4;
        const double p = 0.3 + 0.1 * (k % 7);
        NodeWindow w(h, b);
        std::vector<ColumnEdges> cols;
        for (int x = 0; x < b + 1; ++x) {
            const ColumnEdges e = generate_column(rng, {h, p, 100}, x);
            w.push_column(e);
            if (x >= 1) cols.push_back(e);
        }
        const int row = static_cast<int>(rng() % static_cast<unsigned>(h));
        const SearchOutcome out = gbfs_search(w, {1, row});
        const auto dist = oracle::bfs(h, cols, 0, row);
        bool reach = false;
        for (int i = 0; i < b; ++i) {
            for (int y = 0; y < h; ++y) {
                ASSERT_EQ(w.peek({1 + i, y}).distance, dist[i][y]);
            }
        }
        for (int y = 0; y < h; ++y) reach = reach || dist[b - 1][y] >= 0;
        ASSERT_EQ(out.right_nodes_found, reach);
    }
}

TEST(Search, GbfsPredecessorWritesBoundedBy2BH) {
    // Each visited node gets its predecessor cleared and written at most once.
    NodeWindow w = complete_block(20, 5);
    w.reset_counters();
    gbfs_search(w, {0, 10});
    EXPECT_EQ(w.counters().predecessor_writes, 2u * 5u * 20u - 1u);
}

TEST(Search, LooseAndInducedAvailability) {
    NodeWindow w = complete_block(3, 3);
    PatternRules cut;
    cut.z_flag = true;
    w.set_pattern({1, 0}, cut);
    EXPECT_TRUE(is_available(w, {1, 0}, PathRules::Loose));
    EXPECT_FALSE(is_available(w, {1, 0}, PathRules::Induced));
    w.set_pattern({1, 1}, PatternRules{});
    EXPECT_FALSE(is_available(w, {1, 1}, PathRules::Loose));
    w.set_measured({1, 2}, false);
    EXPECT_FALSE(is_available(w, {1, 2}, PathRules::Loose));
}

TEST(Search, IbfsDiesOnEmptyQueue) {
    NodeWindow w = complete_block(3, 3);
    SearchState st;
    st.algorithm = Algorithm::Ibfs;
    st.root = {0, 1};
    EXPECT_THROW(ibfs_step(w, st), SearchDeath);
}

TEST(Search, IbfsDistancesStayAnchoredToOldRoot) {
    // Warm-up from (0,1), path head moves to (1,1), then one new column.
    NodeWindow w(3, 3);
    for (int x = 0; x < 3; ++x) w.push_column(ColumnEdges::complete(3, x == 0));
    const SearchOutcome warm = gbfs_search(w, {0, 1});
    SearchState st;
    st.algorithm = Algorithm::Ibfs;
    st.queue.assign(warm.exit_nodes.begin(), warm.exit_nodes.end());
    st.root = {1, 1};
    w.push_column(ColumnEdges::complete(3));
    const SearchOutcome out = ibfs_step(w, st);
    EXPECT_TRUE(out.right_nodes_found);
    EXPECT_EQ(out.exit_nodes.size(), 3u);
    EXPECT_EQ(w.peek({3, 1}).distance, 3);

    // Shortest distance from the head over the current block is 2.
    const std::vector<ColumnEdges> cols(3, ColumnEdges::complete(3));
    const auto dist = oracle::bfs(3, cols, 0, 1);
    EXPECT_EQ(dist[2][1], 2);
    EXPECT_GT(w.peek({3, 1}).distance, dist[2][1]);
}

TEST(Search, IbfsOnlyWritesFreshRegion) {
    NodeWindow w(20, 5);
    for (int x = 0; x < 5; ++x) w.push_column(ColumnEdges::complete(20, x == 0));
    const SearchOutcome warm = gbfs_search(w, {0, 10});
    SearchState st;
    st.algorithm = Algorithm::Ibfs;
    st.queue.assign(warm.exit_nodes.begin(), warm.exit_nodes.end());
    st.root = {1, 10};
    w.push_column(ColumnEdges::complete(20));
    w.reset_counters();
    ibfs_step(w, st);
    EXPECT_EQ(w.counters().predecessor_writes, 20u);
    EXPECT_EQ(st.queue.size(), 20u);
    for (const Coord c : st.queue) EXPECT_EQ(c.x, 5);
}

TEST(Search, IbfsMarksUnextendedExitsInaccessible) {
    // Old exits (2,0) and (2,2): only (2,2) continues into the new column.
    NodeWindow w(3, 3);
    ColumnEdges c0 = ColumnEdges::complete(3, true);
    ColumnEdges c1 = ColumnEdges::none(3);
    c1.horizontal = {true, false, true};
    ColumnEdges c2 = ColumnEdges::none(3);
    c2.horizontal = {true, false, true};
    w.push_column(c0);
    w.push_column(c1);
    w.push_column(c2);
    const SearchOutcome warm = gbfs_search(w, {0, 0});
    ASSERT_EQ(warm.exit_nodes.size(), 2u);
    SearchState st;
    st.algorithm = Algorithm::Ibfs;
    st.queue.assign(warm.exit_nodes.begin(), warm.exit_nodes.end());
    st.root = {1, 0};
    ColumnEdges c3 = ColumnEdges::none(3);
    c3.horizontal = {false, false, true};
    w.push_column(c3);
    const SearchOutcome out = ibfs_step(w, st);
    EXPECT_TRUE(out.right_nodes_found);
    EXPECT_TRUE(w.peek({2, 0}).inaccessible);
    EXPECT_FALSE(w.peek({2, 2}).inaccessible);
    EXPECT_TRUE(w.peek({2, 2}).right_node);
    // (1,0) had the dead exit (2,0) as its only successor; its link is pruned.
    EXPECT_FALSE(w.peek({1, 0}).has_successor(Direction::Right));
    ASSERT_EQ(st.queue.size(), 1u);
    EXPECT_EQ(st.queue.front(), (Coord{3, 2}));
}

TEST(Search, PruneCutsAtBranchPoint) {
    // Root (0,1) with two branches; the exit on the top branch failed.
    NodeWindow w(3, 3);
    for (int x = 0; x < 3; ++x) w.push_column(ColumnEdges::complete(3, x == 0));
    auto link = [&](Coord a, Coord b, int d) {
        w.set_distance(b, d);
        w.set_predecessor(b, a);
        w.add_successor(a, b);
    };
    w.set_distance({0, 1}, 0);
    link({0, 1}, {1, 1}, 1);
    link({1, 1}, {1, 0}, 2);
    link({1, 0}, {2, 0}, 3);
    link({1, 1}, {2, 1}, 2);
    // pen column is 1 here (head_x 2); mark (1,0) as a failed exit.
    w.set_inaccessible({1, 0}, true);
    EXPECT_EQ(prune_failed_paths(w, {0, 1}), 1u);
    EXPECT_FALSE(w.peek({1, 1}).has_successor(Direction::Up));
    EXPECT_TRUE(w.peek({1, 1}).has_successor(Direction::Right));
}

TEST(Search, PruneCutsAtRoot) {
    NodeWindow w(3, 3);
    for (int x = 0; x < 3; ++x) w.push_column(ColumnEdges::complete(3, x == 0));
    w.set_distance({0, 1}, 0);
    w.set_distance({1, 1}, 1);
    w.set_predecessor({1, 1}, Coord{0, 1});
    w.add_successor({0, 1}, {1, 1});
    w.set_inaccessible({1, 1}, true);
    EXPECT_EQ(prune_failed_paths(w, {0, 1}), 1u);
    EXPECT_EQ(w.peek({0, 1}).successor_count(), 0);
}

TEST(Search, CollectExitNodesTopToBottom) {
    NodeWindow w = complete_block(4, 3);
    gbfs_search(w, {0, 3});
    const auto exits = collect_exit_nodes(w);
    ASSERT_EQ(exits.size(), 4u);
    for (int y = 0; y < 4; ++y) EXPECT_EQ(exits[y], (Coord{2, y}));
}
