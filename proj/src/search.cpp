#include "mbqc/search.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mbqc {

const char *to_string(Algorithm a) {
    return a == Algorithm::Gbfs ? "gbfs" : "ibfs";
}

Algorithm parse_algorithm(const std::string &name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "gbfs") {
        return Algorithm::Gbfs;
    }
    if (lower == "ibfs") {
        return Algorithm::Ibfs;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected gbfs or ibfs)");
}

const char *to_string(PathRules r) {
    return r == PathRules::Loose ? "loose" : "induced";
}

PathRules parse_path_rules(const std::string &name) {
    if (name == "loose") {
        return PathRules::Loose;
    }
    if (name == "induced") {
        return PathRules::Induced;
    }
    throw std::invalid_argument("unknown path rules '" + name + "' (expected loose or induced)");
}

bool is_available(NodeWindow &w, Coord c, PathRules rules) {
    const NodeRecord &r = w.read(c);
    if (rules == PathRules::Induced) {
        return !r.committed();
    }
    return !r.measured && !(r.pattern && r.pattern->on_path());
}

std::vector<Coord> collect_exit_nodes(NodeWindow &w) {
    std::vector<Coord> exits;
    const std::int64_t x = w.head_x();
    for (int y = 0; y < w.height(); ++y) {
        if (w.read({x, y}).visited()) {
            exits.push_back({x, y});
        }
    }
    return exits;
}

SearchOutcome gbfs_search(NodeWindow &w, Coord root, PathRules rules) {
    if (!w.in_block(root)) {
        throw WindowError("search root " + to_string(root) + " lies outside the block");
    }
    w.clear_all();
    std::deque<Coord> queue;
    w.set_distance(root, 0);
    queue.push_back(root);
    while (!queue.empty()) {
        const Coord c = queue.front();
        queue.pop_front();
        const int d = w.read(c).distance;
        for (const Coord n : w.neighbors(c)) {
            if (w.read(n).visited() || !is_available(w, n, rules)) {
                continue;
            }
            w.set_distance(n, d + 1);
            w.set_predecessor(n, c);
            queue.push_back(n);
        }
    }
    SearchOutcome out;
    out.exit_nodes = collect_exit_nodes(w);
    out.right_nodes_found = reverse_pass_gbfs(w, out.exit_nodes, root);
    return out;
}

bool reverse_pass_gbfs(NodeWindow &w, std::span<const Coord> exits, Coord root) {
    const std::int64_t right_col = w.block_first() + 1;
    bool found = false;
    for (const Coord exit : exits) {
        bool flagged = false;
        Coord c = exit;
        while (c != root) {
            if (!flagged && c.x == right_col) {
                w.set_right_node(c, true);
                flagged = found = true;
            }
            const auto pred = w.predecessor_of(c);
            if (!pred) {
                break;
            }
            w.add_successor(*pred, c);
            c = *pred;
        }
    }
    return found;
}

SearchOutcome ibfs_step(NodeWindow &w, SearchState &st) {
    if (st.queue.empty()) {
        throw SearchDeath();
    }
    const std::int64_t pen = w.head_x() - 1;
    const std::int64_t right_col = w.block_first() + 1;
    const std::set<Coord> old_exits(st.queue.begin(), st.queue.end());
    for (const Coord q : st.queue) {
        w.set_inaccessible(q, true);
    }

    std::set<Coord> fresh;
    std::deque<Coord> queue = st.queue;
    while (!queue.empty()) {
        const Coord c = queue.front();
        queue.pop_front();
        const int d = w.read(c).distance;
        for (const Coord n : w.neighbors(c)) {
            if (n.x < pen) {
                continue;
            }
            if (w.read(n).visited() || !is_available(w, n, st.rules)) {
                continue;
            }
            w.set_distance(n, d + 1);
            w.set_predecessor(n, c);
            fresh.insert(n);
            queue.push_back(n);
        }
    }

    SearchOutcome out;
    out.exit_nodes = collect_exit_nodes(w);
    for (const Coord exit : out.exit_nodes) {
        bool flagged = false;
        Coord c = exit;
        while (c != st.root) {
            const bool is_new = fresh.count(c) > 0;
            if (old_exits.count(c) && w.read(c).inaccessible) {
                w.set_inaccessible(c, false);
            }
            if (flagged && !is_new) {
                break;
            }
            if (!flagged && c.x == right_col) {
                w.set_right_node(c, true);
                flagged = out.right_nodes_found = true;
            }
            const auto pred = w.predecessor_of(c);
            if (!pred || !w.holds(*pred)) {
                break;
            }
            if (is_new) {
                w.add_successor(*pred, c);
            }
            c = *pred;
        }
    }

    prune_failed_paths(w, st.root);

    st.queue.assign(out.exit_nodes.begin(), out.exit_nodes.end());
    return out;
}

std::size_t prune_failed_paths(NodeWindow &w, Coord root) {
    const std::int64_t pen = w.head_x() - 1;
    std::size_t cut = 0;
    for (int y = 0; y < w.height(); ++y) {
        const Coord failed{pen, y};
        const NodeRecord &r = w.read(failed);
        if (!r.visited() || !r.inaccessible) {
            continue;
        }
        Coord c = failed;
        while (c != root) {
            const auto pred = w.predecessor_of(c);
            if (!pred || !w.in_block(*pred)) {
                break;
            }
            const NodeRecord &pr = w.read(*pred);
            if (!pr.has_successor(direction_between(*pred, c))) {
                break;
            }
            if (*pred == root || pr.successor_count() > 1) {
                w.remove_successor(*pred, c);
                ++cut;
                break;
            }
            c = *pred;
        }
    }
    return cut;
}

} // namespace mbqc
