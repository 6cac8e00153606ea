#pragma once

#include <deque>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbqc/node_window.hpp"

namespace mbqc {

enum class Algorithm { Gbfs, Ibfs };

/// Which qubits a path may use.
///  Loose:   any qubit not already on the path or measured out.
///  Induced: additionally no cut-out qubits, no chords (the path stays an
///           induced chain) and no step to the left. Needed for the measured
///           pattern to implement the intended gate.
enum class PathRules { Loose, Induced };

const char *to_string(PathRules r);
/// Parses "loose" / "induced". Throws std::invalid_argument.
PathRules parse_path_rules(const std::string &name);

const char *to_string(Algorithm a);
/// Parses "gbfs" / "ibfs" (case-insensitive). Throws std::invalid_argument.
Algorithm parse_algorithm(const std::string &name);

struct SearchOutcome {
    std::vector<Coord> exit_nodes; ///< visited nodes of the rightmost column, top to bottom
    bool right_nodes_found{false};
};

/// Persistent search data. For IBFS the queue carries the previous cycle's exit
/// nodes into the next cycle; `root` is the current path head.
struct SearchState {
    Algorithm algorithm{Algorithm::Gbfs};
    PathRules rules{PathRules::Loose};
    std::deque<Coord> queue;
    Coord root{};
};

/// IBFS had nothing to resume from: the path cannot continue.
class SearchDeath : public std::runtime_error {
public:
    SearchDeath() : std::runtime_error("search death: exit queue is empty") {}
};

/// Whether a forward pass may visit `c` under `rules`.
bool is_available(NodeWindow &w, Coord c, PathRules rules);

/// Global breadth-first search of the block from `root` (leftmost column):
/// clear_all, forward BFS, then reverse_pass_gbfs from every exit node.
SearchOutcome gbfs_search(NodeWindow &w, Coord root, PathRules rules = PathRules::Loose);

/// Walks each exit back to `root`, recasting predecessors as successors and
/// flagging the first node met in column block_first+1 as a right node.
/// Returns true if any right node was flagged.
bool reverse_pass_gbfs(NodeWindow &w, std::span<const Coord> exits, Coord root);

/// One incremental search cycle. Resumes the BFS from st.queue over the region
/// x >= penultimate column, links the new exits, flags right nodes, prunes
/// failed paths and refills st.queue. Throws SearchDeath on an empty queue.
SearchOutcome ibfs_step(NodeWindow &w, SearchState &st);

/// Removes dead subtrees below penultimate-column exits still flagged
/// inaccessible. Each dead subtree is cut at its root: the first ancestor that
/// is `root` or has more than one successor. Returns the number of links deleted.
std::size_t prune_failed_paths(NodeWindow &w, Coord root);

/// Visited nodes of the rightmost column, top to bottom.
std::vector<Coord> collect_exit_nodes(NodeWindow &w);

} // namespace mbqc
