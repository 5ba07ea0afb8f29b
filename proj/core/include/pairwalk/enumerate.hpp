#pragma once

#include <vector>

#include "pairwalk/graph.hpp"

namespace pairwalk {

// One representative per isomorphism class, sorted by canonical form (so the
// stream order is deterministic). Built level by level: every graph on k
// vertices arises from a graph on k-1 vertices plus a new vertex attached to
// some neighbor subset; duplicates are removed by canonical form. The
// intermediate levels deliberately keep disconnected graphs (deleting a
// vertex from a connected graph can disconnect it); connectivity is filtered
// only at yield time.
std::vector<Graph> enumerate_all_graphs(int n);   // 1 <= n <= 9
std::vector<Graph> enumerate_connected(int n);    // 1 <= n <= 9

// Trees only, via leaf augmentation (every tree on k vertices is a tree on
// k-1 plus one leaf), which reaches n = 12 without paying for the full
// graph enumeration.
std::vector<Graph> enumerate_trees(int n);        // 1 <= n <= 12

}  // namespace pairwalk
