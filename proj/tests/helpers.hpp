#pragma once

#include <initializer_list>
#include <utility>

#include "perfect/graph.hpp"

// Graph from a 1-based edge list.
inline perfect::Graph graph_from(int n, std::initializer_list<std::pair<int, int>> edges) {
    perfect::Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

// Two 5-cycles 1-2-3-4-5 and 1-2-6-7-8 sharing the edge {1,2}.
inline perfect::Graph two_c5_sharing_edge() {
    return graph_from(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 6}, {6, 7}, {7, 8}, {8, 1}});
}
