#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "perfect/graph.hpp"

namespace perfect {

enum class HoleKind { Hole, Antihole };

/// A chordless odd cycle of length >= 5, either in the graph (Hole) or in its
/// complement (Antihole). `vertices` is kept canonical: the minimum label
/// first, then the neighbor with the smaller label.
struct Hole {
    std::vector<int> vertices;
    HoleKind kind = HoleKind::Hole;

    std::size_t size() const { return vertices.size(); }
    bool contains(int v) const;

    friend auto operator<=>(const Hole&, const Hole&) = default;
};

using Limit = std::optional<std::size_t>;

/// Rotates/reflects a cyclic sequence into canonical form.
Hole canonical_hole(std::vector<int> cycle, HoleKind kind);

/// True iff `h` is an odd hole of g (Hole) or of complement(g) (Antihole),
/// checked directly from adjacency.
bool is_realized(const Graph& g, const Hole& h);

/// All odd holes of g, or the first `limit` of them. Order: start vertex
/// ascending, neighbors explored in ascending label order; each hole is
/// reported once, from its minimum vertex.
std::vector<Hole> find_odd_holes(const Graph& g, Limit limit = std::nullopt);

/// Odd antiholes of g of length >= 7 (a 5-antihole is also a 5-hole).
std::vector<Hole> find_odd_antiholes(const Graph& g, Limit limit = std::nullopt);

/// Same as find_odd_antiholes but takes the complement graph directly.
std::vector<Hole> find_odd_antiholes_of_complement(const Graph& complement_graph, Limit limit = std::nullopt);

/// Odd holes of g whose vertex set contains both endpoints of `vp`.
std::vector<Hole> find_odd_holes_through_pair(const Graph& g, VertexPair vp);

/// Odd antiholes (length >= 7) of the graph whose complement is given, containing both endpoints of `vp`.
std::vector<Hole> find_odd_antiholes_through_pair_of_complement(const Graph& complement_graph, VertexPair vp);

/// Strong perfect graph theorem: no odd hole and no odd antihole.
bool is_perfect(const Graph& g);

/// Every odd hole and odd antihole of g (holes first).
struct HoleSet {
    std::vector<Hole> holes;
    std::vector<Hole> antiholes;
    std::size_t total() const { return holes.size() + antiholes.size(); }
};
HoleSet find_all_structures(const Graph& g);

namespace reference {
/// Single-threaded enumerator; the OpenMP kernel must reproduce its output exactly.
std::vector<Hole> find_odd_holes_serial(const Graph& g, Limit limit, std::size_t min_length, HoleKind kind);
}  // namespace reference

namespace parallel {
/// Unlimited enumeration with start vertices distributed over OpenMP threads;
/// per-vertex results are concatenated in start order.
std::vector<Hole> find_odd_holes_omp(const Graph& g, std::size_t min_length, HoleKind kind);
}  // namespace parallel

}  // namespace perfect
