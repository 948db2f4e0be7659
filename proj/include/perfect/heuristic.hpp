#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "perfect/graph.hpp"
#include "perfect/holes.hpp"

namespace perfect {

/// Pool of known holes/antiholes plus, for every vertex pair, the ids of the
/// pooled structures containing both endpoints (vpCount is the list size).
class PairCountIndex {
public:
    using HoleId = std::uint32_t;

    explicit PairCountIndex(int n = 0);

    static PairCountIndex build(int n, const std::vector<Hole>& structures);

    HoleId add(Hole h);
    void remove(HoleId id);

    int order() const { return n_; }
    std::size_t size() const { return live_; }
    bool empty() const { return live_ == 0; }
    std::size_t count(VertexPair p) const { return by_pair_[pair_index(n_, p.i, p.j)].size(); }
    const std::vector<HoleId>& holes_containing(VertexPair p) const { return by_pair_[pair_index(n_, p.i, p.j)]; }
    const Hole& hole(HoleId id) const { return holes_[id]; }

    /// Sum of all pair counts (== sum over pooled h of C(|h|,2)).
    std::size_t total_mass() const;
    std::vector<std::size_t> counts() const;
    /// Pooled structures, sorted.
    std::vector<Hole> structures() const;

    /// Same pooled structures and same per-pair counts.
    bool equivalent(const PairCountIndex& other) const;

private:
    int n_;
    std::vector<Hole> holes_;
    std::vector<char> alive_;
    std::size_t live_ = 0;
    std::vector<std::vector<HoleId>> by_pair_;
};

/// Removes `destroyed` (the pooled structures containing both endpoints of
/// `flipped`) and adds `created`.
void refresh_after_flip(PairCountIndex& index, VertexPair flipped, const std::vector<PairCountIndex::HoleId>& destroyed,
                        const std::vector<Hole>& created);

enum class HeuristicMode { EditBothWays, AdditionsOnly };

struct HeuristicResult {
    bool perfect = false;
    Graph graph;                     ///< perfect output, or the graph when it got stuck
    std::vector<VertexPair> flips;   ///< accepted flips, in order
    std::size_t remaining = 0;       ///< structures left when it failed
    std::size_t rounds = 0;          ///< outer rounds, including the final check (= flips + 1)
    std::size_t trials = 0;          ///< flips attempted, accepted or reverted
    double seconds = 0.0;
};

/// Greedy flipping: repeatedly flip the pair contained in the most known odd
/// holes/antiholes (smallest pair on ties) and keep the flip only if it
/// creates strictly fewer structures than it destroys; a reverted pair is
/// skipped for the rest of the round. Fails when no eligible pair helps.
HeuristicResult run_heuristic(const Graph& g, HeuristicMode mode = HeuristicMode::EditBothWays);

/// Same, with the flippable pairs given explicitly (indexed by pair_index).
HeuristicResult run_heuristic(const Graph& g, const std::vector<bool>& eligible);

}  // namespace perfect
