#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "perfect/graph.hpp"
#include "perfect/holes.hpp"

namespace perfect {

/// One pair of a forbidden pattern: the pair and its adjacency in the pattern.
struct PatternLiteral {
    VertexPair pair;
    bool required = false;

    friend auto operator<=>(const PatternLiteral&, const PatternLiteral&) = default;
};

/// Nogood over all C(|S|,2) pairs of an odd vertex set S: an assignment is
/// feasible iff it differs from `literals` on at least one pair, i.e.
///   sum_{edges of S} (1 - x_ij) + sum_{non-edges of S} x_ij >= 1.
struct PatternConstraint {
    std::vector<PatternLiteral> literals;  // sorted by pair
    HoleKind source_kind = HoleKind::Hole;
    std::size_t source_len = 0;

    /// Pattern of a realized hole (cycle pairs are edges) or antihole (cycle
    /// pairs are the non-edges).
    static PatternConstraint from_hole(const Hole& h);

    bool satisfied_by(const Graph& assignment) const;
};

enum class PairState : std::uint8_t { Free, FixedFalse, FixedTrue };

/// Per-pair domain of the master problem.
class VariableDomain {
public:
    VariableDomain() = default;
    explicit VariableDomain(int n, PairState initial = PairState::Free);

    int order() const { return n_; }
    PairState state(int i, int j) const { return states_[pair_index(n_, i, j)]; }
    PairState state(VertexPair p) const { return state(p.i, p.j); }
    void fix(VertexPair p, bool value);
    void release(VertexPair p);
    std::size_t free_count() const;

    /// True iff g agrees with every fixed pair.
    bool admits(const Graph& g) const;

private:
    int n_ = 0;
    std::vector<PairState> states_;
};

enum class MasterStatus { Optimal, Infeasible, TimeLimit };

const char* to_string(MasterStatus s);

struct MasterResult {
    MasterStatus status = MasterStatus::Infeasible;
    std::optional<Graph> assignment;  ///< optimum, or incumbent on TimeLimit
    long objective = 0;               ///< flips of free pairs relative to the input
    long lower_bound = 0;
    std::size_t nodes = 0;
    std::size_t candidates = 0;       ///< integer candidates handed to the callback
    std::size_t lazy_cuts = 0;        ///< distinct constraints appended during search
    std::size_t pool_size = 0;        ///< final constraint pool size
    double seconds = 0.0;
};

/// (UB - LB) / UB * 100; 100 without an incumbent, 0 when UB == 0.
double gap_percent(std::optional<long> upper_bound, long lower_bound);

/// Access to the running search handed to callbacks.
class SearchControl {
public:
    virtual ~SearchControl() = default;
    /// Input graph with the current partial assignment applied (unassigned
    /// free pairs keep their input state).
    virtual Graph materialize() const = 0;
    /// Offers a complete assignment as incumbent. It must respect the
    /// domains and satisfy every constraint of the pool; returns true if it
    /// improved the upper bound.
    virtual bool offer_incumbent(const Graph& assignment) = 0;
    virtual std::optional<long> upper_bound() const = 0;
    virtual std::size_t node_count() const = 0;
};

class MasterCallbacks {
public:
    virtual ~MasterCallbacks() = default;
    /// Called with every assignment that satisfies the current pool. Returned
    /// constraints are appended to the pool; a non-empty return rejects the
    /// candidate, so at least one returned constraint must cut it off.
    virtual std::vector<PatternConstraint> on_integer_candidate(const Graph& candidate, SearchControl& control) {
        (void)candidate;
        (void)control;
        return {};
    }
    /// Called at every search node after bounding.
    virtual void on_node(SearchControl& control) { (void)control; }
};

struct MasterOptions {
    double time_limit_s = std::numeric_limits<double>::infinity();
    /// Stop at the first accepted candidate instead of proving optimality.
    bool first_feasible = false;
    std::optional<Graph> incumbent;
};

/// Exact branch and bound over nogoods: minimizes the number of free pairs
/// whose value differs from `input`, subject to the domains and the
/// constraint pool (which the callbacks may extend lazily).
///
/// Every node runs unit propagation, the disjoint-packing bound and a
/// Lagrangian bound over the violated constraints (with reduced-cost fixing
/// against the incumbent). Branching is on the unassigned pair with the
/// largest Lagrangian multiplier load (smallest pair on ties), flip branch
/// first. In first_feasible mode no Lagrangian is computed and branching
/// takes the violated constraint with the fewest unassigned free pairs
/// (lowest pool index on ties) and its smallest unassigned pair.
MasterResult solve_master(const Graph& input, const VariableDomain& domains, std::vector<PatternConstraint> pool,
                          const MasterOptions& options, MasterCallbacks& callbacks);

MasterResult solve_master(const Graph& input, const VariableDomain& domains, std::vector<PatternConstraint> pool,
                          const MasterOptions& options = {});

/// Committed flips of `partial` (free pairs differing from input) plus a
/// greedy family of pairwise pair-disjoint constraints that stay violated if
/// no further free pair is flipped. `partial` maps each assigned free pair to
/// its value; unassigned pairs are absent (std::nullopt).
long lower_bound_disjoint_packing(const Graph& input, const VariableDomain& domains,
                                  const std::vector<PatternConstraint>& constraints,
                                  const std::vector<std::optional<bool>>& partial);

}  // namespace perfect
