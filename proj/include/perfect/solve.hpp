#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perfect/graph.hpp"
#include "perfect/holes.hpp"

namespace perfect {

enum class ProblemKind { Edit, Complete, Delete, Sandwich };

const char* to_string(ProblemKind k);
std::optional<ProblemKind> parse_problem(std::string_view name);

/// How many holes/antiholes a candidate check collects before stopping.
struct Termination {
    enum class Mode { One, Percentage, All };
    Mode mode = Mode::All;
    double fraction = 0.0;  ///< only for Percentage, in (0,1)
};

struct StrategyConfig {
    Termination termination;
    bool heuristic_on_candidates = false;
    bool heuristic_on_nodes = false;
    int node_interval = 10;
    bool add_all_initial = false;
    double time_limit_s = 900.0;
    std::uint64_t seed = 0;
};

/// Compact strategy string: termination token ("all", "one", "pct<f>")
/// followed by "+hc", "+hr" / "+hr<interval>", "+addall" as enabled.
std::string format_strategy(const StrategyConfig& cfg);
/// Inverse of format_strategy; "base" is accepted for "all". Time limit and
/// seed are left at their defaults. Throws std::invalid_argument.
StrategyConfig parse_strategy(std::string_view text);

struct Instance {
    ProblemKind kind = ProblemKind::Edit;
    Graph input;
    std::vector<VertexPair> optional_pairs;  ///< sandwich only
};

enum class SolveStatus { Optimal, SandwichFeasible, SandwichInfeasiblePrecheck, SandwichInfeasibleProven, TimeLimit };

/// CSV status string: optimal, feasible, infeasible_precheck, infeasible_proven, timelimit.
const char* to_string(SolveStatus s);

struct Telemetry {
    std::size_t iterations = 0;   ///< integer candidates checked for holes
    std::size_t hole_cuts = 0;    ///< lazy hole cuts returned to the master
    std::size_t antihole_cuts = 0;
    std::size_t seeded_cuts = 0;  ///< constraints placed in the pool before search
    std::size_t heuristic_calls = 0;
    std::size_t heuristic_improvements = 0;
    std::size_t nodes = 0;
    double precheck_time_s = 0.0;
    double total_time_s = 0.0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::TimeLimit;
    std::optional<Graph> output;
    std::optional<long> objective;
    long lower_bound = 0;
    double gap_pct = 100.0;
    Telemetry telemetry;
};

SolveResult solve_edit(const Graph& g, const StrategyConfig& cfg = {});
SolveResult solve_complete(const Graph& g, const StrategyConfig& cfg = {});
/// Completion on the complement, complemented back.
SolveResult solve_delete(const Graph& g, const StrategyConfig& cfg = {});
/// Heuristic toggles in cfg are ignored. Throws std::invalid_argument if an
/// optional pair is an edge of g1.
SolveResult solve_sandwich(const Graph& g1, const std::vector<VertexPair>& optional_pairs, const StrategyConfig& cfg = {});
SolveResult solve(const Instance& instance, const StrategyConfig& cfg = {});

struct PrecheckResult {
    bool pass = true;
    std::optional<Hole> witness;
    HoleSet structures;  ///< every odd hole and antihole of the input
    double seconds = 0.0;
};

/// Infeasible iff some odd hole/antihole of g has no optional pair among its
/// non-adjacent pairs (so it cannot be broken by additions).
PrecheckResult precheck(const Graph& g, const std::vector<VertexPair>& optional_pairs);

}  // namespace perfect
