#include "perfect/solve.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "perfect/expectation.hpp"
#include "perfect/heuristic.hpp"
#include "perfect/master.hpp"

namespace perfect {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct CutLimits {
    Limit holes;
    Limit antiholes;
};

CutLimits cut_limits(const Graph& g, const Termination& t) {
    switch (t.mode) {
        case Termination::Mode::One:
            return {1, 1};
        case Termination::Mode::Percentage: {
            const auto th = termination_threshold(g.order(), g.density(), t.fraction);
            return {th.holes, th.antiholes};
        }
        case Termination::Mode::All:
            break;
    }
    return {std::nullopt, std::nullopt};
}

class CuttingPlane final : public MasterCallbacks {
public:
    CuttingPlane(const VariableDomain& domains, CutLimits limits, bool heur_candidates, bool heur_nodes,
                 int interval, Telemetry& telemetry)
        : limits_(limits),
          heur_candidates_(heur_candidates),
          heur_nodes_(heur_nodes),
          interval_(interval < 1 ? 1 : interval),
          telemetry_(telemetry) {
        const int n = domains.order();
        eligible_.assign(pair_count(n), false);
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++idx) eligible_[idx] = domains.state(i, j) == PairState::Free;
    }

    std::vector<PatternConstraint> on_integer_candidate(const Graph& candidate, SearchControl& control) override {
        ++telemetry_.iterations;
        auto holes = find_odd_holes(candidate, limits_.holes);
        auto antiholes = find_odd_antiholes(candidate, limits_.antiholes);
        if (holes.empty() && antiholes.empty()) return {};
        if (heur_candidates_) run_and_offer(candidate, control);

        std::vector<PatternConstraint> cuts;
        cuts.reserve(holes.size() + antiholes.size());
        for (const auto& h : holes) cuts.push_back(PatternConstraint::from_hole(h));
        for (const auto& h : antiholes) cuts.push_back(PatternConstraint::from_hole(h));
        telemetry_.hole_cuts += holes.size();
        telemetry_.antihole_cuts += antiholes.size();
        return cuts;
    }

    void on_node(SearchControl& control) override {
        if (!heur_nodes_) return;
        if (++node_events_ % static_cast<std::size_t>(interval_) != 0) return;
        Graph g = control.materialize();
        if (last_node_graph_ && *last_node_graph_ == g) return;
        run_and_offer(g, control);
        last_node_graph_ = std::move(g);
    }

private:
    void run_and_offer(const Graph& g, SearchControl& control) {
        ++telemetry_.heuristic_calls;
        auto r = run_heuristic(g, eligible_);
        if (r.perfect && control.offer_incumbent(r.graph)) ++telemetry_.heuristic_improvements;
    }

    CutLimits limits_;
    bool heur_candidates_;
    bool heur_nodes_;
    int interval_;
    Telemetry& telemetry_;
    std::vector<bool> eligible_;
    std::size_t node_events_ = 0;
    std::optional<Graph> last_node_graph_;
};

std::vector<PatternConstraint> seed_pool(const HoleSet& s) {
    std::vector<PatternConstraint> pool;
    pool.reserve(s.total());
    for (const auto& h : s.holes) pool.push_back(PatternConstraint::from_hole(h));
    for (const auto& h : s.antiholes) pool.push_back(PatternConstraint::from_hole(h));
    return pool;
}

SolveResult finish_optimization(const MasterResult& m, Telemetry telemetry) {
    SolveResult r;
    telemetry.nodes = m.nodes;
    r.telemetry = telemetry;
    switch (m.status) {
        case MasterStatus::Optimal:
            if (!m.assignment || !is_perfect(*m.assignment))
                throw std::logic_error("master reported an optimum that is not perfect");
            r.status = SolveStatus::Optimal;
            r.output = m.assignment;
            r.objective = m.objective;
            r.lower_bound = m.objective;
            r.gap_pct = 0.0;
            break;
        case MasterStatus::Infeasible:
            throw std::logic_error("editing/completion master reported infeasible");
        case MasterStatus::TimeLimit:
            r.status = SolveStatus::TimeLimit;
            r.output = m.assignment;
            if (m.assignment) r.objective = m.objective;
            r.lower_bound = m.lower_bound;
            r.gap_pct = gap_percent(r.objective, r.lower_bound);
            break;
    }
    return r;
}

SolveResult run_optimization(const Graph& g, const VariableDomain& domains, const StrategyConfig& cfg,
                             Graph trivial_incumbent, Clock::time_point start) {
    Telemetry telemetry;
    std::vector<PatternConstraint> pool;
    if (cfg.add_all_initial) {
        pool = seed_pool(find_all_structures(g));
        telemetry.seeded_cuts = pool.size();
    }
    CuttingPlane callbacks(domains, cut_limits(g, cfg.termination), cfg.heuristic_on_candidates,
                           cfg.heuristic_on_nodes, cfg.node_interval, telemetry);
    MasterOptions options;
    options.time_limit_s = cfg.time_limit_s - seconds_since(start);
    // An incumbent equal to the input would prune the root before the input
    // itself is ever checked.
    if (!(trivial_incumbent == g)) options.incumbent = std::move(trivial_incumbent);
    auto m = solve_master(g, domains, std::move(pool), options, callbacks);
    telemetry.total_time_s = seconds_since(start);
    return finish_optimization(m, telemetry);
}

}  // namespace

const char* to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::Edit: return "edit";
        case ProblemKind::Complete: return "complete";
        case ProblemKind::Delete: return "delete";
        case ProblemKind::Sandwich: return "sandwich";
    }
    return "?";
}

std::optional<ProblemKind> parse_problem(std::string_view name) {
    if (name == "edit") return ProblemKind::Edit;
    if (name == "complete") return ProblemKind::Complete;
    if (name == "delete") return ProblemKind::Delete;
    if (name == "sandwich") return ProblemKind::Sandwich;
    return std::nullopt;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::SandwichFeasible: return "feasible";
        case SolveStatus::SandwichInfeasiblePrecheck: return "infeasible_precheck";
        case SolveStatus::SandwichInfeasibleProven: return "infeasible_proven";
        case SolveStatus::TimeLimit: return "timelimit";
    }
    return "?";
}

SolveResult solve_edit(const Graph& g, const StrategyConfig& cfg) {
    const auto start = Clock::now();
    const int n = g.order();
    VariableDomain domains(n, PairState::Free);
    // Empty or complete graph, whichever is closer.
    const bool fill = 2 * g.edge_count() > pair_count(n);
    Graph trivial = fill ? complete_graph(n) : Graph(n);
    return run_optimization(g, domains, cfg, std::move(trivial), start);
}

SolveResult solve_complete(const Graph& g, const StrategyConfig& cfg) {
    const auto start = Clock::now();
    const int n = g.order();
    VariableDomain domains(n, PairState::Free);
    for (const auto& e : g.edges()) domains.fix(e, true);
    return run_optimization(g, domains, cfg, complete_graph(n), start);
}

SolveResult solve_delete(const Graph& g, const StrategyConfig& cfg) {
    auto r = solve_complete(complement(g), cfg);
    if (r.output) r.output = complement(*r.output);
    return r;
}

PrecheckResult precheck(const Graph& g, const std::vector<VertexPair>& optional_pairs) {
    const auto start = Clock::now();
    const int n = g.order();
    std::vector<bool> optional(pair_count(n), false);
    for (const auto& p : optional_pairs) optional[pair_index(n, p.i, p.j)] = true;

    PrecheckResult r;
    r.structures = find_all_structures(g);
    auto breakable = [&](const Hole& h) {
        const auto& vs = h.vertices;
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!g.adjacent(vs[a], vs[b]) && optional[pair_index(n, vs[a], vs[b])]) return true;
        return false;
    };
    for (const auto* list : {&r.structures.holes, &r.structures.antiholes}) {
        for (const auto& h : *list)
            if (!breakable(h)) {
                r.pass = false;
                r.witness = h;
                break;
            }
        if (!r.pass) break;
    }
    r.seconds = seconds_since(start);
    return r;
}

SolveResult solve_sandwich(const Graph& g1, const std::vector<VertexPair>& optional_pairs, const StrategyConfig& cfg) {
    const auto start = Clock::now();
    const int n = g1.order();
    for (const auto& p : optional_pairs) {
        if (p.i < 0 || p.j >= n || p.i == p.j) throw std::invalid_argument("optional pair out of range");
        if (g1.adjacent(p.i, p.j))
            throw std::invalid_argument("optional pair {" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) +
                                        "} is an edge of the mandatory graph");
    }

    SolveResult r;
    r.objective = std::nullopt;
    auto pre = precheck(g1, optional_pairs);
    r.telemetry.precheck_time_s = pre.seconds;
    if (!pre.pass) {
        r.status = SolveStatus::SandwichInfeasiblePrecheck;
        r.gap_pct = 0.0;
        r.telemetry.total_time_s = seconds_since(start);
        return r;
    }

    VariableDomain domains(n, PairState::FixedFalse);
    for (const auto& e : g1.edges()) domains.fix(e, true);
    for (const auto& p : optional_pairs) domains.release(p);

    auto pool = seed_pool(pre.structures);
    r.telemetry.seeded_cuts = pool.size();
    CuttingPlane callbacks(domains, cut_limits(g1, cfg.termination), false, false, cfg.node_interval, r.telemetry);
    MasterOptions options;
    options.time_limit_s = cfg.time_limit_s - seconds_since(start);
    options.first_feasible = true;
    auto m = solve_master(g1, domains, std::move(pool), options, callbacks);
    r.telemetry.nodes = m.nodes;
    switch (m.status) {
        case MasterStatus::Optimal:
            if (!m.assignment || !is_perfect(*m.assignment))
                throw std::logic_error("sandwich witness is not perfect");
            r.status = SolveStatus::SandwichFeasible;
            r.output = m.assignment;
            r.objective = 0;
            r.gap_pct = 0.0;
            break;
        case MasterStatus::Infeasible:
            r.status = SolveStatus::SandwichInfeasibleProven;
            r.gap_pct = 0.0;
            break;
        case MasterStatus::TimeLimit:
            r.status = SolveStatus::TimeLimit;
            r.gap_pct = 100.0;
            break;
    }
    r.telemetry.total_time_s = seconds_since(start);
    return r;
}

SolveResult solve(const Instance& instance, const StrategyConfig& cfg) {
    if (instance.kind != ProblemKind::Sandwich && !instance.optional_pairs.empty())
        throw std::invalid_argument("optional pairs are only meaningful for the sandwich problem");
    switch (instance.kind) {
        case ProblemKind::Edit: return solve_edit(instance.input, cfg);
        case ProblemKind::Complete: return solve_complete(instance.input, cfg);
        case ProblemKind::Delete: return solve_delete(instance.input, cfg);
        case ProblemKind::Sandwich: return solve_sandwich(instance.input, instance.optional_pairs, cfg);
    }
    throw std::invalid_argument("unknown problem kind");
}

}  // namespace perfect
