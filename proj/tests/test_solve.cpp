#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "perfect/solve.hpp"

using namespace perfect;

namespace {

StrategyConfig with(const char* s) { return parse_strategy(s); }

bool supergraph(const Graph& big, const Graph& small) {
    for (auto e : small.edges())
        if (!big.adjacent(e.i, e.j)) return false;
    return true;
}

}  // namespace

TEST_SUITE("solve") {

TEST_CASE("strategy strings") {
    auto cfg = parse_strategy("pct0.25+hc+hr+addall");
    CHECK(cfg.termination.mode == Termination::Mode::Percentage);
    CHECK(cfg.termination.fraction == 0.25);
    CHECK(cfg.heuristic_on_candidates);
    CHECK(cfg.heuristic_on_nodes);
    CHECK(cfg.node_interval == 10);
    CHECK(cfg.add_all_initial);
    CHECK(format_strategy(cfg) == "pct0.25+hc+hr+addall");
    CHECK(format_strategy(parse_strategy("base")) == "all");
    CHECK(format_strategy(parse_strategy("one+hr5")) == "one+hr5");
    CHECK_THROWS_AS(parse_strategy("pct1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strategy("pct0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strategy("all+magic"), std::invalid_argument);
    CHECK_THROWS_AS(parse_strategy("sometimes"), std::invalid_argument);
    CHECK(parse_problem("delete") == ProblemKind::Delete);
    CHECK_FALSE(parse_problem("remove").has_value());
}

TEST_CASE("editing examples") {
    auto c5 = solve_edit(cycle_graph(5));
    CHECK(c5.status == SolveStatus::Optimal);
    CHECK(c5.objective == 1);
    CHECK(c5.gap_pct == 0.0);

    auto two = solve_edit(two_c5_sharing_edge());
    CHECK(two.status == SolveStatus::Optimal);
    CHECK(two.objective == 1);
    // Removing {1,2} leaves the 8-cycle, one of the optimal outputs.
    Graph c8 = two_c5_sharing_edge();
    c8.remove_edge(0, 1);
    CHECK(is_perfect(c8));

    Graph tree(7);
    for (int v = 1; v < 7; ++v) tree.add_edge((v - 1) / 2, v);
    auto t = solve_edit(tree);
    CHECK(t.status == SolveStatus::Optimal);
    CHECK(t.objective == 0);
    CHECK(*t.output == tree);
    CHECK(t.telemetry.iterations == 1);
    CHECK(t.telemetry.hole_cuts + t.telemetry.antihole_cuts == 0);
}

TEST_CASE("completion and deletion examples") {
    auto c5 = solve_complete(cycle_graph(5));
    CHECK(c5.objective == 1);
    CHECK(supergraph(*c5.output, cycle_graph(5)));

    auto c7 = solve_complete(cycle_graph(7));
    CHECK(c7.objective == 1);
    REQUIRE(c7.output);
    auto added = c7.output->edges();
    CHECK(added.size() == 8);

    CHECK(solve_complete(complete_graph(6)).objective == 0);
    auto d5 = solve_delete(cycle_graph(5));
    CHECK(d5.objective == 1);
    CHECK(d5.output->edge_count() == 4);
    CHECK(solve_delete(Graph(6)).objective == 0);
}

TEST_CASE("exact optimum on small graphs") {
    for (std::uint64_t s = 0; s < 16; ++s) {
        const int n = 5 + static_cast<int>(s % 3);
        auto g = generate_er({n, 0.5, 1200 + s});
        auto edit = solve_edit(g);
        REQUIRE(edit.status == SolveStatus::Optimal);
        CHECK(oracle::is_perfect(*edit.output));
        CHECK(*edit.objective == oracle::min_edit(g));
        CHECK(static_cast<std::size_t>(*edit.objective) == hamming_distance(g, *edit.output));

        auto comp = solve_complete(g);
        REQUIRE(comp.status == SolveStatus::Optimal);
        CHECK(*comp.objective == oracle::min_completion(g));
        CHECK(supergraph(*comp.output, g));
        CHECK(*edit.objective <= *comp.objective);

        auto del = solve_delete(g);
        CHECK(*edit.objective <= *del.objective);
        CHECK(supergraph(g, *del.output));
        CHECK(*solve_edit(complement(g)).objective == *edit.objective);
    }
}

TEST_CASE("deletion is completion of the complement") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        auto g = generate_er({11, 0.5, 40 + s});
        auto d = solve_delete(g);
        auto c = solve_complete(complement(g));
        REQUIRE(d.status == SolveStatus::Optimal);
        CHECK(d.objective == c.objective);
        CHECK(*d.output == complement(*c.output));
    }
}

TEST_CASE("strategies agree on the optimum") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto g = generate_er({12, 0.5, 70 + s});
        const auto base = *solve_edit(g).objective;
        for (const char* st : {"one", "pct0.5", "all+hc", "all+hr", "all+hc+hr", "all+hc+hr+addall", "one+hr1"}) {
            auto r = solve_edit(g, with(st));
            CHECK(r.status == SolveStatus::Optimal);
            CHECK(*r.objective == base);
            CHECK(is_perfect(*r.output));
        }
        CHECK(*solve_complete(g, with("one+hc")).objective == *solve_complete(g).objective);
    }
}

TEST_CASE("AddAll on C5 seeds one constraint and needs no lazy cut") {
    auto r = solve_edit(cycle_graph(5), with("all+addall"));
    CHECK(r.objective == 1);
    CHECK(r.telemetry.seeded_cuts == 1);
    CHECK(r.telemetry.hole_cuts == 0);
}

TEST_CASE("one hole per check can finish without cutting every hole") {
    // The pool never has to contain the second 5-hole: once {1,2} is gone
    // both holes are gone.
    auto r = solve_edit(two_c5_sharing_edge(), with("one"));
    CHECK(r.objective == 1);
    CHECK(r.telemetry.hole_cuts <= 2);
}

TEST_CASE("heuristic incumbents never hurt") {
    auto g = generate_er({16, 0.5, 2});
    auto base = solve_edit(g);
    auto h = solve_edit(g, with("all+hc+hr1"));
    CHECK(h.objective == base.objective);
    CHECK(h.telemetry.heuristic_calls > 0);
}

TEST_CASE("precheck") {
    auto p = precheck(cycle_graph(5), {});
    CHECK_FALSE(p.pass);
    REQUIRE(p.witness);
    CHECK(p.witness->vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(precheck(cycle_graph(5), {VertexPair(0, 2)}).pass);
    auto a = precheck(complement(cycle_graph(7)), {});
    CHECK_FALSE(a.pass);
    REQUIRE(a.witness);
    CHECK(a.witness->kind == HoleKind::Antihole);
}

TEST_CASE("sandwich examples") {
    auto all = solve_sandwich(cycle_graph(5), oracle::non_edges(cycle_graph(5)));
    CHECK(all.status == SolveStatus::SandwichFeasible);
    CHECK(all.objective == 0);
    CHECK(is_perfect(*all.output));

    auto none = solve_sandwich(cycle_graph(5), {});
    CHECK(none.status == SolveStatus::SandwichInfeasiblePrecheck);
    CHECK_FALSE(none.output);

    auto one = solve_sandwich(cycle_graph(7), {VertexPair(0, 2)});
    REQUIRE(one.status == SolveStatus::SandwichFeasible);
    Graph want = cycle_graph(7);
    want.add_edge(0, 2);
    CHECK(*one.output == want);

    CHECK_THROWS_AS(solve_sandwich(cycle_graph(5), {VertexPair(0, 1)}), std::invalid_argument);
}

TEST_CASE("sandwich proven infeasible past the precheck") {
    // C7 with one optional chord at distance 3: the only candidate splits it
    // into a 4-cycle and a 5-cycle, so every option leaves an odd hole.
    auto r = solve_sandwich(cycle_graph(7), {VertexPair(0, 3)});
    CHECK(r.status == SolveStatus::SandwichInfeasibleProven);
}

TEST_CASE("sandwich degenerations and containment") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto g = generate_er({10, 0.5, 30 + s});
        auto rec = solve_sandwich(g, {});
        const bool feasible = rec.status == SolveStatus::SandwichFeasible;
        CHECK(feasible == oracle::is_perfect(g));
        CHECK(rec.status != SolveStatus::TimeLimit);

        auto full = solve_sandwich(g, oracle::non_edges(g));
        CHECK(full.status == SolveStatus::SandwichFeasible);

        auto opt = sample_optional_pairs(g, 0.5, s);
        auto r = solve_sandwich(g, opt);
        CHECK(r.status != SolveStatus::TimeLimit);
        if (r.status == SolveStatus::SandwichFeasible) {
            CHECK(is_perfect(*r.output));
            CHECK(supergraph(*r.output, g));
            Graph upper = g;
            for (auto p : opt) upper.add_edge(p.i, p.j);
            CHECK(supergraph(upper, *r.output));
        } else {
            // Cross-check infeasibility with brute force over the optional pairs.
            CHECK_FALSE(oracle::min_flips(g, opt, oracle::is_perfect).has_value());
        }
    }
}

TEST_CASE("instances and time limits") {
    Instance inst;
    inst.kind = ProblemKind::Edit;
    inst.input = cycle_graph(5);
    inst.optional_pairs = {VertexPair(0, 2)};
    CHECK_THROWS_AS(solve(inst), std::invalid_argument);
    inst.optional_pairs.clear();
    CHECK(solve(inst).objective == 1);

    StrategyConfig quick;
    quick.time_limit_s = 0.0;
    auto r = solve_edit(generate_er({24, 0.5, 1}), quick);
    if (r.status == SolveStatus::TimeLimit) {
        CHECK(r.objective.has_value());
        CHECK(r.lower_bound <= *r.objective);
        CHECK(r.gap_pct >= 0.0);
    }
}

TEST_CASE("status strings") {
    CHECK(std::string(to_string(SolveStatus::Optimal)) == "optimal");
    CHECK(std::string(to_string(SolveStatus::SandwichFeasible)) == "feasible");
    CHECK(std::string(to_string(SolveStatus::SandwichInfeasiblePrecheck)) == "infeasible_precheck");
    CHECK(std::string(to_string(SolveStatus::SandwichInfeasibleProven)) == "infeasible_proven");
    CHECK(std::string(to_string(SolveStatus::TimeLimit)) == "timelimit");
}

}  // TEST_SUITE
