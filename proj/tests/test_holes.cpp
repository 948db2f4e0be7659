#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "perfect/holes.hpp"

using namespace perfect;

namespace {

std::set<Hole> as_set(const std::vector<Hole>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("holes") {

TEST_CASE("known counts") {
    CHECK(find_odd_holes(cycle_graph(5)).size() == 1);
    CHECK(find_odd_holes(cycle_graph(6)).empty());
    CHECK(find_odd_holes(cycle_graph(7)).size() == 1);
    CHECK(find_odd_holes(petersen_graph()).size() == 12);
    CHECK(oracle::odd_holes(petersen_graph()).size() == 12);
    CHECK(find_odd_antiholes(complement(cycle_graph(7))).size() == 1);
    CHECK(find_odd_holes(complement(cycle_graph(7))).empty());
    // A 5-antihole is a 5-hole and is reported only as a hole.
    CHECK(find_odd_antiholes(cycle_graph(5)).empty());
    CHECK(find_odd_holes(complete_graph(8)).empty());
    CHECK(find_odd_holes(Graph(0)).empty());
}

TEST_CASE("holes are canonical") {
    auto holes = find_odd_holes(cycle_graph(7));
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(canonical_hole({3, 2, 1, 0, 4}, HoleKind::Hole).vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(canonical_hole({2, 4, 0, 1, 3}, HoleKind::Hole).vertices == std::vector<int>{0, 1, 3, 2, 4});
    auto two = find_odd_holes(two_c5_sharing_edge());
    CHECK(two.size() == 2);
    for (const auto& h : two) {
        CHECK(h.vertices.front() == *std::min_element(h.vertices.begin(), h.vertices.end()));
        CHECK(h.vertices[1] < h.vertices.back());
        CHECK(is_realized(two_c5_sharing_edge(), h));
    }
}

TEST_CASE("limit returns a prefix") {
    auto g = generate_er({14, 0.5, 5});
    auto all = find_odd_holes(g);
    REQUIRE(all.size() > 3);
    auto first = find_odd_holes(g, 3);
    CHECK(first == std::vector<Hole>(all.begin(), all.begin() + 3));
    CHECK(find_odd_holes(g, 0).empty());
    auto anti = find_odd_antiholes(g);
    CHECK(find_odd_antiholes(g, 1).size() == std::min<std::size_t>(1, anti.size()));
}

TEST_CASE("enumeration matches the subset oracle") {
    int count = 0;
    for (int n = 5; n <= 11; ++n)
        for (double p : {0.25, 0.5, 0.75})
            for (std::uint64_t s = 0; s < 2; ++s) {
                auto g = generate_er({n, p, s * 1000 + n});
                CHECK(as_set(find_odd_holes(g)) == oracle::odd_holes(g));
                CHECK(as_set(find_odd_antiholes(g)) == oracle::odd_antiholes(g));
                CHECK(is_perfect(g) == oracle::is_perfect(g));
                ++count;
            }
    CHECK(count == 42);
}

TEST_CASE("each hole is reported once") {
    auto g = generate_er({16, 0.4, 11});
    auto holes = find_odd_holes(g);
    CHECK(as_set(holes).size() == holes.size());
}

TEST_CASE("OpenMP kernel reproduces the serial enumerator exactly") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        auto g = generate_er({24, 0.5, s});
        CHECK(parallel::find_odd_holes_omp(g, 5, HoleKind::Hole) ==
              reference::find_odd_holes_serial(g, std::nullopt, 5, HoleKind::Hole));
        auto c = complement(g);
        CHECK(parallel::find_odd_holes_omp(c, 7, HoleKind::Antihole) ==
              reference::find_odd_holes_serial(c, std::nullopt, 7, HoleKind::Antihole));
    }
}

TEST_CASE("through-pair search equals filtering the full list") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        auto g = generate_er({12, 0.5, 100 + s});
        auto all = find_odd_holes(g);
        auto anti = find_odd_antiholes(g);
        auto gc = complement(g);
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j) {
                std::vector<Hole> want, want_anti;
                for (const auto& h : all)
                    if (h.contains(i) && h.contains(j)) want.push_back(h);
                for (const auto& h : anti)
                    if (h.contains(i) && h.contains(j)) want_anti.push_back(h);
                CHECK(find_odd_holes_through_pair(g, VertexPair(i, j)) == want);
                CHECK(find_odd_antiholes_through_pair_of_complement(gc, VertexPair(i, j)) == want_anti);
            }
    }
}

TEST_CASE("new holes after a flip contain the flipped pair") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        auto g = generate_er({11, 0.5, 300 + s});
        auto before = find_all_structures(g);
        std::set<Hole> old(before.holes.begin(), before.holes.end());
        old.insert(before.antiholes.begin(), before.antiholes.end());
        for (auto vp : oracle::all_pairs(11)) {
            Graph h = g;
            h.flip(vp);
            auto after = find_all_structures(h);
            for (const auto* list : {&after.holes, &after.antiholes})
                for (const auto& x : *list)
                    if (!old.count(x)) CHECK((x.contains(vp.i) && x.contains(vp.j)));
        }
    }
}

TEST_CASE("perfect families") {
    CHECK(is_perfect(cycle_graph(4)));
    CHECK(is_perfect(cycle_graph(6)));
    CHECK_FALSE(is_perfect(cycle_graph(5)));
    CHECK_FALSE(is_perfect(complement(cycle_graph(9))));
    CHECK(is_perfect(complete_graph(9)));
    // A path (a tree) is perfect.
    Graph path(9);
    for (int v = 0; v + 1 < 9; ++v) path.add_edge(v, v + 1);
    CHECK(is_perfect(path));
}

}  // TEST_SUITE
