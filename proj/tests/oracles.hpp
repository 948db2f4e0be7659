#pragma once
// Brute-force reference implementations used only by the tests. Everything
// here is exponential and deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "perfect/graph.hpp"
#include "perfect/holes.hpp"

namespace oracle {

using perfect::Graph;
using perfect::Hole;
using perfect::HoleKind;
using perfect::VertexPair;

// Does the vertex set S (bitmask) induce a single cycle in g?
inline bool induces_cycle(const Graph& g, const std::vector<int>& s) {
    const int k = static_cast<int>(s.size());
    for (int a = 0; a < k; ++a) {
        int deg = 0;
        for (int b = 0; b < k; ++b)
            if (a != b && g.adjacent(s[a], s[b])) ++deg;
        if (deg != 2) return false;
    }
    // 2-regular: connected iff walking from s[0] visits all k vertices.
    int prev = -1, cur = s[0], steps = 0;
    do {
        int next = -1;
        for (int v : s)
            if (v != cur && v != prev && g.adjacent(cur, v)) {
                next = v;
                break;
            }
        if (next < 0) return false;
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != s[0] && steps <= k);
    return steps == k;
}

// Cyclic order of an induced cycle, starting anywhere.
inline std::vector<int> cycle_order(const Graph& g, const std::vector<int>& s) {
    std::vector<int> order{s[0]};
    int prev = -1, cur = s[0];
    while (true) {
        int next = -1;
        for (int v : s)
            if (v != cur && v != prev && g.adjacent(cur, v)) {
                next = v;
                break;
            }
        if (next == s[0]) break;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Every vertex subset of odd size >= min_len that induces a cycle in g.
inline std::set<Hole> subset_cycles(const Graph& g, std::size_t min_len, HoleKind kind) {
    const int n = g.order();
    std::set<Hole> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k < static_cast<int>(min_len) || k % 2 == 0) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.push_back(v);
        if (induces_cycle(g, s)) out.insert(perfect::canonical_hole(cycle_order(g, s), kind));
    }
    return out;
}

inline std::set<Hole> odd_holes(const Graph& g) { return subset_cycles(g, 5, HoleKind::Hole); }

inline std::set<Hole> odd_antiholes(const Graph& g) {
    return subset_cycles(perfect::complement(g), 7, HoleKind::Antihole);
}

inline bool is_perfect(const Graph& g) {
    return odd_holes(g).empty() && odd_antiholes(g).empty();
}

// Distinct labeled odd-hole configurations of length i on n vertices, by
// listing every sequence of i distinct vertices and identifying rotations
// and reflections.
inline std::uint64_t count_configurations(int n, int i) {
    std::set<std::vector<int>> seen;
    std::vector<int> seq;
    std::vector<char> used(n, 0);
    std::function<void()> rec = [&] {
        if (static_cast<int>(seq.size()) == i) {
            seen.insert(perfect::canonical_hole(seq, HoleKind::Hole).vertices);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            seq.push_back(v);
            rec();
            seq.pop_back();
            used[v] = 0;
        }
    };
    rec();
    return seen.size();
}

// Smallest number of flips among `eligible` pairs that makes g satisfy
// `accept`, by trying all flip sets of size 0, 1, 2, ...
inline std::optional<int> min_flips(const Graph& g, const std::vector<VertexPair>& eligible,
                                    const std::function<bool(const Graph&)>& accept, int max_flips = 64) {
    const int m = static_cast<int>(eligible.size());
    for (int k = 0; k <= std::min(m, max_flips); ++k) {
        std::vector<int> idx(k);
        for (int t = 0; t < k; ++t) idx[t] = t;
        while (true) {
            Graph h = g;
            for (int t : idx) h.flip(eligible[t]);
            if (accept(h)) return k;
            int t = k - 1;
            while (t >= 0 && idx[t] == m - k + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return std::nullopt;
}

inline std::vector<VertexPair> all_pairs(int n) {
    std::vector<VertexPair> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

inline std::vector<VertexPair> non_edges(const Graph& g) {
    std::vector<VertexPair> out;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

inline int min_edit(const Graph& g) { return *min_flips(g, all_pairs(g.order()), is_perfect); }
inline int min_completion(const Graph& g) { return *min_flips(g, non_edges(g), is_perfect); }

}  // namespace oracle
