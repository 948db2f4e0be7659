#include "perfect/holes.hpp"

#include <algorithm>
#include <limits>

#include "hole_search.hpp"

namespace perfect {

bool Hole::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

Hole canonical_hole(std::vector<int> cycle, HoleKind kind) {
    if (cycle.empty()) return Hole{std::move(cycle), kind};
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
    return Hole{std::move(cycle), kind};
}

bool is_realized(const Graph& g, const Hole& h) {
    const auto k = h.vertices.size();
    if (k < 5 || k % 2 == 0) return false;
    const bool want_edge_on_cycle = h.kind == HoleKind::Hole;
    for (std::size_t a = 0; a < k; ++a) {
        int va = h.vertices[a];
        if (va < 0 || va >= g.order()) return false;
        for (std::size_t b = a + 1; b < k; ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            bool edge = g.adjacent(va, h.vertices[b]);
            if (h.vertices[b] == va) return false;
            if (edge != (consecutive == want_edge_on_cycle)) return false;
        }
    }
    return true;
}

namespace reference {

std::vector<Hole> find_odd_holes_serial(const Graph& g, Limit limit, std::size_t min_length, HoleKind kind) {
    std::vector<Hole> out;
    const std::size_t cap = limit.value_or(std::numeric_limits<std::size_t>::max());
    if (cap == 0) return out;
    detail::MinVertexHoleSearch search(g, min_length, kind);
    for (int u = 0; u < g.order() && out.size() < cap; ++u) search.run(u, out, cap);
    return out;
}

}  // namespace reference

namespace {

std::vector<Hole> enumerate(const Graph& g, Limit limit, std::size_t min_length, HoleKind kind) {
    // The OpenMP kernel produces the identical list; with a limit the serial
    // prefix enumeration stops earlier, so it is used directly.
    if (!limit && g.order() >= 16) return parallel::find_odd_holes_omp(g, min_length, kind);
    return reference::find_odd_holes_serial(g, limit, min_length, kind);
}

/// Chordless paths grown from vp.i in every direction; a closing cycle is
/// kept when it is odd, contains vp.j and is traversed in the direction whose
/// second vertex is smaller than its last. When vp is an edge of g it must be
/// a cycle edge of any hole through both endpoints, so the path is seeded
/// with it and each hole is met exactly once.
class PairHoleSearch {
public:
    PairHoleSearch(const Graph& g, VertexPair vp, std::size_t min_length, HoleKind kind)
        : g_(g), a_(vp.i), b_(vp.j), min_length_(min_length), kind_(kind), in_path_(g.words(), 0),
          internal_(g.words(), 0) {}

    std::vector<Hole> run() {
        std::vector<Hole> out;
        out_ = &out;
        path_.assign(1, a_);
        set(in_path_, a_);
        if (g_.adjacent(a_, b_)) {
            seeded_ = true;
            path_.push_back(b_);
            set(in_path_, b_);
        }
        extend();
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static void set(std::vector<Word>& s, int v) { s[v / kWordBits] |= Word{1} << (v % kWordBits); }
    static void clear(std::vector<Word>& s, int v) { s[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    static bool test(const std::vector<Word>& s, int v) { return (s[v / kWordBits] >> (v % kWordBits)) & 1U; }

    bool touches_internal(int x) const {
        auto row = g_.neighbors(x);
        for (std::size_t w = 0; w < internal_.size(); ++w)
            if (row[w] & internal_[w]) return true;
        return false;
    }

    void extend() {
        const int v = path_.back();
        const bool has_b = test(in_path_, b_);
        // b can no longer join once it is adjacent to an internal vertex.
        if (!has_b && touches_internal(b_)) return;
        auto row = g_.neighbors(v);
        for (int w = 0; w < g_.words(); ++w) {
            Word cand = row[static_cast<std::size_t>(w)] & ~in_path_[static_cast<std::size_t>(w)];
            while (cand) {
                int x = w * kWordBits + std::countr_zero(cand);
                cand &= cand - 1;
                if (touches_internal(x)) continue;
                if (path_.size() >= 2 && g_.adjacent(a_, x)) {
                    std::size_t len = path_.size() + 1;
                    if (len % 2 == 1 && len >= min_length_ && (has_b || x == b_) && (seeded_ || path_[1] < x)) {
                        std::vector<int> cyc(path_);
                        cyc.push_back(x);
                        out_->push_back(canonical_hole(std::move(cyc), kind_));
                    }
                    continue;
                }
                if (path_.size() >= 2) set(internal_, v);
                set(in_path_, x);
                path_.push_back(x);
                extend();
                path_.pop_back();
                clear(in_path_, x);
                if (path_.size() >= 2) clear(internal_, v);
            }
        }
    }

    const Graph& g_;
    int a_;
    int b_;
    std::size_t min_length_;
    HoleKind kind_;
    bool seeded_ = false;
    std::vector<int> path_;
    std::vector<Word> in_path_;
    std::vector<Word> internal_;
    std::vector<Hole>* out_ = nullptr;
};

}  // namespace

std::vector<Hole> find_odd_holes(const Graph& g, Limit limit) {
    return enumerate(g, limit, 5, HoleKind::Hole);
}

std::vector<Hole> find_odd_antiholes_of_complement(const Graph& complement_graph, Limit limit) {
    return enumerate(complement_graph, limit, 7, HoleKind::Antihole);
}

std::vector<Hole> find_odd_antiholes(const Graph& g, Limit limit) {
    return find_odd_antiholes_of_complement(complement(g), limit);
}

std::vector<Hole> find_odd_holes_through_pair(const Graph& g, VertexPair vp) {
    if (vp.i == vp.j) return {};
    return PairHoleSearch(g, vp, 5, HoleKind::Hole).run();
}

std::vector<Hole> find_odd_antiholes_through_pair_of_complement(const Graph& complement_graph, VertexPair vp) {
    if (vp.i == vp.j) return {};
    return PairHoleSearch(complement_graph, vp, 7, HoleKind::Antihole).run();
}

bool is_perfect(const Graph& g) {
    return find_odd_holes(g, 1).empty() && find_odd_antiholes(g, 1).empty();
}

HoleSet find_all_structures(const Graph& g) {
    return {find_odd_holes(g), find_odd_antiholes(g)};
}

}  // namespace perfect
