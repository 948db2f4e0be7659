#include "perfect/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace perfect {

PairCountIndex::PairCountIndex(int n) : n_(n), by_pair_(pair_count(n)) {}

PairCountIndex PairCountIndex::build(int n, const std::vector<Hole>& structures) {
    PairCountIndex index(n);
    for (const auto& h : structures) index.add(h);
    return index;
}

PairCountIndex::HoleId PairCountIndex::add(Hole h) {
    const auto id = static_cast<HoleId>(holes_.size());
    const auto& vs = h.vertices;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) by_pair_[pair_index(n_, vs[a], vs[b])].push_back(id);
    holes_.push_back(std::move(h));
    alive_.push_back(1);
    ++live_;
    return id;
}

void PairCountIndex::remove(HoleId id) {
    if (id >= holes_.size() || !alive_[id]) throw std::invalid_argument("PairCountIndex: unknown hole id");
    const auto& vs = holes_[id].vertices;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
            auto& list = by_pair_[pair_index(n_, vs[a], vs[b])];
            auto it = std::find(list.begin(), list.end(), id);
            *it = list.back();
            list.pop_back();
        }
    alive_[id] = 0;
    --live_;
}

std::size_t PairCountIndex::total_mass() const {
    std::size_t total = 0;
    for (const auto& list : by_pair_) total += list.size();
    return total;
}

std::vector<std::size_t> PairCountIndex::counts() const {
    std::vector<std::size_t> out(by_pair_.size());
    for (std::size_t i = 0; i < by_pair_.size(); ++i) out[i] = by_pair_[i].size();
    return out;
}

std::vector<Hole> PairCountIndex::structures() const {
    std::vector<Hole> out;
    out.reserve(live_);
    for (std::size_t i = 0; i < holes_.size(); ++i)
        if (alive_[i]) out.push_back(holes_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

bool PairCountIndex::equivalent(const PairCountIndex& other) const {
    return n_ == other.n_ && counts() == other.counts() && structures() == other.structures();
}

void refresh_after_flip(PairCountIndex& index, VertexPair flipped, const std::vector<PairCountIndex::HoleId>& destroyed,
                        const std::vector<Hole>& created) {
    (void)flipped;
    for (auto id : destroyed) index.remove(id);
    for (const auto& h : created) index.add(h);
}

HeuristicResult run_heuristic(const Graph& g, HeuristicMode mode) {
    std::vector<bool> eligible(pair_count(g.order()), true);
    if (mode == HeuristicMode::AdditionsOnly) {
        std::size_t idx = 0;
        for (int i = 0; i < g.order(); ++i)
            for (int j = i + 1; j < g.order(); ++j, ++idx) eligible[idx] = !g.adjacent(i, j);
    }
    return run_heuristic(g, eligible);
}

HeuristicResult run_heuristic(const Graph& input, const std::vector<bool>& eligible) {
    const auto start = std::chrono::steady_clock::now();
    const int n = input.order();
    const std::size_t pairs = pair_count(n);
    if (eligible.size() != pairs) throw std::invalid_argument("run_heuristic: eligibility mask has wrong size");

    HeuristicResult result;
    Graph g = input;
    Graph gc = complement(input);
    auto all = find_all_structures(g);
    PairCountIndex index(n);
    for (auto& h : all.holes) index.add(std::move(h));
    for (auto& h : all.antiholes) index.add(std::move(h));

    std::vector<VertexPair> pair_of(pairs);
    {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pair_of[idx++] = VertexPair(i, j);
    }

    std::vector<char> failed(pairs, 0);
    bool stuck = false;
    while (!index.empty()) {
        std::fill(failed.begin(), failed.end(), 0);
        for (;;) {
            std::size_t best = pairs;
            std::size_t best_count = 0;
            for (std::size_t idx = 0; idx < pairs; ++idx) {
                if (!eligible[idx] || failed[idx]) continue;
                const std::size_t c = index.count(pair_of[idx]);
                if (best == pairs || c > best_count) {
                    best = idx;
                    best_count = c;
                }
            }
            // A pair in no known structure cannot destroy more than it creates,
            // so once the maximum is zero every remaining pair would be reverted.
            if (best == pairs || best_count == 0) {
                stuck = true;
                break;
            }
            const VertexPair vp = pair_of[best];
            ++result.trials;
            g.flip(vp);
            gc.flip(vp);
            auto created = find_odd_holes_through_pair(g, vp);
            auto created_anti = find_odd_antiholes_through_pair_of_complement(gc, vp);
            if (created.size() + created_anti.size() >= best_count) {
                g.flip(vp);
                gc.flip(vp);
                failed[best] = 1;
                continue;
            }
            created.insert(created.end(), std::make_move_iterator(created_anti.begin()),
                           std::make_move_iterator(created_anti.end()));
            const auto destroyed = index.holes_containing(vp);
            refresh_after_flip(index, vp, destroyed, created);
            result.flips.push_back(vp);
            break;
        }
        if (stuck) break;
    }

    result.perfect = !stuck;
    result.remaining = index.size();
    result.rounds = result.flips.size() + 1;
    result.graph = std::move(g);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace perfect
