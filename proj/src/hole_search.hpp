#pragma once

// Internal DFS shared by the serial and OpenMP enumerators.

#include <bit>
#include <vector>

#include "perfect/holes.hpp"

namespace perfect::detail {

/// Grows chordless paths from a fixed start vertex u, only through vertices
/// with label > u, and reports every chordless odd cycle of length >=
/// min_length whose minimum vertex is u (one traversal direction only).
class MinVertexHoleSearch {
public:
    MinVertexHoleSearch(const Graph& g, std::size_t min_length, HoleKind kind)
        : g_(g), min_length_(min_length), kind_(kind), in_path_(g.words(), 0), internal_(g.words(), 0) {
        path_.reserve(static_cast<std::size_t>(g.order()));
    }

    /// Appends holes starting at u to `out`; stops once out.size() == cap.
    void run(int u, std::vector<Hole>& out, std::size_t cap) {
        out_ = &out;
        cap_ = cap;
        path_.assign(1, u);
        set(in_path_, u);
        extend();
        clear(in_path_, u);
        path_.clear();
    }

private:
    static void set(std::vector<Word>& s, int v) { s[v / kWordBits] |= Word{1} << (v % kWordBits); }
    static void clear(std::vector<Word>& s, int v) { s[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    bool touches_internal(int x) const {
        auto row = g_.neighbors(x);
        for (std::size_t w = 0; w < internal_.size(); ++w)
            if (row[w] & internal_[w]) return true;
        return false;
    }

    bool full() const { return out_->size() >= cap_; }

    void extend() {
        const int u = path_.front();
        const int v = path_.back();
        auto row = g_.neighbors(v);
        const int first_word = (u + 1) / kWordBits;
        for (int w = first_word; w < g_.words(); ++w) {
            Word cand = row[static_cast<std::size_t>(w)] & ~in_path_[static_cast<std::size_t>(w)];
            if (w == first_word) {
                int low = (u + 1) % kWordBits;
                cand &= low == 0 ? ~Word{0} : ~((Word{1} << low) - 1);
            }
            while (cand) {
                int x = w * kWordBits + std::countr_zero(cand);
                cand &= cand - 1;
                if (touches_internal(x)) continue;
                if (path_.size() >= 2 && g_.adjacent(u, x)) {
                    // Closes a chordless cycle of length |path|+1.
                    std::size_t len = path_.size() + 1;
                    if (len % 2 == 1 && len >= min_length_ && path_[1] < x) {
                        std::vector<int> cyc(path_);
                        cyc.push_back(x);
                        out_->push_back(Hole{std::move(cyc), kind_});
                        if (full()) return;
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
                if (full()) return;
            }
        }
    }

    const Graph& g_;
    std::size_t min_length_;
    HoleKind kind_;
    std::vector<int> path_;
    std::vector<Word> in_path_;
    std::vector<Word> internal_;
    std::vector<Hole>* out_ = nullptr;
    std::size_t cap_ = 0;
};

}  // namespace perfect::detail
