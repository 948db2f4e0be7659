#include "perfect/master.hpp"

#include <algorithm>
#include <cmath>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace perfect {

// --- constraint / domain basics ----------------------------------------------

PatternConstraint PatternConstraint::from_hole(const Hole& h) {
    PatternConstraint c;
    c.source_kind = h.kind;
    c.source_len = h.size();
    const std::size_t k = h.size();
    const bool cycle_value = h.kind == HoleKind::Hole;
    c.literals.reserve(k * (k - 1) / 2);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == k - 1);
            c.literals.push_back({VertexPair(h.vertices[a], h.vertices[b]), consecutive == cycle_value});
        }
    std::sort(c.literals.begin(), c.literals.end());
    return c;
}

bool PatternConstraint::satisfied_by(const Graph& assignment) const {
    for (const auto& lit : literals)
        if (assignment.adjacent(lit.pair.i, lit.pair.j) != lit.required) return true;
    return false;
}

VariableDomain::VariableDomain(int n, PairState initial) : n_(n), states_(pair_count(n), initial) {}

void VariableDomain::fix(VertexPair p, bool value) {
    states_[pair_index(n_, p.i, p.j)] = value ? PairState::FixedTrue : PairState::FixedFalse;
}

void VariableDomain::release(VertexPair p) { states_[pair_index(n_, p.i, p.j)] = PairState::Free; }

std::size_t VariableDomain::free_count() const {
    return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), PairState::Free));
}

bool VariableDomain::admits(const Graph& g) const {
    if (g.order() != n_) return false;
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j, ++idx) {
            auto s = states_[idx];
            if (s == PairState::FixedTrue && !g.adjacent(i, j)) return false;
            if (s == PairState::FixedFalse && g.adjacent(i, j)) return false;
        }
    return true;
}

const char* to_string(MasterStatus s) {
    switch (s) {
        case MasterStatus::Optimal: return "optimal";
        case MasterStatus::Infeasible: return "infeasible";
        case MasterStatus::TimeLimit: return "timelimit";
    }
    return "?";
}

double gap_percent(std::optional<long> upper_bound, long lower_bound) {
    if (!upper_bound) return 100.0;
    if (*upper_bound <= 0) return 0.0;
    return static_cast<double>(*upper_bound - lower_bound) / static_cast<double>(*upper_bound) * 100.0;
}

// --- standalone bound ----------------------------------------------------------

long lower_bound_disjoint_packing(const Graph& input, const VariableDomain& domains,
                                  const std::vector<PatternConstraint>& constraints,
                                  const std::vector<std::optional<bool>>& partial) {
    const int n = input.order();
    long committed = 0;
    for (std::size_t idx = 0; idx < partial.size(); ++idx) {
        if (!partial[idx]) continue;
        auto p = pair_at(n, idx);
        if (domains.state(p) == PairState::Free && *partial[idx] != input.adjacent(p.i, p.j)) ++committed;
    }
    struct Violated {
        std::size_t index;
        std::vector<std::size_t> flippable;
    };
    std::vector<Violated> violated;
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        bool satisfied = false;
        std::vector<std::size_t> flippable;
        for (const auto& lit : constraints[ci].literals) {
            auto idx = pair_index(n, lit.pair.i, lit.pair.j);
            bool value;
            switch (domains.state(lit.pair)) {
                case PairState::FixedTrue: value = true; break;
                case PairState::FixedFalse: value = false; break;
                default:
                    if (idx < partial.size() && partial[idx]) {
                        value = *partial[idx];
                    } else {
                        value = input.adjacent(lit.pair.i, lit.pair.j);
                        flippable.push_back(idx);
                    }
            }
            if (value != lit.required) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) violated.push_back({ci, std::move(flippable)});
    }
    std::stable_sort(violated.begin(), violated.end(),
                     [](const Violated& a, const Violated& b) { return a.flippable.size() < b.flippable.size(); });
    std::vector<char> used(pair_count(n), 0);
    long packed = 0;
    for (const auto& v : violated) {
        if (std::any_of(v.flippable.begin(), v.flippable.end(), [&](std::size_t p) { return used[p] != 0; }))
            continue;
        for (auto p : v.flippable) used[p] = 1;
        ++packed;
    }
    return committed + packed;
}

// --- search engine -------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

enum class Value : std::uint8_t { Unassigned, Flipped, Kept };

struct Occurrence {
    std::uint32_t clause;
    bool flip_literal;  // satisfied by flipping the pair (else by keeping it)
};

struct Clause {
    std::vector<std::uint32_t> flips;  // pairs whose input state matches the pattern
    std::vector<std::uint32_t> keeps;  // pairs whose input state already differs
    bool dead = false;                 // satisfied through a fixed pair
    int f_flipped = 0;
    int k_kept = 0;
    int f_unassigned = 0;
    int k_unassigned = 0;

    bool satisfied() const { return dead || f_flipped > 0 || k_kept > 0; }
    bool violated() const { return !satisfied() && k_unassigned == 0; }
};

struct LiteralKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& key) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto x : key) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

class Search final : public SearchControl {
public:
    Search(const Graph& input, const VariableDomain& domains, const MasterOptions& options, MasterCallbacks& cb)
        : input_(input), domains_(domains), options_(options), callbacks_(cb), n_(input.order()),
          pairs_(pair_count(input.order())), base_(input), value_(pairs_, Value::Unassigned), occ_(pairs_),
          stamp_(pairs_, 0), load_(pairs_, 0.0) {
        if (domains.order() != n_) throw std::invalid_argument("solve_master: domain order mismatch");
        input_state_.resize(pairs_);
        free_.resize(pairs_);
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++idx) {
                input_state_[idx] = input.adjacent(i, j);
                auto s = domains.state(i, j);
                free_[idx] = s == PairState::Free;
                if (s != PairState::Free) base_.set_edge(i, j, s == PairState::FixedTrue);
            }
        pos_in_violated_.reserve(1024);
    }

    MasterResult run(std::vector<PatternConstraint> pool) {
        start_ = Clock::now();
        for (auto& c : pool) add_constraint(c);
        if (options_.incumbent) offer_incumbent(*options_.incumbent);
        root_constraints_ = clauses_.size();

        recurse();

        MasterResult r;
        r.nodes = nodes_;
        r.candidates = candidates_;
        r.pool_size = clauses_.size();
        r.lazy_cuts = clauses_.size() - root_constraints_;
        r.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        if (incumbent_) r.assignment = incumbent_;
        if (timed_out_) {
            r.status = MasterStatus::TimeLimit;
            r.objective = ub_.value_or(0);
            r.lower_bound = ub_ ? std::min(*ub_, timeout_lb_) : timeout_lb_;
        } else if (!incumbent_) {
            r.status = MasterStatus::Infeasible;
        } else {
            r.status = MasterStatus::Optimal;
            r.objective = *ub_;
            r.lower_bound = *ub_;
        }
        return r;
    }

    // SearchControl
    Graph materialize() const override {
        Graph g = base_;
        for (auto idx : trail_)
            if (value_[idx] == Value::Flipped) {
                auto p = pair_at_fast(idx);
                g.flip(p);
            }
        return g;
    }

    bool offer_incumbent(const Graph& g) override {
        if (g.order() != n_ || !domains_.admits(g)) return false;
        long cost = 0;
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++idx)
                if (free_[idx] && g.adjacent(i, j) != input_state_[idx]) ++cost;
        if (ub_ && cost >= *ub_) return false;
        for (const auto& c : originals_)
            if (!c.satisfied_by(g)) return false;
        ub_ = cost;
        incumbent_ = g;
        return true;
    }

    std::optional<long> upper_bound() const override { return ub_; }
    std::size_t node_count() const override { return nodes_; }

private:
    VertexPair pair_at_fast(std::uint32_t idx) const {
        if (pair_lookup_.empty()) {
            pair_lookup_.reserve(pairs_);
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j) pair_lookup_.emplace_back(i, j);
        }
        return pair_lookup_[idx];
    }

    // Returns true if the constraint was new.
    bool add_constraint(const PatternConstraint& pc) {
        std::vector<std::uint64_t> key;
        key.reserve(pc.literals.size());
        for (const auto& lit : pc.literals)
            key.push_back(static_cast<std::uint64_t>(pair_index(n_, lit.pair.i, lit.pair.j)) * 2 + lit.required);
        std::sort(key.begin(), key.end());
        if (!seen_.insert(key).second) return false;

        Clause c;
        for (const auto& lit : pc.literals) {
            auto idx = static_cast<std::uint32_t>(pair_index(n_, lit.pair.i, lit.pair.j));
            if (!free_[idx]) {
                if (base_.adjacent(lit.pair.i, lit.pair.j) != lit.required) c.dead = true;
                continue;
            }
            if (input_state_[idx] == lit.required)
                c.flips.push_back(idx);
            else
                c.keeps.push_back(idx);
        }
        std::sort(c.flips.begin(), c.flips.end());
        std::sort(c.keeps.begin(), c.keeps.end());
        const auto id = static_cast<std::uint32_t>(clauses_.size());
        if (!c.dead) {
            for (auto v : c.flips) {
                occ_[v].push_back({id, true});
                switch (value_[v]) {
                    case Value::Unassigned: ++c.f_unassigned; break;
                    case Value::Flipped: ++c.f_flipped; break;
                    case Value::Kept: break;
                }
            }
            for (auto v : c.keeps) {
                occ_[v].push_back({id, false});
                switch (value_[v]) {
                    case Value::Unassigned: ++c.k_unassigned; break;
                    case Value::Kept: ++c.k_kept; break;
                    case Value::Flipped: break;
                }
            }
        }
        clauses_.push_back(std::move(c));
        originals_.push_back(pc);
        lambda_.push_back(0.0);
        pos_in_violated_.push_back(-1);
        refresh(id);
        return true;
    }

    void refresh(std::uint32_t id) {
        const Clause& c = clauses_[id];
        const bool v = c.violated();
        int& pos = pos_in_violated_[id];
        if (v && pos < 0) {
            pos = static_cast<int>(violated_.size());
            violated_.push_back(id);
        } else if (!v && pos >= 0) {
            auto last = violated_.back();
            violated_[static_cast<std::size_t>(pos)] = last;
            pos_in_violated_[last] = pos;
            violated_.pop_back();
            pos = -1;
        }
        if (!c.satisfied() && c.f_unassigned <= 1 && (c.k_unassigned == 0 || (c.f_unassigned == 0 && c.k_unassigned == 1)))
            queue_.push_back(id);
    }

    void assign(std::uint32_t v, Value val) {
        value_[v] = val;
        trail_.push_back(v);
        if (val == Value::Flipped) ++cost_;
        for (const auto& o : occ_[v]) {
            Clause& c = clauses_[o.clause];
            if (o.flip_literal) {
                --c.f_unassigned;
                if (val == Value::Flipped) ++c.f_flipped;
            } else {
                --c.k_unassigned;
                if (val == Value::Kept) ++c.k_kept;
            }
            refresh(o.clause);
        }
    }

    // The propagation queue is kept across undo: it must hold every clause
    // that is unit or conflicting in the current state, and lazy cuts added
    // deep in the tree can already be unit at shallower levels.
    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            auto v = trail_.back();
            trail_.pop_back();
            const Value val = value_[v];
            value_[v] = Value::Unassigned;
            if (val == Value::Flipped) --cost_;
            for (const auto& o : occ_[v]) {
                Clause& c = clauses_[o.clause];
                if (o.flip_literal) {
                    ++c.f_unassigned;
                    if (val == Value::Flipped) --c.f_flipped;
                } else {
                    ++c.k_unassigned;
                    if (val == Value::Kept) --c.k_kept;
                }
                refresh(o.clause);
            }
        }
    }

    // Unit propagation; false on conflict.
    bool propagate() {
        while (!queue_.empty()) {
            auto id = queue_.back();
            queue_.pop_back();
            const Clause& c = clauses_[id];
            if (c.satisfied()) continue;
            if (c.k_unassigned == 0) {
                if (c.f_unassigned == 0) {
                    queue_.push_back(id);  // may still conflict after backtracking
                    return false;
                }
                if (c.f_unassigned == 1) {
                    for (auto v : c.flips)
                        if (value_[v] == Value::Unassigned) {
                            assign(v, Value::Flipped);
                            break;
                        }
                }
            } else if (c.f_unassigned == 0 && c.k_unassigned == 1) {
                for (auto v : c.keeps)
                    if (value_[v] == Value::Unassigned) {
                        assign(v, Value::Kept);
                        break;
                    }
            }
        }
        return true;
    }

    long packing_bound() {
        if (violated_.empty()) return 0;
        order_.assign(violated_.begin(), violated_.end());
        std::sort(order_.begin(), order_.end(), [this](std::uint32_t a, std::uint32_t b) {
            const auto fa = clauses_[a].f_unassigned, fb = clauses_[b].f_unassigned;
            return fa != fb ? fa < fb : a < b;
        });
        ++stamp_epoch_;
        long packed = 0;
        for (auto id : order_) {
            const Clause& c = clauses_[id];
            bool disjoint = true;
            for (auto v : c.flips)
                if (value_[v] == Value::Unassigned && stamp_[v] == stamp_epoch_) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            for (auto v : c.flips)
                if (value_[v] == Value::Unassigned) stamp_[v] = stamp_epoch_;
            ++packed;
        }
        return packed;
    }

    // Lagrangian relaxation of "every violated clause gets one of its
    // unassigned flip pairs flipped": for multipliers lambda >= 0,
    //   cost + sum_c lambda_c + sum_v min(0, 1 - load_v),  load_v = sum_{c ni v} lambda_c,
    // is a valid bound. Multipliers persist between nodes as a warm start and
    // are improved by subgradient steps. Leaves load_ at the best multipliers.
    double lagrangian_bound(int iterations) {
        if (violated_.empty()) return static_cast<double>(cost_);
        act_start_.clear();
        act_vars_.clear();
        act_unique_.clear();
        ++stamp_epoch_;
        for (auto id : violated_) {
            act_start_.push_back(static_cast<std::uint32_t>(act_vars_.size()));
            for (auto v : clauses_[id].flips)
                if (value_[v] == Value::Unassigned) {
                    act_vars_.push_back(v);
                    if (stamp_[v] != stamp_epoch_) {
                        stamp_[v] = stamp_epoch_;
                        act_unique_.push_back(v);
                    }
                }
        }
        act_start_.push_back(static_cast<std::uint32_t>(act_vars_.size()));
        const std::size_t m = violated_.size();
        act_lambda_.resize(m);
        grad_.resize(m);
        for (std::size_t c = 0; c < m; ++c) act_lambda_[c] = lambda_[violated_[c]];
        best_lambda_ = act_lambda_;

        auto evaluate = [&](const std::vector<double>& lam) {
            for (auto v : act_unique_) load_[v] = 0.0;
            double value = static_cast<double>(cost_);
            for (std::size_t c = 0; c < m; ++c) {
                value += lam[c];
                for (auto k = act_start_[c]; k < act_start_[c + 1]; ++k) load_[act_vars_[k]] += lam[c];
            }
            for (auto v : act_unique_)
                if (load_[v] > 1.0) value += 1.0 - load_[v];
            return value;
        };

        double best = -1.0;
        double mu = 1.0;
        int stall = 0;
        for (int it = 0; it < iterations; ++it) {
            const double L = evaluate(act_lambda_);
            if (L > best + 1e-9) {
                best = L;
                best_lambda_ = act_lambda_;
                stall = 0;
            } else if (++stall >= 4) {
                mu *= 0.5;
                stall = 0;
            }
            if (ub_ && std::ceil(best - 1e-6) >= static_cast<double>(*ub_)) break;

            double norm = 0.0;
            for (std::size_t c = 0; c < m; ++c) {
                int covered = 0;
                for (auto k = act_start_[c]; k < act_start_[c + 1]; ++k)
                    if (load_[act_vars_[k]] > 1.0) ++covered;
                grad_[c] = 1.0 - covered;
                norm += grad_[c] * grad_[c];
            }
            if (norm == 0.0) break;
            const double target = ub_ ? std::min(static_cast<double>(*ub_), best * 1.05 + 0.5) : best * 1.05 + 0.5;
            const double step = mu * std::max(target - L, 0.1) / norm;
            for (std::size_t c = 0; c < m; ++c) act_lambda_[c] = std::max(0.0, act_lambda_[c] + step * grad_[c]);
        }
        for (std::size_t c = 0; c < m; ++c) lambda_[violated_[c]] = best_lambda_[c];
        best = evaluate(best_lambda_);
        return best;
    }

    // Pairs whose forced value would lift the Lagrangian bound to the
    // incumbent are fixed the other way. Returns true if anything was fixed.
    bool reduced_cost_fixing(double bound) {
        if (!ub_ || options_.first_feasible) return false;
        const double limit = static_cast<double>(*ub_) - 1.0 + 1e-6;  // bound > ub - 1 means no better solution
        fix_list_.clear();
        // Unassigned free pairs outside every violated clause have reduced cost 1.
        if (bound + 1.0 > limit) {
            for (std::uint32_t v = 0; v < pairs_; ++v)
                if (free_[v] && value_[v] == Value::Unassigned && stamp_[v] != stamp_epoch_)
                    fix_list_.push_back({v, Value::Kept});
        }
        for (auto v : act_unique_) {
            if (value_[v] != Value::Unassigned) continue;
            const double rc = 1.0 - load_[v];
            if (rc >= 0.0 && bound + rc > limit) fix_list_.push_back({v, Value::Kept});
            else if (rc < 0.0 && bound - rc > limit) fix_list_.push_back({v, Value::Flipped});
        }
        for (const auto& [v, val] : fix_list_)
            if (value_[v] == Value::Unassigned) assign(v, val);
        return !fix_list_.empty();
    }

    // The violated clause with the fewest free flips, its smallest unassigned pair.
    std::uint32_t clause_branch_pair() const {
        std::uint32_t best = violated_.front();
        for (auto id : violated_) {
            const auto fa = clauses_[id].f_unassigned, fb = clauses_[best].f_unassigned;
            if (fa < fb || (fa == fb && id < best)) best = id;
        }
        for (auto v : clauses_[best].flips)
            if (value_[v] == Value::Unassigned) return v;
        throw std::logic_error("violated clause without an unassigned flip");
    }

    // The pair with the largest multiplier load from the last Lagrangian
    // solve (smallest pair on ties). Keeping it raises the bound the most.
    std::uint32_t heaviest_pair() const {
        std::uint32_t best = 0;
        double best_load = -1.0;
        for (auto v : act_unique_) {
            if (value_[v] != Value::Unassigned) continue;
            if (load_[v] > best_load + 1e-12 || (load_[v] > best_load - 1e-12 && v < best)) {
                best_load = load_[v];
                best = v;
            }
        }
        if (best_load < 0.0) return clause_branch_pair();
        return best;
    }

    bool out_of_time() {
        if ((nodes_ & 63) != 1) return false;  // node 1 included, so a zero budget stops at once
        return std::chrono::duration<double>(Clock::now() - start_).count() > options_.time_limit_s;
    }

    void record_timeout(long current_lb) {
        timed_out_ = true;
        stop_ = true;
        long lb = current_lb;
        for (const auto& f : frames_)
            if (f.keep_pending) lb = std::min(lb, f.lb);
        timeout_lb_ = lb;
    }

    void recurse() {
        if (stop_) return;
        ++nodes_;
        const std::size_t mark = trail_.size();
        const long inherited = frames_.empty() ? 0 : frames_.back().lb;
        if (out_of_time()) {
            record_timeout(inherited);
            return;
        }

        long lb = 0;
        for (;;) {
            if (!propagate()) {
                undo_to(mark);
                return;
            }
            lb = std::max(inherited, cost_ + packing_bound());
            if (!options_.first_feasible && ub_ && lb >= *ub_) {
                undo_to(mark);
                return;
            }
            if (!violated_.empty() && !options_.first_feasible) {
                const double L = lagrangian_bound(nodes_ == 1 ? kRootIterations : kNodeIterations);
                lb = std::max(lb, static_cast<long>(std::ceil(L - 1e-6)));
                if (ub_ && lb >= *ub_) {
                    undo_to(mark);
                    return;
                }
                if (reduced_cost_fixing(L)) continue;
            }
            if (!violated_.empty()) break;

            // Integer candidate: unassigned pairs at their input state.
            ++candidates_;
            Graph candidate = materialize();
            auto cuts = callbacks_.on_integer_candidate(candidate, *this);
            if (cuts.empty()) {
                if (!ub_ || cost_ < *ub_) {
                    ub_ = cost_;
                    incumbent_ = std::move(candidate);
                }
                if (options_.first_feasible) stop_ = true;
                undo_to(mark);
                return;
            }
            if (std::none_of(cuts.begin(), cuts.end(), [&](const PatternConstraint& c) { return !c.satisfied_by(candidate); }))
                throw std::logic_error("lazy cuts returned for a candidate do not cut it off");
            for (const auto& cut : cuts) add_constraint(cut);
        }

        callbacks_.on_node(*this);
        if (!options_.first_feasible && ub_ && lb >= *ub_) {
            undo_to(mark);
            return;
        }

        const std::uint32_t var = options_.first_feasible ? clause_branch_pair() : heaviest_pair();

        frames_.push_back({lb, true});
        const std::size_t branch_mark = trail_.size();
        assign(var, Value::Flipped);
        recurse();
        undo_to(branch_mark);
        if (!stop_) {
            frames_.back().keep_pending = false;
            assign(var, Value::Kept);
            recurse();
            undo_to(branch_mark);
        }
        frames_.pop_back();
        undo_to(mark);
    }

    static constexpr int kRootIterations = 300;
    static constexpr int kNodeIterations = 30;

    struct Frame {
        long lb;
        bool keep_pending;
    };

    const Graph& input_;
    const VariableDomain& domains_;
    const MasterOptions& options_;
    MasterCallbacks& callbacks_;
    int n_;
    std::size_t pairs_;
    Graph base_;
    std::vector<bool> input_state_;
    std::vector<bool> free_;
    std::vector<Value> value_;
    std::vector<std::vector<Occurrence>> occ_;
    std::vector<Clause> clauses_;
    std::vector<PatternConstraint> originals_;
    std::unordered_set<std::vector<std::uint64_t>, LiteralKeyHash> seen_;
    std::vector<std::uint32_t> violated_;
    std::vector<int> pos_in_violated_;
    std::vector<std::uint32_t> queue_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t stamp_epoch_ = 0;
    mutable std::vector<VertexPair> pair_lookup_;
    std::vector<Frame> frames_;
    std::vector<double> lambda_;
    std::vector<double> load_;
    std::vector<std::uint32_t> act_start_;
    std::vector<std::uint32_t> act_vars_;
    std::vector<std::uint32_t> act_unique_;
    std::vector<double> act_lambda_;
    std::vector<double> best_lambda_;
    std::vector<double> grad_;
    std::vector<std::pair<std::uint32_t, Value>> fix_list_;

    long cost_ = 0;
    std::optional<long> ub_;
    std::optional<Graph> incumbent_;
    std::size_t nodes_ = 0;
    std::size_t candidates_ = 0;
    std::size_t root_constraints_ = 0;
    bool stop_ = false;
    bool timed_out_ = false;
    long timeout_lb_ = 0;
    Clock::time_point start_;
};

}  // namespace

MasterResult solve_master(const Graph& input, const VariableDomain& domains, std::vector<PatternConstraint> pool,
                          const MasterOptions& options, MasterCallbacks& callbacks) {
    Search search(input, domains, options, callbacks);
    return search.run(std::move(pool));
}

MasterResult solve_master(const Graph& input, const VariableDomain& domains, std::vector<PatternConstraint> pool,
                          const MasterOptions& options) {
    MasterCallbacks none;
    return solve_master(input, domains, std::move(pool), options, none);
}

}  // namespace perfect
