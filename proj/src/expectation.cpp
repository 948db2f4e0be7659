#include "perfect/expectation.hpp"

#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "perfect/graph.hpp"
#include "perfect/holes.hpp"

namespace perfect {

BigInt count_hole_configs(int n, int i) {
    if (i < 5 || i % 2 == 0 || i > n)
        throw std::domain_error("count_hole_configs: need odd i with 5 <= i <= n (n=" + std::to_string(n) +
                                ", i=" + std::to_string(i) + ")");
    // n! / (2 i (n-i)!) = (n-i+1)(n-i+2)...(n) / (2i)
    BigInt product = 1;
    for (int t = n - i + 1; t <= n; ++t) product *= t;
    return product / (2 * i);
}

BigInt count_all_hole_configs(int n) {
    BigInt total = 0;
    for (int i = 5; i <= n; i += 2) total += count_hole_configs(n, i);
    return total;
}

BigInt count_all_antihole_configs(int n) {
    BigInt total = 0;
    for (int i = 7; i <= n; i += 2) total += count_hole_configs(n, i);
    return total;
}

HoleExpectation::HoleExpectation(int n) : n_(n) {
    if (n < 0) throw std::domain_error("graph order must be non-negative");
    const double log_n_fact = std::lgamma(n + 1.0);
    for (int m = 5; m <= n; m += 2) {
        Length len;
        len.m = m;
        len.coefficient = count_hole_configs(n, m).convert_to<double>();
        len.log_coefficient = log_n_fact - std::lgamma(n - m + 1.0) - std::log(2.0 * m);
        len.chords = static_cast<double>(m) * (m - 1) / 2.0 - m;
        lengths_.push_back(len);
    }
}

// coefficient * on^m * off^chords. The linear product is used whenever every
// factor is a normal double; otherwise the term is assembled in log space.
double HoleExpectation::term(const Length& len, double on_cycle, double off_cycle) const {
    if (on_cycle == 0.0 || off_cycle == 0.0) return 0.0;
    const double pa = std::pow(on_cycle, len.m);
    const double pb = std::pow(off_cycle, len.chords);
    if (std::isfinite(len.coefficient) && pa >= DBL_MIN && pb >= DBL_MIN) {
        const double prod = pa * pb;
        if (prod >= DBL_MIN) return len.coefficient * prod;
    }
    return std::exp(len.log_coefficient + (len.m * std::log(on_cycle) + len.chords * std::log(off_cycle)));
}

ExpectedCounts HoleExpectation::evaluate(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("edge probability must lie in [0,1]");
    // Snap (p, 1-p) to a pair of exact complements so that evaluating at p and
    // at 1-p uses the same two numbers: for hi >= 0.5, 1 - hi is exact.
    const double hi = p >= 0.5 ? p : 1.0 - p;
    const double lo = 1.0 - hi;
    const double a = p >= 0.5 ? hi : lo;  // edge probability
    const double b = p >= 0.5 ? lo : hi;  // non-edge probability

    ExpectedCounts out;
    out.n = n_;
    out.p = p;
    for (const auto& len : lengths_) {
        const double hole = term(len, a, b);
        out.e_holes += hole;
        if (len.m == 5) {
            out.e_total += hole;
            continue;
        }
        const double anti = term(len, b, a);
        out.e_antiholes += anti;
        out.e_total += hole + anti;  // commutative pair keeps e_total(p) == e_total(1-p)
    }
    return out;
}

ExpectedCounts expected_counts(int n, double p) {
    return HoleExpectation(n).evaluate(p);
}

namespace {

struct SampleCounts {
    double holes;
    double antiholes;
};

SampleCounts sample_counts(int n, double p, std::uint64_t seed, std::size_t s) {
    Graph g = generate_er({n, p, mix_seed(seed + s)});
    auto holes = reference::find_odd_holes_serial(g, std::nullopt, 5, HoleKind::Hole).size();
    auto anti = reference::find_odd_holes_serial(complement(g), std::nullopt, 7, HoleKind::Antihole).size();
    return {static_cast<double>(holes), static_cast<double>(anti)};
}

MonteCarloCounts summarize(const std::vector<SampleCounts>& counts) {
    MonteCarloCounts mc;
    mc.samples = counts.size();
    if (counts.empty()) return mc;
    const double k = static_cast<double>(counts.size());
    for (const auto& c : counts) {
        mc.mean_holes += c.holes;
        mc.mean_antiholes += c.antiholes;
    }
    mc.mean_holes /= k;
    mc.mean_antiholes /= k;
    mc.mean_total = mc.mean_holes + mc.mean_antiholes;
    if (counts.size() < 2) return mc;
    double vh = 0, va = 0, vt = 0;
    for (const auto& c : counts) {
        vh += (c.holes - mc.mean_holes) * (c.holes - mc.mean_holes);
        va += (c.antiholes - mc.mean_antiholes) * (c.antiholes - mc.mean_antiholes);
        const double t = c.holes + c.antiholes - mc.mean_total;
        vt += t * t;
    }
    mc.se_holes = std::sqrt(vh / (k - 1) / k);
    mc.se_antiholes = std::sqrt(va / (k - 1) / k);
    mc.se_total = std::sqrt(vt / (k - 1) / k);
    return mc;
}

}  // namespace

namespace reference {

MonteCarloCounts monte_carlo_counts_serial(int n, double p, std::size_t samples, std::uint64_t seed) {
    std::vector<SampleCounts> counts(samples);
    for (std::size_t s = 0; s < samples; ++s) counts[s] = sample_counts(n, p, seed, s);
    return summarize(counts);
}

}  // namespace reference

MonteCarloCounts monte_carlo_counts(int n, double p, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("monte_carlo_counts: need at least one sample");
    std::vector<SampleCounts> counts(samples);
    const auto total = static_cast<long long>(samples);
#pragma omp parallel for schedule(static)
    for (long long s = 0; s < total; ++s)
        counts[static_cast<std::size_t>(s)] = sample_counts(n, p, seed, static_cast<std::size_t>(s));
    return summarize(counts);
}

Thresholds termination_threshold(int n, double p, double percentage) {
    if (!(percentage > 0.0 && percentage <= 1.0))
        throw std::domain_error("termination percentage must lie in (0,1]");
    const auto e = expected_counts(n, p);
    auto scaled = [percentage](double expectation) -> std::size_t {
        const double v = std::ceil(percentage * expectation);
        if (!(v < static_cast<double>(std::numeric_limits<std::size_t>::max())))
            return std::numeric_limits<std::size_t>::max();
        return v < 1.0 ? 1 : static_cast<std::size_t>(v);
    };
    return {scaled(e.e_holes), scaled(e.e_antiholes)};
}

std::string expectation_csv(const std::vector<int>& orders, const std::vector<double>& p_grid) {
    std::string out = "n,p,e_holes,e_antiholes,e_total\n";
    char buf[160];
    for (int n : orders) {
        HoleExpectation table(n);
        for (double p : p_grid) {
            auto e = table.evaluate(p);
            std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g\n", n, p, e.e_holes, e.e_antiholes, e.e_total);
            out += buf;
        }
    }
    return out;
}

}  // namespace perfect
