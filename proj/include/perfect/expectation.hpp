#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace perfect {

using BigInt = boost::multiprecision::cpp_int;

/// Labeled odd-hole configurations of length i on n vertices:
/// C(n,i) * (i-1)! / 2. Throws std::domain_error unless i is odd and 5 <= i <= n.
BigInt count_hole_configs(int n, int i);

/// Sum over odd lengths 5..n.
BigInt count_all_hole_configs(int n);

/// Sum over odd lengths 7..n (5-antiholes coincide with 5-holes).
BigInt count_all_antihole_configs(int n);

struct ExpectedCounts {
    int n = 0;
    double p = 0.0;
    double e_holes = 0.0;      ///< E[X], odd holes of G(n,p)
    double e_antiholes = 0.0;  ///< E[X-bar], odd antiholes of length >= 7
    double e_total = 0.0;      ///< E[X + X-bar]
};

/// Precomputed per-length coefficients for one graph order; evaluate() is
/// cheap, which matters when sweeping a p grid.
class HoleExpectation {
public:
    explicit HoleExpectation(int n);

    int order() const { return n_; }

    /// Throws std::domain_error for p outside [0,1].
    ExpectedCounts evaluate(double p) const;

private:
    struct Length {
        int m;                // cycle length 2k+1
        double coefficient;   // count_hole_configs(n, m) as double; inf if it overflows
        double log_coefficient;
        double chords;        // C(m,2) - m = (k-1)(2k+1)
    };
    double term(const Length& len, double on_cycle, double off_cycle) const;

    int n_;
    std::vector<Length> lengths_;
};

ExpectedCounts expected_counts(int n, double p);

struct MonteCarloCounts {
    std::size_t samples = 0;
    double mean_holes = 0.0;
    double mean_antiholes = 0.0;
    double mean_total = 0.0;
    double se_holes = 0.0;  ///< standard error of the mean
    double se_antiholes = 0.0;
    double se_total = 0.0;
};

/// Samples G(n,p) graphs (sample s uses seed mix_seed(seed + s)) and counts
/// all odd holes and antiholes exhaustively. Samples are spread over OpenMP
/// threads; results do not depend on the thread count.
MonteCarloCounts monte_carlo_counts(int n, double p, std::size_t samples, std::uint64_t seed);

namespace reference {
MonteCarloCounts monte_carlo_counts_serial(int n, double p, std::size_t samples, std::uint64_t seed);
}

struct Thresholds {
    std::size_t holes = 1;
    std::size_t antiholes = 1;
};

/// max(1, ceil(percentage * E)) for holes and antiholes separately.
/// Throws std::domain_error unless 0 < percentage <= 1.
Thresholds termination_threshold(int n, double p, double percentage);

/// "n,p,e_holes,e_antiholes,e_total" rows, values printed with %.17g.
std::string expectation_csv(const std::vector<int>& orders, const std::vector<double>& p_grid);

}  // namespace perfect
