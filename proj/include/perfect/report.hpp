#pragma once

#include <cstdint>
#include <string>

#include "perfect/heuristic.hpp"
#include "perfect/solve.hpp"

namespace perfect {

/// Identifies the instance a CSV row belongs to. p and seed are taken from
/// the generator metadata when known; unknown values print as empty fields.
struct RowInfo {
    ProblemKind problem = ProblemKind::Edit;
    int n = 0;
    double p = 0.0;
    bool has_p = false;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string strategy;
};

std::string solve_csv_header();
/// One line, newline-terminated. With `timing` false, time columns are
/// printed as empty fields so that reruns are byte-identical.
std::string solve_csv_row(const RowInfo& info, const SolveResult& r, bool timing = true);

std::string heuristic_csv_header();
std::string heuristic_csv_row(int n, double p, std::uint64_t seed, const HeuristicResult& r, bool timing = true);

}  // namespace perfect
