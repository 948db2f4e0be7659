#include "perfect/report.hpp"

#include <cstdio>

namespace perfect {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

}  // namespace

std::string solve_csv_header() {
    return "problem,n,p,seed,strategy,status,objective,lower_bound,gap_pct,time_s,precheck_time_s,iterations,"
           "hole_cuts,antihole_cuts,heuristic_improvements\n";
}

std::string solve_csv_row(const RowInfo& info, const SolveResult& r, bool timing) {
    const auto& t = r.telemetry;
    std::string row;
    row += to_string(info.problem);
    row += ',' + std::to_string(info.n);
    row += ',' + (info.has_p ? fmt("%g", info.p) : std::string());
    row += ',' + (info.has_seed ? std::to_string(info.seed) : std::string());
    row += ',' + info.strategy;
    row += ',' + std::string(to_string(r.status));
    row += ',' + (r.objective ? std::to_string(*r.objective) : std::string());
    row += ',' + std::to_string(r.lower_bound);
    row += ',' + fmt("%.2f", r.gap_pct);
    row += ',' + (timing ? fmt("%.3f", t.total_time_s) : std::string());
    row += ',' + (timing ? fmt("%.3f", t.precheck_time_s) : std::string());
    row += ',' + std::to_string(t.iterations);
    row += ',' + std::to_string(t.hole_cuts);
    row += ',' + std::to_string(t.antihole_cuts);
    row += ',' + std::to_string(t.heuristic_improvements);
    row += '\n';
    return row;
}

std::string heuristic_csv_header() { return "n,p,seed,status,objective,iterations,time_s\n"; }

std::string heuristic_csv_row(int n, double p, std::uint64_t seed, const HeuristicResult& r, bool timing) {
    std::string row = std::to_string(n) + ',' + fmt("%g", p) + ',' + std::to_string(seed);
    row += r.perfect ? ",perfect," : ",failed,";
    row += r.perfect ? std::to_string(r.flips.size()) : std::string();
    row += ',' + std::to_string(r.rounds);
    row += ',' + (timing ? fmt("%.3f", r.seconds) : std::string());
    row += '\n';
    return row;
}

}  // namespace perfect
