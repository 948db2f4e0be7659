// perfect: command-line front end for generation, solving, hole listing,
// heuristic runs and expectation tables.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "perfect/expectation.hpp"
#include "perfect/graph.hpp"
#include "perfect/heuristic.hpp"
#include "perfect/holes.hpp"
#include "perfect/report.hpp"
#include "perfect/solve.hpp"

namespace fs = std::filesystem;
using namespace perfect;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kExitIo = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Metadata {
    bool has_p = false;
    double p = 0.0;
    bool has_seed = false;
    std::uint64_t seed = 0;
};

std::string metadata_comment(int n, double p, std::uint64_t seed) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "generator er n %d p %.17g seed %llu", n, p, static_cast<unsigned long long>(seed));
    return buf;
}

// Recovers "c generator er n <n> p <p> seed <s>" written by `gen`.
Metadata read_metadata(const std::string& text) {
    Metadata m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string c, gen, er, kn, kp, ks;
        int n = 0;
        double p = 0;
        unsigned long long s = 0;
        if (ls >> c >> gen >> er >> kn >> n >> kp >> p >> ks >> s && c == "c" && gen == "generator" && er == "er" &&
            kp == "p" && ks == "seed") {
            m.has_p = m.has_seed = true;
            m.p = p;
            m.seed = s;
            break;
        }
    }
    return m;
}

struct LoadedGraph {
    Graph graph;
    Metadata meta;
};

LoadedGraph load_graph(const std::string& path) {
    const auto text = read_file(path);
    try {
        return {read_graph(text), read_metadata(text)};
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<VertexPair> load_optional(const std::string& path, int n) {
    const auto text = read_file(path);
    try {
        auto opt = read_optional_pairs(text);
        if (opt.n != n)
            throw std::runtime_error(path + ": optional file is for " + std::to_string(opt.n) +
                                     " vertices, graph has " + std::to_string(n));
        return opt.pairs;
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// Appends rows to the CSV at `path`, writing the header first if the file is
// new or empty; an empty path means stdout.
class CsvSink {
public:
    CsvSink(const std::string& path, const std::string& header) {
        if (path.empty() || path == "-") {
            os_ = &std::cout;
            *os_ << header;
            return;
        }
        std::error_code ec;
        const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
        file_.open(path, std::ios::app | std::ios::binary);
        if (!file_) throw std::runtime_error("cannot open '" + path + "' for appending");
        os_ = &file_;
        if (fresh) *os_ << header;
    }

    void write(const std::string& row) {
        std::lock_guard lock(mutex_);
        *os_ << row;
        os_->flush();
    }

private:
    std::ofstream file_;
    std::ostream* os_ = nullptr;
    std::mutex mutex_;
};

std::vector<double> split_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw UsageError("not a number: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    for (double v : split_doubles(s)) {
        if (v != static_cast<int>(v)) throw UsageError("not an integer: " + std::to_string(v));
        out.push_back(static_cast<int>(v));
    }
    return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    int n = 0;
    double p = 0;
    std::uint64_t seed = 0;
    std::string out;
    double optional_density = -1;
    std::string optional_out;
};

int run_gen(const GenArgs& a) {
    if (a.n < 0) throw UsageError("n must be non-negative");
    if (!(a.p >= 0 && a.p <= 1)) throw UsageError("p must lie in [0,1]");
    Graph g = generate_er({a.n, a.p, a.seed});
    const auto text = write_graph(g, {metadata_comment(a.n, a.p, a.seed)});
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
    if (a.optional_density >= 0) {
        if (a.optional_density > 1) throw UsageError("--optional-density must lie in [0,1]");
        if (a.optional_out.empty()) throw UsageError("--optional-density needs --optional-out");
        write_file(a.optional_out, write_optional_pairs(a.n, sample_optional_pairs(g, a.optional_density, a.seed)));
    }
    return kExitOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string graph;
    std::string problem = "edit";
    std::string optional;
    std::string ohtp = "all";
    bool heur_candidates = false;
    int heur_nodes = 0;  // 0 = off
    bool add_all = false;
    double time_limit = 900;
    std::uint64_t seed = 0;
    std::string out;
    std::string manifest;
    int jobs = 1;
    bool no_timing = false;
    std::string write_output;
};

Termination parse_ohtp(const std::string& s) {
    if (s == "one") return {Termination::Mode::One, 0};
    if (s == "all") return {Termination::Mode::All, 0};
    double f = 0;
    std::size_t used = 0;
    try {
        f = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !(f > 0 && f < 1))
        throw UsageError("--ohtp expects one, all or a fraction in (0,1), got '" + s + "'");
    return {Termination::Mode::Percentage, f};
}

struct Job {
    std::string graph;
    ProblemKind kind;
    StrategyConfig cfg;
    std::string optional;
};

std::string run_job(const Job& job, bool timing, std::optional<Graph>* output, SolveStatus* status) {
    auto loaded = load_graph(job.graph);
    Instance inst;
    inst.kind = job.kind;
    inst.input = loaded.graph;
    if (!job.optional.empty()) inst.optional_pairs = load_optional(job.optional, loaded.graph.order());
    auto r = solve(inst, job.cfg);
    RowInfo info;
    info.problem = job.kind;
    info.n = loaded.graph.order();
    info.has_p = loaded.meta.has_p;
    info.p = loaded.meta.p;
    info.has_seed = loaded.meta.has_seed;
    info.seed = loaded.meta.seed;
    info.strategy = format_strategy(job.cfg);
    if (output) *output = r.output;
    *status = r.status;
    return solve_csv_row(info, r, timing);
}

std::vector<Job> read_manifest(const std::string& path, const SolveArgs& a) {
    const auto text = read_file(path);
    const fs::path base = fs::path(path).parent_path();
    auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (base / p).string(); };
    std::vector<Job> jobs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string graph, problem, strategy, optional, extra;
        if (!(ls >> graph) || graph.front() == '#') continue;
        if (!(ls >> problem >> strategy >> optional) || (ls >> extra))
            throw UsageError(path + ":" + std::to_string(lineno) +
                             ": expected '<graph-path> <problem> <strategy-string> <optional-path-or-dash>'");
        auto kind = parse_problem(problem);
        if (!kind) throw UsageError(path + ":" + std::to_string(lineno) + ": unknown problem '" + problem + "'");
        Job job;
        job.graph = resolve(graph);
        job.kind = *kind;
        try {
            job.cfg = parse_strategy(strategy);
        } catch (const std::invalid_argument& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        job.cfg.time_limit_s = a.time_limit;
        job.cfg.seed = a.seed;
        if (optional != "-") {
            if (*kind != ProblemKind::Sandwich)
                throw UsageError(path + ":" + std::to_string(lineno) + ": optional file given for a non-sandwich problem");
            job.optional = resolve(optional);
        }
        jobs.push_back(std::move(job));
    }
    return jobs;
}

int run_solve(const SolveArgs& a) {
    std::vector<Job> jobs;
    if (!a.manifest.empty()) {
        if (!a.graph.empty()) throw UsageError("give either a graph path or --manifest, not both");
        jobs = read_manifest(a.manifest, a);
    } else {
        if (a.graph.empty()) throw UsageError("solve needs a graph path or --manifest");
        auto kind = parse_problem(a.problem);
        if (!kind) throw UsageError("--problem: unknown problem '" + a.problem + "'");
        if (!a.optional.empty() && *kind != ProblemKind::Sandwich)
            throw UsageError("--optional is only valid with --problem sandwich");
        Job job;
        job.graph = a.graph;
        job.kind = *kind;
        job.cfg.termination = parse_ohtp(a.ohtp);
        job.cfg.heuristic_on_candidates = a.heur_candidates;
        job.cfg.heuristic_on_nodes = a.heur_nodes > 0;
        if (a.heur_nodes > 0) job.cfg.node_interval = a.heur_nodes;
        job.cfg.add_all_initial = a.add_all;
        job.cfg.time_limit_s = a.time_limit;
        job.cfg.seed = a.seed;
        job.optional = a.optional;
        jobs.push_back(std::move(job));
    }
    if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (!a.write_output.empty() && jobs.size() != 1) throw UsageError("--write-output needs a single instance");

    CsvSink sink(a.out, solve_csv_header());
    std::vector<std::string> rows(jobs.size());
    std::vector<SolveStatus> statuses(jobs.size(), SolveStatus::Optimal);
    std::vector<std::string> errors(jobs.size());
    std::vector<char> done(jobs.size(), 0);
    std::optional<Graph> single_output;
    std::mutex order_mutex;
    std::size_t next_to_write = 0;
    std::atomic<std::size_t> next_job{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next_job.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                rows[i] = run_job(jobs[i], !a.no_timing, jobs.size() == 1 ? &single_output : nullptr, &statuses[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
            std::lock_guard lock(order_mutex);
            done[i] = 1;
            while (next_to_write < jobs.size() && done[next_to_write]) {
                if (errors[next_to_write].empty()) sink.write(rows[next_to_write]);
                ++next_to_write;
            }
        }
    };
    const int threads = std::min<int>(a.jobs, static_cast<int>(jobs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    int code = kExitOk;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!errors[i].empty()) {
            std::cerr << "perfect solve: " << errors[i] << '\n';
            code = kExitIo;
        } else if (statuses[i] == SolveStatus::TimeLimit && code == kExitOk) {
            code = kExitTimeLimit;
        }
    }
    if (!a.write_output.empty() && single_output) write_file(a.write_output, write_graph(*single_output));
    return code;
}

// ---------------------------------------------------------------- heuristic

struct HeuristicArgs {
    std::vector<std::string> graphs;
    int n = -1;
    double p = -1;
    std::vector<std::uint64_t> seeds;
    bool additions_only = false;
    std::string out;
    bool no_timing = false;
};

int run_heuristic_cmd(const HeuristicArgs& a) {
    const auto mode = a.additions_only ? HeuristicMode::AdditionsOnly : HeuristicMode::EditBothWays;
    CsvSink sink(a.out, heuristic_csv_header());
    if (!a.graphs.empty()) {
        if (a.n >= 0 || !a.seeds.empty()) throw UsageError("give graph paths or --n/--p/--seed, not both");
        for (const auto& path : a.graphs) {
            auto loaded = load_graph(path);
            auto r = run_heuristic(loaded.graph, mode);
            sink.write(heuristic_csv_row(loaded.graph.order(), loaded.meta.p, loaded.meta.seed, r, !a.no_timing));
        }
        return kExitOk;
    }
    if (a.n < 0 || a.p < 0 || a.seeds.empty()) throw UsageError("heuristic needs graph paths or --n, --p and --seed");
    if (a.p > 1) throw UsageError("--p must lie in [0,1]");
    for (auto seed : a.seeds) {
        auto r = run_heuristic(generate_er({a.n, a.p, seed}), mode);
        sink.write(heuristic_csv_row(a.n, a.p, seed, r, !a.no_timing));
    }
    return kExitOk;
}

// ---------------------------------------------------------------- expected

int run_expected(const std::string& n_list, const std::string& p_grid, int p_points, const std::string& out) {
    const auto orders = split_ints(n_list);
    for (int n : orders)
        if (n < 0) throw UsageError("--n-list: orders must be non-negative");
    std::vector<double> grid;
    if (!p_grid.empty()) grid = split_doubles(p_grid);
    if (p_points > 0) {
        if (!grid.empty()) throw UsageError("give --p-grid or --p-points, not both");
        for (int i = 0; i < p_points; ++i) grid.push_back(p_points == 1 ? 0.0 : static_cast<double>(i) / (p_points - 1));
    }
    if (grid.empty()) throw UsageError("expected needs --p-grid or --p-points");
    for (double p : grid)
        if (!(p >= 0 && p <= 1)) throw UsageError("p values must lie in [0,1]");
    const auto csv = expectation_csv(orders, grid);
    if (out.empty())
        std::cout << csv;
    else
        write_file(out, csv);
    return kExitOk;
}

// ---------------------------------------------------------------- find-holes

int run_find_holes(const std::string& path, bool holes_only, bool antiholes_only) {
    auto loaded = load_graph(path);
    auto print = [](const std::vector<Hole>& list, char tag) {
        for (const auto& h : list) {
            std::cout << tag;
            for (int v : h.vertices) std::cout << ' ' << v + 1;
            std::cout << '\n';
        }
    };
    if (!antiholes_only) print(find_odd_holes(loaded.graph), 'H');
    if (!holes_only) print(find_odd_antiholes(loaded.graph), 'A');
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect graph editing, completion, deletion and sandwich solver"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write an Erdos-Renyi graph G(n,p)");
    gen_cmd->add_option("n", gen.n, "Number of vertices")->required();
    gen_cmd->add_option("p", gen.p, "Edge probability")->required();
    gen_cmd->add_option("seed", gen.seed, "Random seed")->required();
    gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");
    gen_cmd->add_option("--optional-density", gen.optional_density, "Also sample optional pairs among the non-edges");
    gen_cmd->add_option("--optional-out", gen.optional_out, "Path of the optional-pair file");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance or a manifest of instances");
    solve_cmd->add_option("graph", solve_args.graph, "Graph file");
    solve_cmd->add_option("--problem", solve_args.problem, "edit, complete, delete or sandwich")->capture_default_str();
    solve_cmd->add_option("--optional", solve_args.optional, "Optional-pair file (sandwich only)");
    solve_cmd->add_option("--ohtp", solve_args.ohtp, "Cut termination: one, all or a fraction of the expected count")
        ->capture_default_str();
    solve_cmd->add_flag("--heur-candidates", solve_args.heur_candidates, "Run the heuristic on imperfect candidates");
    solve_cmd
        ->add_option("--heur-nodes", solve_args.heur_nodes, "Run the heuristic every INTERVAL nodes (default 10)")
        ->expected(0, 1)
        ->default_str("10")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--add-all", solve_args.add_all, "Seed the pool with every odd hole/antihole of the input");
    solve_cmd->add_option("--time-limit", solve_args.time_limit, "Seconds per instance")->capture_default_str();
    solve_cmd->add_option("--seed", solve_args.seed, "Seed recorded in the strategy");
    solve_cmd->add_option("--out", solve_args.out, "Append result rows to this CSV (default stdout)");
    solve_cmd->add_option("--manifest", solve_args.manifest,
                          "Lines '<graph-path> <problem> <strategy-string> <optional-path-or-dash>'");
    solve_cmd->add_option("--jobs", solve_args.jobs, "Parallel manifest workers")->capture_default_str();
    solve_cmd->add_flag("--no-timing", solve_args.no_timing, "Leave time columns empty");
    solve_cmd->add_option("--write-output", solve_args.write_output, "Write the output graph here");

    HeuristicArgs heur;
    auto* heur_cmd = app.add_subcommand("heuristic", "Run the greedy flip heuristic");
    heur_cmd->add_option("graphs", heur.graphs, "Graph files");
    heur_cmd->add_option("--n", heur.n, "Generate G(n,p) instead of reading files");
    heur_cmd->add_option("--p", heur.p, "Edge probability for generated graphs");
    heur_cmd->add_option("--seed", heur.seeds, "Seed(s) for generated graphs")->delimiter(',');
    heur_cmd->add_flag("--additions-only", heur.additions_only, "Only add edges");
    heur_cmd->add_option("--out", heur.out, "Append rows to this CSV (default stdout)");
    heur_cmd->add_flag("--no-timing", heur.no_timing, "Leave the time column empty");

    std::string n_list, p_grid, exp_out;
    int p_points = 0;
    auto* exp_cmd = app.add_subcommand("expected", "Expected odd hole/antihole counts of G(n,p)");
    exp_cmd->add_option("--n-list", n_list, "Comma-separated graph orders")->required();
    exp_cmd->add_option("--p-grid", p_grid, "Comma-separated edge probabilities");
    exp_cmd->add_option("--p-points", p_points, "Uniform grid of this many points on [0,1]");
    exp_cmd->add_option("--out", exp_out, "Output CSV (default stdout)");

    std::string holes_path;
    bool holes_only = false, antiholes_only = false;
    auto* holes_cmd = app.add_subcommand("find-holes", "List odd holes (H) and odd antiholes (A), 1-based");
    holes_cmd->add_option("graph", holes_path, "Graph file")->required();
    holes_cmd->add_flag("--holes-only", holes_only);
    holes_cmd->add_flag("--antiholes-only", antiholes_only);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*solve_cmd) return run_solve(solve_args);
        if (*heur_cmd) return run_heuristic_cmd(heur);
        if (*exp_cmd) return run_expected(n_list, p_grid, p_points, exp_out);
        if (*holes_cmd) return run_find_holes(holes_path, holes_only, antiholes_only);
    } catch (const UsageError& e) {
        std::cerr << "perfect: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "perfect: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "perfect: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
