#include "perfect/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace perfect {

VertexPair pair_at(int n, std::size_t index) {
    for (int i = 0; i + 1 < n; ++i) {
        auto row = static_cast<std::size_t>(n - i - 1);
        if (index < row) return {i, i + 1 + static_cast<int>(index)};
        index -= row;
    }
    throw std::out_of_range("pair index out of range");
}

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void Graph::set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    Word mu = Word{1} << (u % kWordBits);
    Word mv = Word{1} << (v % kWordBits);
    if (present) {
        row_ptr(u)[v / kWordBits] |= mv;
        row_ptr(v)[u / kWordBits] |= mu;
    } else {
        row_ptr(u)[v / kWordBits] &= ~mv;
        row_ptr(v)[u / kWordBits] &= ~mu;
    }
}

int Graph::degree(int v) const {
    int d = 0;
    for (Word w : neighbors(v)) d += std::popcount(w);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total / 2;
}

double Graph::density() const {
    auto pairs = pair_count(n_);
    return pairs == 0 ? 0.0 : static_cast<double>(edge_count()) / static_cast<double>(pairs);
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) h.add_edge(i, j);
    return h;
}

std::size_t hamming_distance(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) throw std::invalid_argument("hamming_distance: order mismatch");
    std::size_t d = 0;
    for (int i = 0; i < a.order(); ++i) {
        auto ra = a.neighbors(i);
        auto rb = b.neighbors(i);
        for (std::size_t w = 0; w < ra.size(); ++w) d += static_cast<std::size_t>(std::popcount(ra[w] ^ rb[w]));
    }
    return d / 2;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Graph generate_er(const ErParams& params) {
    if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
    Graph g(params.n);
    std::mt19937_64 rng(params.seed);
    for (int i = 0; i < params.n; ++i)
        for (int j = i + 1; j < params.n; ++j)
            if (unit_from_bits(rng()) < params.p) g.add_edge(i, j);
    return g;
}

std::vector<VertexPair> sample_optional_pairs(const Graph& g, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("optional density must lie in [0,1]");
    std::mt19937_64 rng(mix_seed(seed));
    std::vector<VertexPair> out;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.adjacent(i, j) && unit_from_bits(rng()) < density) out.emplace_back(i, j);
    return out;
}

// --- parsing ----------------------------------------------------------------

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::MissingHeader: return "missing header";
        case ParseErrorKind::MalformedHeader: return "malformed header";
        case ParseErrorKind::DuplicateHeader: return "duplicate header";
        case ParseErrorKind::MalformedLine: return "malformed line";
        case ParseErrorKind::VertexOutOfRange: return "vertex out of range";
        case ParseErrorKind::SelfLoop: return "self-loop";
        case ParseErrorKind::DuplicateEdge: return "duplicate edge";
        case ParseErrorKind::CountMismatch: return "edge count mismatch";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail
                                  : std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view s, long long& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

struct PairFile {
    int n = 0;
    std::vector<VertexPair> pairs;
};

// Shared reader for "p <tag> n k" + "e u v" files.
PairFile read_pair_file(std::string_view text, std::string_view tag) {
    PairFile out;
    bool have_header = false;
    long long declared = 0;
    std::vector<char> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c" || tok[0].front() == 'c') continue;
        if (tok[0] == "p") {
            if (have_header) throw ParseError(ParseErrorKind::DuplicateHeader, line_no, "second 'p' line");
            long long n = 0;
            if (tok.size() != 4 || tok[1] != tag || !parse_int(tok[2], n) || !parse_int(tok[3], declared) || n < 0 ||
                declared < 0)
                throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                                 "expected 'p " + std::string(tag) + " <n> <count>'");
            out.n = static_cast<int>(n);
            seen.assign(pair_count(out.n), 0);
            have_header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, line_no, "edge before header");
            long long u = 0, v = 0;
            if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
                throw ParseError(ParseErrorKind::MalformedLine, line_no, "expected 'e <u> <v>'");
            if (u < 1 || v < 1 || u > out.n || v > out.n)
                throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                                 std::to_string(u) + " " + std::to_string(v) + " not in 1.." + std::to_string(out.n));
            if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line_no, "vertex " + std::to_string(u));
            VertexPair p(static_cast<int>(u - 1), static_cast<int>(v - 1));
            auto idx = pair_index(out.n, p.i, p.j);
            if (seen[idx])
                throw ParseError(ParseErrorKind::DuplicateEdge, line_no,
                                 std::to_string(p.i + 1) + " " + std::to_string(p.j + 1));
            seen[idx] = 1;
            out.pairs.push_back(p);
            continue;
        }
        throw ParseError(ParseErrorKind::MalformedLine, line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (!have_header) throw ParseError(ParseErrorKind::MissingHeader, 0, "no 'p " + std::string(tag) + "' line");
    if (static_cast<long long>(out.pairs.size()) != declared)
        throw ParseError(ParseErrorKind::CountMismatch, 0,
                         "header declares " + std::to_string(declared) + ", found " + std::to_string(out.pairs.size()));
    return out;
}

void write_pairs(std::ostringstream& os, const std::vector<VertexPair>& pairs) {
    for (const auto& p : pairs) os << "e " << p.i + 1 << ' ' << p.j + 1 << '\n';
}

}  // namespace

Graph read_graph(std::string_view text) {
    auto file = read_pair_file(text, "edge");
    Graph g(file.n);
    for (const auto& p : file.pairs) g.add_edge(p.i, p.j);
    return g;
}

std::string write_graph(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "c " << c << '\n';
    auto edges = g.edges();
    os << "p edge " << g.order() << ' ' << edges.size() << '\n';
    write_pairs(os, edges);
    return os.str();
}

OptionalPairs read_optional_pairs(std::string_view text) {
    auto file = read_pair_file(text, "optional");
    std::sort(file.pairs.begin(), file.pairs.end());
    return {file.n, std::move(file.pairs)};
}

std::string write_optional_pairs(int n, const std::vector<VertexPair>& pairs) {
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << "p optional " << n << ' ' << sorted.size() << '\n';
    write_pairs(os, sorted);
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace perfect
