#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace perfect {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline constexpr int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

/// Unordered vertex pair, stored with i < j.
struct VertexPair {
    int i = 0;
    int j = 0;

    VertexPair() = default;
    VertexPair(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Position of {i, j} in the lexicographic order of all pairs of an n-vertex graph.
inline std::size_t pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    auto ii = static_cast<std::size_t>(i);
    return ii * static_cast<std::size_t>(n) - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

inline std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Inverse of pair_index; O(n).
VertexPair pair_at(int n, std::size_t index);

/// Simple undirected graph on vertices 0..n-1 backed by a symmetric bit matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int words() const { return words_; }

    bool adjacent(int u, int v) const {
        return (row_ptr(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    /// Sets both orientations. Self-loops are rejected.
    void set_edge(int u, int v, bool present);
    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }
    void flip(int u, int v) { set_edge(u, v, !adjacent(u, v)); }
    void flip(VertexPair p) { flip(p.i, p.j); }

    std::span<const Word> neighbors(int v) const {
        return {row_ptr(v), static_cast<std::size_t>(words_)};
    }

    int degree(int v) const;
    std::size_t edge_count() const;
    /// m / C(n,2); 0 for n < 2.
    double density() const;

    std::vector<VertexPair> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    const Word* row_ptr(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    Word* row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<Word> bits_;
};

Graph complement(const Graph& g);

/// Number of pairs on which two graphs of equal order differ.
std::size_t hamming_distance(const Graph& a, const Graph& b);

// Named families used throughout tests and examples.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

struct ErParams {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// G(n,p): pairs are visited in lexicographic order and pair {i,j} is an edge
/// iff u < p where u = (x >> 11) * 2^-53 and x is the next std::mt19937_64
/// output seeded with `seed`. Both pieces are fully specified, so a seed
/// reproduces the same graph on every platform.
Graph generate_er(const ErParams& params);

/// Uniform double in [0,1) from a raw 64-bit draw (53-bit mantissa).
inline double unit_from_bits(std::uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Each non-edge of g becomes optional independently with probability
/// `density` (stream seeded with mix_seed(seed)).
std::vector<VertexPair> sample_optional_pairs(const Graph& g, double density, std::uint64_t seed);

// --- file formats ---------------------------------------------------------

enum class ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    DuplicateHeader,
    MalformedLine,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    CountMismatch,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);
    ParseErrorKind kind() const { return kind_; }
    /// 1-based line number; 0 when the error concerns the whole file.
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/// "p edge <n> <m>" followed by m lines "e <u> <v>" (1-based). Lines starting
/// with 'c' are comments.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g, const std::vector<std::string>& comments = {});

struct OptionalPairs {
    int n = 0;
    std::vector<VertexPair> pairs;
};

/// Same layout with header "p optional <n> <k>".
OptionalPairs read_optional_pairs(std::string_view text);
std::string write_optional_pairs(int n, const std::vector<VertexPair>& pairs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace perfect
