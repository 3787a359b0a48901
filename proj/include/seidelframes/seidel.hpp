#pragma once

#include "seidelframes/frames.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sf {

/// Simple undirected graph on vertices 0..n-1, stored as adjacency bit rows.
/// Its Seidel matrix has -1 for adjacent pairs and +1 for non-adjacent ones.
class SeidelGraph {
public:
    SeidelGraph() = default;
    /// Edgeless graph on n vertices.
    explicit SeidelGraph(int n);
    SeidelGraph(int n, std::span<const std::pair<int, int>> edges);

    int n() const noexcept { return n_; }
    int words() const noexcept { return words_; }
    bool adjacent(int a, int b) const
    {
        return (bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1U;
    }
    void set_edge(int a, int b, bool on);
    std::span<const std::uint64_t> row(int v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    int degree(int v) const;
    long long edge_count() const;

    friend bool operator==(const SeidelGraph&, const SeidelGraph&) = default;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

SeidelGraph graph_from_signature(const SignatureMatrix& q);
SignatureMatrix signature_from_graph(const SeidelGraph& g);

/// Flips every edge between `subset` and its complement (Q -> DQD).
SeidelGraph switch_graph(const SeidelGraph& g, std::span<const int> subset);

/// Switches on the neighbourhood of omega, leaving omega isolated.
SeidelGraph isolate_vertex(const SeidelGraph& g, int omega);

/// Vertex i of g becomes vertex perm[i] of the result.
SeidelGraph relabel(const SeidelGraph& g, std::span<const int> perm);

SeidelGraph induced_subgraph(const SeidelGraph& g, std::span<const int> vertices);

using Triple = std::array<int, 3>;

/// Coherent (odd-edge) triples, sorted lexicographically.
struct TwoGraph {
    int n = 0;
    std::vector<Triple> coherent_triples;

    friend bool operator==(const TwoGraph&, const TwoGraph&) = default;
};

TwoGraph two_graph(const SeidelGraph& g);

/// Every 4-subset contains an even number of coherent triples. O(n^4).
bool satisfies_two_graph_axiom(const TwoGraph& t);

/// alpha when every vertex pair lies in the same number of coherent triples.
std::optional<int> regular_two_graph_alpha(const SeidelGraph& g);

/// Parameters of the graph left after isolating omega and deleting it.
/// p counts vertices adjacent to one end of an edge but not the other, q the
/// same for a non-adjacent pair, c the common neighbours of an edge.
struct SrgReduction {
    int vertices = 0;
    int valency = 0;
    int p = 0;
    int q = 0;
    int c = 0;
};

SrgReduction srg_reduction(const SeidelGraph& g, int omega);

struct Bipartition {
    std::vector<int> side1;
    std::vector<int> side2;
};

/// Split into two (possibly empty) independent sides with all cross edges present.
std::optional<Bipartition> complete_bipartition(const SeidelGraph& g);
bool is_complete_bipartite(const SeidelGraph& g);

struct BipartiteSearchResult {
    int max_size = 0;
    std::vector<int> witness;  // lexicographically least among maximum witnesses
    int exhausted_to = 0;      // no witness of size max_size+1..exhausted_to exists
    bool complete = true;      // false when the node budget ran out
    std::uint64_t nodes = 0;
};

/// Largest vertex set (capped at m_cap) inducing a complete bipartite graph.
BipartiteSearchResult max_complete_bipartite(const SeidelGraph& g, int m_cap,
                                             std::uint64_t node_budget = 1'000'000'000ULL);

/// Visits, in lexicographic order, every m-vertex set inducing a complete
/// bipartite graph. The visitor returns false to stop. Returns the visit count.
std::uint64_t for_each_complete_bipartite(const SeidelGraph& g, int m,
                                          const std::function<bool(std::span<const int>)>& visit);

/// Minimum edge count over the switching class, by brute force (n <= 20).
int min_switching_edges(const SeidelGraph& g);

struct TripleCounts {
    std::int64_t e3 = 0; // even-edge (complete bipartite) triples
    std::int64_t o3 = 0;
};

TripleCounts count_e3_o3(const SeidelGraph& g);

/// Closed-form triple counts for a real 2-uniform (n,k)-frame, together with the
/// strongly regular parameters they are derived from.
struct TripleFormula {
    double valency = 0;
    double common = 0; // common neighbours of adjacent vertices
    double p = 0;
    std::int64_t e3 = 0;
    std::int64_t o3 = 0;
};

TripleFormula e3_formula(int n, int k);
std::int64_t count_e3_formula(int n, int k);

/// Canonical byte string of the switching class (n <= 40): equal iff the
/// graphs are switching equivalent up to relabelling.
std::string switching_certificate(const SeidelGraph& g);

std::string to_hex(std::string_view bytes);

} // namespace sf
