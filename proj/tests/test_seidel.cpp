#include "oracle.hpp"

#include "seidelframes/catalog.hpp"
#include "seidelframes/constructions.hpp"
#include "seidelframes/erasures.hpp"
#include "seidelframes/error.hpp"
#include "seidelframes/seidel.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace sf;

namespace {

SeidelGraph random_graph(int n, std::mt19937_64& rng, double density = 0.5)
{
    std::bernoulli_distribution b(density);
    SeidelGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_edge(i, j, b(rng));
    return g;
}

SeidelGraph graph_from_mask(int n, std::uint32_t mask)
{
    SeidelGraph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            g.set_edge(i, j, (mask >> bit) & 1U);
    return g;
}

std::vector<int> random_subset(int n, std::mt19937_64& rng)
{
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (rng() & 1)
            s.push_back(i);
    return s;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Brute-force oracles.
int brute_max_bipartite(const SeidelGraph& g)
{
    const int n = g.n();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U)
                s.push_back(i);
        if (static_cast<int>(s.size()) > best && is_complete_bipartite(induced_subgraph(g, s)))
            best = static_cast<int>(s.size());
    }
    return best;
}

int brute_min_switching_edges(const SeidelGraph& g)
{
    const int n = g.n();
    long long best = g.edge_count();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1U)
                s.push_back(i);
        best = std::min(best, switch_graph(g, s).edge_count());
    }
    return static_cast<int>(best);
}

TripleCounts brute_triples(const SeidelGraph& g)
{
    TripleCounts t;
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c) {
                const int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(b, c);
                (e % 2 == 0 ? t.e3 : t.o3) += 1;
            }
    return t;
}

std::vector<SignatureMatrix> two_uniform_signatures()
{
    std::vector<SignatureMatrix> out{paley_conference(5), paley_conference(13), paley_conference(17),
                                     hadamard_signature(graph_hadamard(16), false),
                                     hadamard_signature(graph_hadamard(16), true)};
    for (const auto& q : table2_matrices())
        out.push_back(q);
    return out;
}

} // namespace

TEST_CASE("graph and signature conversions")
{
    const SignatureMatrix q = paley_conference(13);
    CHECK(signature_from_graph(graph_from_signature(q)) == q);
    const SeidelGraph g = graph_from_signature(q);
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j)
                CHECK(g.adjacent(i, j) == (q(i, j) == -1));
}

TEST_CASE("switching and relabelling")
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const SeidelGraph g = random_graph(3 + trial % 20, rng);
        const auto s = random_subset(g.n(), rng);
        const SeidelGraph h = switch_graph(g, s);
        std::set<int> in(s.begin(), s.end());
        for (int i = 0; i < g.n(); ++i)
            for (int j = i + 1; j < g.n(); ++j)
                CHECK(h.adjacent(i, j) == (g.adjacent(i, j) != (in.count(i) != in.count(j))));
        CHECK(switch_graph(h, s) == g);
        CHECK(two_graph(g) == two_graph(h));
        const auto perm = random_perm(g.n(), rng);
        const SeidelGraph r = relabel(g, perm);
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j)
                if (i != j)
                    CHECK(r.adjacent(perm[i], perm[j]) == g.adjacent(i, j));
    }
}

TEST_CASE("isolate_vertex leaves omega isolated")
{
    std::mt19937_64 rng(2);
    const SeidelGraph g = random_graph(12, rng);
    for (int w = 0; w < 12; ++w)
        CHECK(isolate_vertex(g, w).degree(w) == 0);
}

TEST_CASE("two-graph axiom")
{
    std::mt19937_64 rng(4);
    for (int n = 3; n <= 12; ++n)
        CHECK(satisfies_two_graph_axiom(two_graph(random_graph(n, rng))));
    for (int n = 13; n <= 30; n += 6)
        CHECK(satisfies_two_graph_axiom(two_graph(random_graph(n, rng))));
    TwoGraph bad{4, {{0, 1, 2}}};
    CHECK_FALSE(satisfies_two_graph_axiom(bad));
}

TEST_CASE("regular two-graphs and the alpha relation")
{
    for (const auto& q : two_uniform_signatures()) {
        const FrameParameters fp = signature_parameters(q);
        const auto alpha = regular_two_graph_alpha(graph_from_signature(q));
        REQUIRE(alpha.has_value());
        CHECK(-2 * *alpha == 2 + fp.mu - fp.n);
    }
    SignatureMatrix one_edge(4, {0, -1, 1, 1, -1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0});
    CHECK_FALSE(regular_two_graph_alpha(graph_from_signature(one_edge)).has_value());
}

TEST_CASE("strongly regular reduction")
{
    const SrgReduction t1 = srg_reduction(graph_from_signature(catalog_matrix("table2-1")), 0);
    CHECK(t1.vertices == 35);
    CHECK(t1.valency == 16);
    CHECK(t1.c == 6);
    CHECK(t1.c + t1.p + 1 == t1.valency);
    const SrgReduction c6 = srg_reduction(graph_from_signature(paley_conference(5)), 0);
    CHECK(c6.valency == 2);
    CHECK(c6.c == 0);
    const SrgReduction triv = srg_reduction(graph_from_signature(trivial_signature(5, false)), 0);
    CHECK(triv.valency == 0);
    CHECK(triv.c == 0);
}

TEST_CASE("triple counts: bit-parallel vs brute force vs formula")
{
    std::mt19937_64 rng(6);
    for (int n = 3; n < 70; n += 7) {
        const SeidelGraph g = random_graph(n, rng);
        const TripleCounts a = count_e3_o3(g), b = brute_triples(g);
        CHECK(a.e3 == b.e3);
        CHECK(a.o3 == b.o3);
    }
    for (const auto& q : two_uniform_signatures()) {
        const FrameParameters fp = signature_parameters(q);
        const TripleCounts t = brute_triples(graph_from_signature(q));
        CHECK(count_e3_formula(fp.n, fp.k) == t.e3);
        CHECK(e3_formula(fp.n, fp.k).o3 == t.o3);
    }
    CHECK(count_e3_formula(36, 15) == 3780);
    CHECK(count_e3_formula(16, 6) == 320);
    CHECK(count_e3_formula(6, 3) == 10);
}

TEST_CASE("complete bipartite recognition")
{
    SeidelGraph k23(5);
    for (int a : {0, 1})
        for (int b : {2, 3, 4})
            k23.set_edge(a, b, true);
    CHECK(is_complete_bipartite(k23));
    CHECK(is_complete_bipartite(SeidelGraph(4)));
    SeidelGraph tri(3);
    tri.set_edge(0, 1, true);
    tri.set_edge(1, 2, true);
    tri.set_edge(0, 2, true);
    CHECK_FALSE(is_complete_bipartite(tri));
}

TEST_CASE("complete bipartite iff switching equivalent to the edgeless graph, all graphs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n) {
        const std::uint32_t count = 1U << (n * (n - 1) / 2);
        for (std::uint32_t mask = 0; mask < count; ++mask) {
            const SeidelGraph g = graph_from_mask(n, mask);
            const int mse = min_switching_edges(g);
            REQUIRE(is_complete_bipartite(g) == (mse == 0));
            if (n <= 5)
                REQUIRE(mse == brute_min_switching_edges(g));
        }
    }
}

TEST_CASE("max_complete_bipartite agrees with brute force on small graphs")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 60; ++trial) {
        const SeidelGraph g = random_graph(4 + trial % 11, rng, 0.2 + 0.01 * trial);
        const BipartiteSearchResult r = max_complete_bipartite(g, g.n());
        CHECK(r.complete);
        CHECK(r.max_size == brute_max_bipartite(g));
        CHECK(static_cast<int>(r.witness.size()) == r.max_size);
        CHECK(is_complete_bipartite(induced_subgraph(g, r.witness)));
        std::vector<int> first;
        for_each_complete_bipartite(g, r.max_size, [&](std::span<const int> s) {
            first.assign(s.begin(), s.end());
            return false;
        });
        CHECK(first == r.witness);
    }
}

TEST_CASE("bipartite search on frame graphs")
{
    for (const auto& q : two_uniform_signatures()) {
        const FrameParameters fp = signature_parameters(q);
        const BipartiteSearchResult r = max_complete_bipartite(graph_from_signature(q), fp.n);
        CHECK(r.max_size >= 3);
        CHECK(r.max_size <= bound_max_bipartite_size(fp.n, fp.k));
    }
    for (const auto& q : table2_matrices()) {
        const BipartiteSearchResult r = max_complete_bipartite(graph_from_signature(q), 9);
        CHECK(r.max_size == 6);
        CHECK(r.exhausted_to == 9);
    }
}

TEST_CASE("for_each_complete_bipartite enumerates exactly the complete bipartite sets")
{
    std::mt19937_64 rng(10);
    const SeidelGraph g = random_graph(11, rng, 0.4);
    for (int m = 1; m <= 5; ++m) {
        std::vector<std::vector<int>> seen, expected;
        for_each_complete_bipartite(g, m, [&](std::span<const int> s) {
            seen.emplace_back(s.begin(), s.end());
            return true;
        });
        oracle::for_each_subset(11, m, [&](const std::vector<int>& s) {
            if (is_complete_bipartite(induced_subgraph(g, s)))
                expected.push_back(s);
        });
        CHECK(seen == expected);
    }
}

TEST_CASE("compression top eigenvalue is monotone along nested sets")
{
    std::mt19937_64 rng(12);
    for (const auto& q : two_uniform_signatures()) {
        const Eigen::MatrixXd p = oracle::grammian_of_signature(q, signature_parameters(q).k);
        for (int t = 0; t < 10; ++t) {
            auto perm = random_perm(q.order(), rng);
            double prev = 0;
            for (int size = 1; size <= std::min(10, q.order()); ++size) {
                const double top = oracle::compression_top(p, std::vector<int>(perm.begin(), perm.begin() + size));
                CHECK(top >= prev - 1e-12);
                prev = top;
            }
        }
    }
}

TEST_CASE("switching certificate invariance and separation")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        const SeidelGraph g = random_graph(5 + trial % 20, rng);
        const std::string cert = switching_certificate(g);
        CHECK(switching_certificate(switch_graph(g, random_subset(g.n(), rng))) == cert);
        CHECK(switching_certificate(relabel(g, random_perm(g.n(), rng))) == cert);
    }
    std::set<std::string> certs;
    for (const auto& q : table2_matrices()) {
        const SeidelGraph g = graph_from_signature(q);
        const std::string cert = switching_certificate(g);
        CHECK(switching_certificate(relabel(switch_graph(g, random_subset(36, rng)), random_perm(36, rng))) == cert);
        certs.insert(cert);
    }
    CHECK(certs.size() == 5);
    CHECK_THROWS_AS(switching_certificate(SeidelGraph(41)), Error);
}

TEST_CASE("certificates decide switching equivalence on all 5-vertex graphs")
{
    // Oracle: two graphs are switching equivalent up to relabelling iff some
    // relabelling of one has the same two-graph as the other.
    std::vector<SeidelGraph> graphs;
    for (std::uint32_t mask = 0; mask < (1U << 10); ++mask)
        graphs.push_back(graph_from_mask(5, mask));
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2, 3, 4};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::mt19937_64 rng(15);
    for (int t = 0; t < 300; ++t) {
        const SeidelGraph& a = graphs[rng() % graphs.size()];
        const SeidelGraph& b = graphs[rng() % graphs.size()];
        bool equivalent = false;
        const TwoGraph tb = two_graph(b);
        for (const auto& perm : perms)
            if (two_graph(relabel(a, perm)) == tb) {
                equivalent = true;
                break;
            }
        CHECK((switching_certificate(a) == switching_certificate(b)) == equivalent);
    }
}
