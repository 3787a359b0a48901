#include "seidelframes/seidel.hpp"

#include "seidelframes/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace sf {

namespace {

void check_vertex(const SeidelGraph& g, int v)
{
    if (v < 0 || v >= g.n())
        throw Error(Errc::InvalidParameters, "vertex " + std::to_string(v) + " out of range");
}

int popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    int s = 0;
    for (std::size_t w = 0; w < a.size(); ++w)
        s += std::popcount(a[w] & b[w]);
    return s;
}

} // namespace

SeidelGraph::SeidelGraph(int n) : n_(n), words_((n + 63) / 64)
{
    if (n < 0)
        throw Error(Errc::InvalidParameters, "negative vertex count");
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

SeidelGraph::SeidelGraph(int n, std::span<const std::pair<int, int>> edges) : SeidelGraph(n)
{
    for (const auto& [a, b] : edges)
        set_edge(a, b, true);
}

void SeidelGraph::set_edge(int a, int b, bool on)
{
    check_vertex(*this, a);
    check_vertex(*this, b);
    if (a == b)
        throw Error(Errc::InvalidInput, "loops are not allowed");
    const std::uint64_t mb = std::uint64_t{1} << (b & 63);
    const std::uint64_t ma = std::uint64_t{1} << (a & 63);
    auto& wa = bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)];
    auto& wb = bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)];
    if (on) {
        wa |= mb;
        wb |= ma;
    } else {
        wa &= ~mb;
        wb &= ~ma;
    }
}

int SeidelGraph::degree(int v) const
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

long long SeidelGraph::edge_count() const
{
    long long s = 0;
    for (int v = 0; v < n_; ++v)
        s += degree(v);
    return s / 2;
}

SeidelGraph graph_from_signature(const SignatureMatrix& q)
{
    SeidelGraph g(q.order());
    for (int i = 0; i < q.order(); ++i)
        for (int j = i + 1; j < q.order(); ++j)
            if (q(i, j) == -1)
                g.set_edge(i, j, true);
    return g;
}

SignatureMatrix signature_from_graph(const SeidelGraph& g)
{
    IntMatrix q(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (i != j)
                q(i, j) = g.adjacent(i, j) ? -1 : 1;
    return SignatureMatrix(std::move(q));
}

SeidelGraph switch_graph(const SeidelGraph& g, std::span<const int> subset)
{
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : subset) {
        check_vertex(g, v);
        in[v] = 1;
    }
    SeidelGraph h(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.adjacent(i, j) != (in[i] != in[j]))
                h.set_edge(i, j, true);
    return h;
}

SeidelGraph isolate_vertex(const SeidelGraph& g, int omega)
{
    check_vertex(g, omega);
    std::vector<int> nbrs;
    for (int v = 0; v < g.n(); ++v)
        if (g.adjacent(omega, v))
            nbrs.push_back(v);
    return switch_graph(g, nbrs);
}

SeidelGraph relabel(const SeidelGraph& g, std::span<const int> perm)
{
    const int n = g.n();
    if (static_cast<int>(perm.size()) != n)
        throw Error(Errc::InvalidParameters, "permutation length mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw Error(Errc::InvalidParameters, "not a permutation");
        seen[p] = 1;
    }
    SeidelGraph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j))
                h.set_edge(perm[i], perm[j], true);
    return h;
}

SeidelGraph induced_subgraph(const SeidelGraph& g, std::span<const int> vertices)
{
    const int m = static_cast<int>(vertices.size());
    for (int v : vertices)
        check_vertex(g, v);
    SeidelGraph h(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (g.adjacent(vertices[a], vertices[b]))
                h.set_edge(a, b, true);
    return h;
}

TwoGraph two_graph(const SeidelGraph& g)
{
    TwoGraph t;
    t.n = g.n();
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            for (int l = j + 1; l < g.n(); ++l)
                if (g.adjacent(i, j) ^ g.adjacent(i, l) ^ g.adjacent(j, l))
                    t.coherent_triples.push_back({i, j, l});
    return t;
}

bool satisfies_two_graph_axiom(const TwoGraph& t)
{
    const std::size_t n = static_cast<std::size_t>(t.n);
    std::vector<char> coherent(n * n * n, 0);
    for (const auto& tr : t.coherent_triples) {
        if (tr[0] < 0 || tr[2] >= t.n || !(tr[0] < tr[1] && tr[1] < tr[2]))
            return false;
        coherent[(tr[0] * n + tr[1]) * n + tr[2]] = 1;
    }
    auto at = [&](std::size_t a, std::size_t b, std::size_t c) { return coherent[(a * n + b) * n + c]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if ((at(a, b, c) + at(a, b, d) + at(a, c, d) + at(b, c, d)) % 2 != 0)
                        return false;
    return true;
}

std::optional<int> regular_two_graph_alpha(const SeidelGraph& g)
{
    const int n = g.n();
    std::optional<int> alpha;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // {i,j,l} is coherent iff adj(i,l) xor adj(j,l) differs from adj(i,j)
            const auto ri = g.row(i);
            const auto rj = g.row(j);
            int differ = 0;
            for (int w = 0; w < g.words(); ++w)
                differ += std::popcount(ri[w] ^ rj[w]);
            // l = i and l = j both contribute when i~j; discount them
            if (g.adjacent(i, j))
                differ -= 2;
            const int others = n - 2;
            const int count = g.adjacent(i, j) ? others - differ : differ;
            if (!alpha)
                alpha = count;
            else if (*alpha != count)
                return std::nullopt;
        }
    }
    return alpha.value_or(0);
}

SrgReduction srg_reduction(const SeidelGraph& g, int omega)
{
    check_vertex(g, omega);
    const SeidelGraph h = isolate_vertex(g, omega);
    const int n = g.n();
    SrgReduction r;
    r.vertices = n - 1;
    std::optional<int> valency;
    for (int u = 0; u < n; ++u) {
        if (u == omega)
            continue;
        const int d = h.degree(u);
        if (valency && *valency != d)
            throw Error(Errc::NotStronglyRegular, "valency not constant after isolating vertex " + std::to_string(omega));
        valency = d;
    }
    r.valency = valency.value_or(0);
    std::optional<int> c, p, q;
    for (int u = 0; u < n; ++u) {
        if (u == omega)
            continue;
        for (int w = u + 1; w < n; ++w) {
            if (w == omega)
                continue;
            const int common = popcount_and(h.row(u), h.row(w));
            if (h.adjacent(u, w)) {
                const int one_sided = h.degree(u) - common - 1;
                if ((c && *c != common) || (p && *p != one_sided))
                    throw Error(Errc::NotStronglyRegular, "edge counts not constant");
                c = common;
                p = one_sided;
            } else {
                const int one_sided = h.degree(u) - common;
                if (q && *q != one_sided)
                    throw Error(Errc::NotStronglyRegular, "non-edge counts not constant");
                q = one_sided;
            }
        }
    }
    r.c = c.value_or(0);
    r.p = p.value_or(0);
    r.q = q.value_or(0);
    if (c && r.c + r.p + 1 != r.valency)
        throw Error(Errc::NotStronglyRegular, "c + p + 1 != v");
    return r;
}

std::optional<Bipartition> complete_bipartition(const SeidelGraph& g)
{
    const int n = g.n();
    Bipartition b;
    if (n == 0)
        return b;
    // side of vertex v is fixed by its adjacency to vertex 0
    for (int v = 0; v < n; ++v)
        (v == 0 || !g.adjacent(0, v) ? b.side2 : b.side1).push_back(v);
    for (int i = 0; i < n; ++i) {
        const bool si = i != 0 && g.adjacent(0, i);
        for (int j = i + 1; j < n; ++j) {
            const bool sj = g.adjacent(0, j);
            if (g.adjacent(i, j) != (si != sj))
                return std::nullopt;
        }
    }
    return b;
}

bool is_complete_bipartite(const SeidelGraph& g)
{
    return complete_bipartition(g).has_value();
}

namespace {

using Bits = std::vector<std::uint64_t>;

class BipartiteSearch {
public:
    BipartiteSearch(const SeidelGraph& g, int cap, std::uint64_t budget) : g_(g), cap_(cap), budget_(budget)
    {
        const int n = g.n();
        const int w = g.words();
        adj_.resize(n);
        non_.resize(n);
        above_.resize(n);
        for (int v = 0; v < n; ++v) {
            const auto r = g.row(v);
            adj_[v].assign(r.begin(), r.end());
            non_[v].assign(w, 0);
            above_[v].assign(w, 0);
            for (int u = 0; u < n; ++u) {
                if (u != v && !g.adjacent(u, v))
                    non_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
                if (u > v)
                    above_[v][u >> 6] |= std::uint64_t{1} << (u & 63);
            }
        }
    }

    // Find mode: maximise size, first strict improvement in lexicographic order wins.
    void find_max()
    {
        for (int v = 0; v < g_.n() && !stop_; ++v) {
            if (1 + (g_.n() - v - 1) <= best_size_)
                break;
            root(v);
        }
    }

    // Visit mode: every set of exactly `target` vertices.
    std::uint64_t visit_all(int target, const std::function<bool(std::span<const int>)>& visit)
    {
        target_ = target;
        visit_ = &visit;
        for (int v = 0; v < g_.n() && !stop_; ++v) {
            if (1 + (g_.n() - v - 1) < target)
                break;
            root(v);
        }
        return visited_;
    }

    int best_size() const { return best_size_; }
    const std::vector<int>& best() const { return best_; }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void root(int v)
    {
        const int w = g_.words();
        Bits c1(w), c2(w);
        for (int i = 0; i < w; ++i) {
            c1[i] = non_[v][i] & above_[v][i];
            c2[i] = adj_[v][i] & above_[v][i];
        }
        cur_.push_back(v);
        dfs(c1, c2);
        cur_.pop_back();
    }

    static int count(const Bits& a, const Bits& b)
    {
        int s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += std::popcount(a[i] | b[i]);
        return s;
    }

    void dfs(const Bits& c1, const Bits& c2)
    {
        if (stop_)
            return;
        if (++nodes_ > budget_) {
            stop_ = true;
            exhausted_ = true;
            return;
        }
        const int size = static_cast<int>(cur_.size());
        if (visit_) {
            if (size == target_) {
                ++visited_;
                if (!(*visit_)(cur_))
                    stop_ = true;
                return;
            }
        } else {
            if (size > best_size_) {
                best_size_ = size;
                best_ = cur_;
            }
            if (size >= cap_) {
                stop_ = true;
                return;
            }
        }
        const int w = g_.words();
        Bits n1(w), n2(w);
        int remaining = count(c1, c2);
        for (int word = 0; word < w && !stop_; ++word) {
            std::uint64_t pending = c1[word] | c2[word];
            while (pending && !stop_) {
                if (visit_ ? size + remaining < target_ : size + remaining <= best_size_)
                    return;
                const int bit = std::countr_zero(pending);
                pending &= pending - 1;
                --remaining;
                const int v = word * 64 + bit;
                const bool first_side = (c1[word] >> bit) & 1U;
                const Bits& keep1 = first_side ? non_[v] : adj_[v];
                const Bits& keep2 = first_side ? adj_[v] : non_[v];
                for (int i = 0; i < w; ++i) {
                    n1[i] = c1[i] & keep1[i] & above_[v][i];
                    n2[i] = c2[i] & keep2[i] & above_[v][i];
                }
                cur_.push_back(v);
                dfs(n1, n2);
                cur_.pop_back();
            }
        }
    }

    const SeidelGraph& g_;
    int cap_;
    std::uint64_t budget_;
    std::vector<Bits> adj_, non_, above_;
    std::vector<int> cur_;
    std::vector<int> best_;
    int best_size_ = 0;
    bool stop_ = false;
    bool exhausted_ = false;
    std::uint64_t nodes_ = 0;
    int target_ = 0;
    const std::function<bool(std::span<const int>)>* visit_ = nullptr;
    std::uint64_t visited_ = 0;
};

} // namespace

BipartiteSearchResult max_complete_bipartite(const SeidelGraph& g, int m_cap, std::uint64_t node_budget)
{
    if (m_cap < 0 || m_cap > g.n())
        throw Error(Errc::InvalidParameters, "m_cap must lie in [0, n]");
    BipartiteSearchResult r;
    if (m_cap == 0) {
        r.exhausted_to = 0;
        return r;
    }
    BipartiteSearch s(g, m_cap, node_budget);
    s.find_max();
    r.max_size = s.best_size();
    r.witness = s.best();
    r.nodes = s.nodes();
    r.complete = !s.exhausted();
    r.exhausted_to = r.complete ? m_cap : r.max_size;
    return r;
}

std::uint64_t for_each_complete_bipartite(const SeidelGraph& g, int m,
                                          const std::function<bool(std::span<const int>)>& visit)
{
    if (m < 1 || m > g.n())
        throw Error(Errc::InvalidParameters, "subset size must lie in [1, n]");
    BipartiteSearch s(g, m, ~std::uint64_t{0});
    return s.visit_all(m, visit);
}

int min_switching_edges(const SeidelGraph& g)
{
    const int m = g.n();
    if (m > 20)
        throw Error(Errc::SizeLimit, "min_switching_edges is limited to 20 vertices, got " + std::to_string(m));
    if (m < 2)
        return 0;
    std::vector<int> deg(m);
    std::vector<char> sw(m, 0);
    for (int v = 0; v < m; ++v)
        deg[v] = g.degree(v);
    long long edges = g.edge_count();
    long long best = edges;
    // Gray code over switchings of vertices 1..m-1; vertex 0 stays fixed
    const std::uint32_t total = std::uint32_t{1} << (m - 1);
    for (std::uint32_t i = 1; i < total; ++i) {
        const int v = 1 + std::countr_zero(i);
        sw[v] ^= 1;
        for (int u = 0; u < m; ++u) {
            if (u == v)
                continue;
            const bool now = g.adjacent(u, v) != (sw[u] != sw[v]);
            deg[u] += now ? 1 : -1;
        }
        edges += (m - 1 - deg[v]) - deg[v];
        deg[v] = m - 1 - deg[v];
        best = std::min(best, edges);
    }
    return static_cast<int>(best);
}

TripleCounts count_e3_o3(const SeidelGraph& g)
{
    const int n = g.n();
    const int w = g.words();
    TripleCounts t;
    Bits mask(w);
    for (int i = 0; i < n; ++i) {
        const auto ri = g.row(i);
        for (int j = i + 1; j < n; ++j) {
            const auto rj = g.row(j);
            std::fill(mask.begin(), mask.end(), 0);
            for (int l = j + 1; l < n; ++l)
                mask[l >> 6] |= std::uint64_t{1} << (l & 63);
            int odd = 0;
            const bool ij = g.adjacent(i, j);
            for (int x = 0; x < w; ++x) {
                const std::uint64_t diff = ri[x] ^ rj[x];
                odd += std::popcount((ij ? ~diff : diff) & mask[x]);
            }
            t.o3 += odd;
            t.e3 += (n - j - 1) - odd;
        }
    }
    return t;
}

TripleFormula e3_formula(int n, int k)
{
    if (n < 3 || k < 1 || k >= n)
        throw Error(Errc::InvalidParameters, "triple counts need 1 <= k < n and n >= 3");
    const double r1 = std::sqrt(static_cast<double>(n - k) * (n - 1) / k);
    const double r2 = -std::sqrt(static_cast<double>(k) * (n - 1) / (n - k));
    const double v = (n - 2 - r1 - r2) / 2;
    const double p = -(r1 - 1) * (r2 - 1) / 4;
    double c = v - 1 - p;
    auto integral = [](double x) { return std::abs(x - std::round(x)) < 1e-9; };
    if (!integral(v) || (std::round(v) != 0 && !integral(p)))
        throw Error(Errc::InvalidParameters,
                    "(" + std::to_string(n) + "," + std::to_string(k) + ") gives non-integral strongly regular parameters");
    TripleFormula f;
    f.valency = std::round(v);
    if (f.valency == 0)
        c = 0;
    f.common = std::round(c);
    f.p = f.valency == 0 ? 0 : std::round(p);
    const long long nn = n;
    const long long vv = static_cast<long long>(f.valency);
    const long long cc = static_cast<long long>(f.common);
    const long long total = nn * (nn - 1) * (nn - 2) / 6;
    const long long t1 = vv * (nn - 1) * cc;
    const long long t2 = (nn - 2 * vv + cc) * (nn - 1) * vv;
    if (t1 % 6 != 0 || t2 % 2 != 0)
        throw Error(Errc::InvalidParameters, "triple count formula gives a non-integer");
    f.e3 = total - t1 / 6 - t2 / 2;
    f.o3 = total - f.e3;
    return f;
}

std::int64_t count_e3_formula(int n, int k)
{
    return e3_formula(n, k).e3;
}

// ---------------------------------------------------------------------------
// Switching certificate: individualisation/refinement over all isolated
// representatives, minimising (invariant path, adjacency bits).

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;
using Invariant = std::vector<std::uint8_t>;

class Canonizer {
public:
    explicit Canonizer(const SeidelGraph& g) : g_(g), n_(g.n()) {}

    std::string run()
    {
        for (int omega = 0; omega < n_; ++omega) {
            const SeidelGraph h = isolate_vertex(g_, omega);
            adj_.assign(n_, 0);
            for (int i = 0; i < n_; ++i)
                for (int j = 0; j < n_; ++j)
                    if (h.adjacent(i, j))
                        adj_[i] |= Mask{1} << j;
            std::vector<int> rest;
            for (int v = 0; v < n_; ++v)
                if (v != omega)
                    rest.push_back(v);
            Cells cells{{omega}};
            if (!rest.empty())
                cells.push_back(rest);
            path_.clear();
            search(std::move(cells));
        }
        std::string out;
        out.push_back(static_cast<char>(n_ & 0xff));
        out.push_back(static_cast<char>((n_ >> 8) & 0xff));
        out.append(best_bits_);
        return out;
    }

private:
    Cells refine(Cells cells) const
    {
        for (;;) {
            std::vector<Mask> masks(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c])
                    masks[c] |= Mask{1} << v;
            Cells next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> key(masks.size());
                    for (std::size_t c = 0; c < masks.size(); ++c)
                        key[c] = std::popcount(adj_[v] & masks[c]);
                    keyed.emplace_back(std::move(key), v);
                }
                std::sort(keyed.begin(), keyed.end());
                for (std::size_t a = 0; a < keyed.size();) {
                    std::size_t b = a;
                    std::vector<int> part;
                    while (b < keyed.size() && keyed[b].first == keyed[a].first)
                        part.push_back(keyed[b++].second);
                    next.push_back(std::move(part));
                    a = b;
                }
            }
            const bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable)
                return cells;
        }
    }

    Invariant invariant(const Cells& cells) const
    {
        Invariant inv;
        std::vector<Mask> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c])
                masks[c] |= Mask{1} << v;
        inv.push_back(static_cast<std::uint8_t>(cells.size()));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            inv.push_back(static_cast<std::uint8_t>(cells[c].size()));
            const int rep = cells[c].front();
            for (std::size_t d = 0; d < cells.size(); ++d)
                inv.push_back(static_cast<std::uint8_t>(std::popcount(adj_[rep] & masks[d])));
        }
        return inv;
    }

    static bool is_homogeneous(const Cells& cells, const Invariant& inv)
    {
        const std::size_t k = cells.size();
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t d = 0; d < k; ++d) {
                const std::size_t full = cells[d].size() - (c == d ? 1 : 0);
                const std::size_t count = inv[1 + c * (k + 1) + 1 + d];
                if (count != 0 && count != full)
                    return false;
            }
        return true;
    }

    // -1, 0, 1 comparing the current path with the best path over the common depth
    int compare_path() const
    {
        const std::size_t d = std::min(path_.size(), best_path_.size());
        for (std::size_t i = 0; i < d; ++i) {
            if (path_[i] < best_path_[i])
                return -1;
            if (best_path_[i] < path_[i])
                return 1;
        }
        return 0;
    }

    std::string leaf_bits(const Cells& cells) const
    {
        std::vector<int> order;
        for (const auto& c : cells)
            order.push_back(c.front());
        std::string bits((n_ * (n_ - 1) / 2 + 7) / 8, '\0');
        int idx = 0;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b, ++idx)
                if ((adj_[order[a]] >> order[b]) & 1U)
                    bits[idx >> 3] = static_cast<char>(bits[idx >> 3] | (1 << (idx & 7)));
        return bits;
    }

    void search(Cells cells)
    {
        cells = refine(std::move(cells));
        path_.push_back(invariant(cells));
        const int cmp = have_best_ ? compare_path() : -1;
        if (cmp > 0) {
            path_.pop_back();
            return;
        }
        if (cells.size() == static_cast<std::size_t>(n_)) {
            std::string bits = leaf_bits(cells);
            if (!have_best_ || cmp < 0 || path_.size() < best_path_.size() ||
                (path_.size() == best_path_.size() && bits < best_bits_)) {
                have_best_ = true;
                best_path_ = path_;
                best_bits_ = std::move(bits);
            }
            path_.pop_back();
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        // every cell-preserving permutation is an automorphism: one branch suffices
        const bool homogeneous = is_homogeneous(cells, path_.back());
        for (int v : cells[target]) {
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> others;
                for (int u : cells[c])
                    if (u != v)
                        others.push_back(u);
                child.push_back(std::move(others));
            }
            search(std::move(child));
            if (homogeneous)
                break;
        }
        path_.pop_back();
    }

    const SeidelGraph& g_;
    int n_;
    std::vector<Mask> adj_;
    std::vector<Invariant> path_;
    std::vector<Invariant> best_path_;
    std::string best_bits_;
    bool have_best_ = false;
};

} // namespace

std::string switching_certificate(const SeidelGraph& g)
{
    if (g.n() > 40)
        throw Error(Errc::SizeLimit, "switching certificates are limited to 40 vertices, got " + std::to_string(g.n()));
    return Canonizer(g).run();
}

std::string to_hex(std::string_view bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

} // namespace sf
