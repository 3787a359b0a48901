#include "seidelframes/erasures.hpp"

#include "seidelframes/constructions.hpp"
#include "seidelframes/seidel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <string>
#include <thread>

namespace sf {

ErasureSet::ErasureSet(std::vector<int> indices, int n) : indices_(std::move(indices))
{
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0 || indices_[i] >= n)
            throw Error(Errc::InvalidParameters, "erasure index out of range");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw Error(Errc::InvalidParameters, "erasure indices must be strictly ascending");
    }
}

ErasureSet ErasureSet::from_one_based(std::span<const int> indices, int n)
{
    std::vector<int> zero;
    zero.reserve(indices.size());
    for (int i : indices)
        zero.push_back(i - 1);
    return ErasureSet(std::move(zero), n);
}

std::vector<int> ErasureSet::one_based() const
{
    std::vector<int> out(indices_);
    for (int& i : out)
        ++i;
    return out;
}

double binomial(int n, int m)
{
    if (m < 0 || m > n)
        return 0;
    m = std::min(m, n - m);
    double r = 1;
    for (int i = 1; i <= m; ++i)
        r = r * (n - m + i) / i;
    return std::round(r);
}

double compression_norm(const GrammianProjection& p, const ErasureSet& s)
{
    if (s.m() == 0)
        throw Error(Errc::InvalidParameters, "empty erasure set");
    if (s.indices().back() >= p.n())
        throw Error(Errc::InvalidParameters, "erasure index out of range");
    return top_eigenvalue(p.matrix().compress(s.indices()));
}

// ---------------------------------------------------------------------------
// Closed forms

double bound_basic(int n, int k, int m)
{
    if (m < 1)
        throw Error(Errc::InvalidParameters, "m must be >= 1");
    return static_cast<double>(k) / n + (m - 1) * c_nk(n, k);
}

double bound_refined(int n, int k, int m)
{
    if (m < 3)
        throw Error(Errc::InvalidParameters, "the refined bound needs m >= 3");
    const double mm = m;
    return static_cast<double>(k) / n + c_nk(n, k) * (mm / 2 - 2 + std::sqrt(mm * mm / 4 + mm - 3));
}

int bound_max_bipartite_size(int n, int k)
{
    c_nk(n, k); // parameter validation
    const double third = 1 + std::sqrt(static_cast<double>(n - k) * (n - 1) / k);
    const double v = std::min({static_cast<double>(k), static_cast<double>(n - k), third});
    return static_cast<int>(std::floor(v + 1e-9));
}

int full_erasure_threshold(int n, int k)
{
    if (k < 1 || k > n)
        throw Error(Errc::InvalidParameters, "need 1 <= k <= n");
    return n - k + 1;
}

double e_3_inf_two_uniform(int n, int k)
{
    if (k >= n - 1)
        throw Error(Errc::InvalidParameters, "e_3 closed form needs k < n - 1");
    return static_cast<double>(k) / n + 2 * c_nk(n, k);
}

double e_3_p_closed(int n, int k, double power)
{
    if (!(power >= 1) || std::isinf(power))
        throw Error(Errc::InvalidParameters, "p must be finite and >= 1");
    const TripleFormula f = e3_formula(n, k);
    const double c = c_nk(n, k);
    const double kn = static_cast<double>(k) / n;
    const double total = binomial(n, 3);
    const double mean = (static_cast<double>(f.e3) * std::pow(kn + 2 * c, power) +
                         static_cast<double>(f.o3) * std::pow(kn + c, power)) / total;
    return std::pow(mean, 1 / power);
}

std::optional<TwoUniformShape> two_uniform_shape(const GrammianProjection& p, double tol)
{
    const int n = p.n();
    const int k = p.k();
    if (k < 1 || k >= n)
        return std::nullopt;
    const double kn = static_cast<double>(k) / n;
    const double c = c_nk(n, k);
    for (int i = 0; i < n; ++i) {
        if (std::abs(p(i, i) - kn) > tol)
            return std::nullopt;
        for (int j = i + 1; j < n; ++j)
            if (std::abs(std::abs(p(i, j)) - c) > tol)
                return std::nullopt;
    }
    return TwoUniformShape{k, c};
}

// ---------------------------------------------------------------------------
// Enumeration engine

namespace {

constexpr double kPruneSlack = 1e-10;
constexpr int kIncrementalMaxM = 64;

struct Neumaier {
    double sum = 0;
    double comp = 0;
    void add(double x)
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Lexicographically smallest sets seen, capped at worst_set_limit.
struct FirstSets {
    std::vector<std::vector<int>> sets;
    void offer(std::span<const int> s)
    {
        if (static_cast<int>(sets.size()) == worst_set_limit &&
            !std::lexicographical_compare(s.begin(), s.end(), sets.back().begin(), sets.back().end()))
            return;
        std::vector<int> v(s.begin(), s.end());
        sets.insert(std::upper_bound(sets.begin(), sets.end(), v), std::move(v));
        if (static_cast<int>(sets.size()) > worst_set_limit)
            sets.pop_back();
    }
};

// A chunk is either all subsets with largest element `a` (plain route) or all
// subsets with lexicographic prefix (a) / (a, b) (incremental route).
struct Chunk {
    int a = 0;
    int b = -1;
    double size = 0;
};

enum class Pass { Max, Collect, Power };

struct ChunkResult {
    double max = -std::numeric_limits<double>::infinity();
    std::uint64_t examined = 0;
    std::uint64_t hits = 0;
    FirstSets first;
    Neumaier sum;
};

struct PassSpec {
    Pass pass = Pass::Max;
    double seed = -std::numeric_limits<double>::infinity(); // Max: known lower bound
    double threshold = 0;                                     // Collect: keep values >= threshold
    double power = 1;
    bool prune = false;
};

class Enumerator {
public:
    Enumerator(const GrammianProjection& p, int m) : n_(p.n()), m_(m), p_(p.matrix().matrix().data().begin(), p.matrix().matrix().data().end())
    {
        for (int i = 0; i < n_; ++i) {
            max_diag_ = std::max(max_diag_, at(i, i));
            for (int j = i + 1; j < n_; ++j)
                max_off_ = std::max(max_off_, std::abs(at(i, j)));
        }
    }

    double at(int i, int j) const { return p_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<Chunk> plain_chunks() const
    {
        std::vector<Chunk> out;
        for (int a = m_ - 1; a < n_; ++a)
            out.push_back({a, -1, binomial(a, m_ - 1)});
        return out;
    }

    std::vector<Chunk> incremental_chunks() const
    {
        std::vector<Chunk> out;
        if (m_ == 1) {
            for (int a = 0; a < n_; ++a)
                out.push_back({a, -1, 1});
            return out;
        }
        for (int a = 0; a + m_ <= n_; ++a)
            for (int b = a + 1; b + m_ - 1 <= n_; ++b)
                out.push_back({a, b, binomial(n_ - 1 - b, m_ - 2)});
        return out;
    }

    ChunkResult run_plain(const Chunk& ch, const PassSpec& spec) const
    {
        ChunkResult r;
        std::vector<int> s(m_);
        std::vector<double> buf(static_cast<std::size_t>(m_) * m_);
        std::vector<double> values(m_);
        for (int i = 0; i + 1 < m_; ++i)
            s[i] = i;
        s[m_ - 1] = ch.a;
        for (;;) {
            for (int x = 0; x < m_; ++x)
                for (int y = 0; y < m_; ++y)
                    buf[static_cast<std::size_t>(x) * m_ + y] = at(s[x], s[y]);
            detail::jacobi(buf, m_, values, {});
            const double lam = *std::max_element(values.begin(), values.end());
            ++r.examined;
            leaf(r, spec, lam, s);
            // colexicographic successor among the first m-1 entries, below ch.a
            int i = 0;
            while (i + 1 < m_ && s[i] + 1 == (i + 2 < m_ ? s[i + 1] : ch.a))
                ++i;
            if (i + 1 >= m_)
                break;
            ++s[i];
            for (int j = 0; j < i; ++j)
                s[j] = j;
        }
        return r;
    }

    ChunkResult run_incremental(const Chunk& ch, const PassSpec& spec) const
    {
        Walker w(*this, spec);
        w.start(ch);
        return std::move(w.result);
    }

    // Deterministic lower bound on the maximum: greedy growth from every start.
    double greedy_seed() const
    {
        double best = -std::numeric_limits<double>::infinity();
        std::vector<double> buf, values;
        for (int start = 0; start < n_; ++start) {
            std::vector<int> s{start};
            double lam = at(start, start);
            while (static_cast<int>(s.size()) < m_) {
                int pick = -1;
                double pick_val = -std::numeric_limits<double>::infinity();
                for (int j = 0; j < n_; ++j) {
                    if (std::find(s.begin(), s.end(), j) != s.end())
                        continue;
                    s.push_back(j);
                    const int d = static_cast<int>(s.size());
                    buf.assign(static_cast<std::size_t>(d) * d, 0);
                    values.assign(d, 0);
                    for (int x = 0; x < d; ++x)
                        for (int y = 0; y < d; ++y)
                            buf[static_cast<std::size_t>(x) * d + y] = at(s[x], s[y]);
                    detail::jacobi(buf, d, values, {});
                    const double v = *std::max_element(values.begin(), values.end());
                    s.pop_back();
                    if (v > pick_val) {
                        pick_val = v;
                        pick = j;
                    }
                }
                s.push_back(pick);
                lam = pick_val;
            }
            best = std::max(best, lam);
        }
        return best;
    }

    int n() const { return n_; }
    int m() const { return m_; }

private:
    static void leaf(ChunkResult& r, const PassSpec& spec, double lam, std::span<const int> s)
    {
        switch (spec.pass) {
        case Pass::Max:
            r.max = std::max(r.max, lam);
            break;
        case Pass::Collect:
            r.max = std::max(r.max, lam);
            if (lam >= spec.threshold) {
                ++r.hits;
                std::vector<int> sorted(s.begin(), s.end());
                std::sort(sorted.begin(), sorted.end());
                r.first.offer(sorted);
            }
            break;
        case Pass::Power:
            r.sum.add(std::pow(std::max(lam, 0.0), spec.power));
            break;
        }
    }

    // Depth-first walk in lexicographic order. Level d holds the
    // eigendecomposition of the compression to the first d chosen indices;
    // children are evaluated from it through the bordered secular equation.
    struct Walker {
        const Enumerator& e;
        PassSpec spec;
        ChunkResult result;
        std::vector<int> idx;
        std::vector<std::vector<double>> values, vectors, weight;
        std::vector<double> border, scratch;

        Walker(const Enumerator& en, const PassSpec& sp) : e(en), spec(sp)
        {
            const int m = e.m_;
            idx.assign(m, 0);
            values.resize(m + 1);
            vectors.resize(m + 1);
            weight.resize(m + 1);
            for (int d = 0; d <= m; ++d) {
                values[d].assign(d, 0);
                vectors[d].assign(static_cast<std::size_t>(d) * d, 0);
                weight[d].assign(e.n_, 0);
            }
            border.assign(m, 0);
        }

        double cutoff() const
        {
            if (spec.pass == Pass::Max)
                return std::max(spec.seed, result.max) - tie_tolerance - kPruneSlack;
            return spec.threshold - kPruneSlack;
        }

        // Upper bound for every completion of the current prefix of length d
        // (whose top eigenvalue is lam) to size m, using the 2x2 block bound
        // lambda(S) <= lambda_max [[lam, beta], [beta, gamma]] with
        // beta >= ||P_{T,R}|| and gamma >= lambda(P_R).
        double completion_bound(double lam, int d) const
        {
            const int r = e.m_ - d;
            double wmax = 0;
            for (int u = idx[d - 1] + 1; u < e.n_; ++u)
                wmax = std::max(wmax, weight[d][u]);
            const double beta2 = r * wmax;
            const double gamma = std::min(1.0, e.max_diag_ + (r - 1) * e.max_off_);
            const double half = 0.5 * (lam - gamma);
            return 0.5 * (lam + gamma) + std::sqrt(half * half + beta2);
        }

        // Fill level d from idx[0..d-1] by a full eigensolve.
        void factor(int d)
        {
            scratch.resize(static_cast<std::size_t>(d) * d);
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < d; ++y)
                    scratch[static_cast<std::size_t>(x) * d + y] = e.at(idx[x], idx[y]);
            detail::jacobi(scratch, d, values[d], vectors[d]);
            const int j = idx[d - 1];
            for (int u = 0; u < e.n_; ++u) {
                const double pu = e.at(j, u);
                weight[d][u] = weight[d - 1][u] + pu * pu;
            }
        }

        double top(int d) const { return *std::max_element(values[d].begin(), values[d].end()); }

        void start(const Chunk& ch)
        {
            idx[0] = ch.a;
            if (e.m_ == 1) {
                ++result.examined;
                leaf(result, spec, e.at(ch.a, ch.a), std::span<const int>(idx.data(), 1));
                return;
            }
            idx[1] = ch.b;
            if (e.m_ == 2) {
                const double x = e.at(ch.a, ch.a), y = e.at(ch.b, ch.b), z = e.at(ch.a, ch.b);
                const double half = 0.5 * (x - y);
                ++result.examined;
                leaf(result, spec, 0.5 * (x + y) + std::sqrt(half * half + z * z), std::span<const int>(idx.data(), 2));
                return;
            }
            factor(1);
            factor(2);
            if (spec.prune && completion_bound(top(2), 2) < cutoff())
                return;
            descend(2);
        }

        void descend(int d)
        {
            const int m = e.m_;
            const int n = e.n_;
            for (int j = idx[d - 1] + 1; j <= n - (m - d); ++j) {
                for (int i = 0; i < d; ++i)
                    border[i] = e.at(idx[i], j);
                const double lam = detail::bordered_top_eigenvalue(values[d], vectors[d], d,
                                                                   std::span<const double>(border.data(), d), e.at(j, j));
                idx[d] = j;
                if (d + 1 == m) {
                    ++result.examined;
                    leaf(result, spec, lam, idx);
                    continue;
                }
                if (spec.prune) {
                    // weight for level d+1 is needed by the bound; compute it lazily
                    double wmax = 0;
                    for (int u = j + 1; u < n; ++u) {
                        const double pu = e.at(j, u);
                        wmax = std::max(wmax, weight[d][u] + pu * pu);
                    }
                    const int r = m - d - 1;
                    const double gamma = std::min(1.0, e.max_diag_ + (r - 1) * e.max_off_);
                    const double half = 0.5 * (lam - gamma);
                    const double bound = 0.5 * (lam + gamma) + std::sqrt(half * half + r * wmax);
                    if (bound < cutoff())
                        continue;
                }
                factor(d + 1);
                descend(d + 1);
            }
        }
    };

    int n_;
    int m_;
    std::vector<double> p_;
    double max_diag_ = 0;
    double max_off_ = 0;
};

template <class Fn>
void run_parallel(std::size_t count, int workers, Fn&& fn)
{
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load())
                    return;
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

struct Plan {
    std::vector<Chunk> chunks;   // canonical order, truncated to the budget
    std::vector<std::size_t> schedule; // processing order: largest first
    bool partial = false;
    bool incremental = false;
};

Plan make_plan(const Enumerator& e, const ErasureOptions& options, bool incremental)
{
    Plan plan;
    plan.incremental = incremental;
    std::vector<Chunk> all = incremental ? e.incremental_chunks() : e.plain_chunks();
    const double total = binomial(e.n(), e.m());
    if (total > static_cast<double>(options.budget)) {
        plan.partial = true;
        double used = 0;
        for (const Chunk& c : all) {
            if (used + c.size > static_cast<double>(options.budget))
                break;
            used += c.size;
            plan.chunks.push_back(c);
        }
    } else {
        plan.chunks = std::move(all);
    }
    plan.schedule.resize(plan.chunks.size());
    for (std::size_t i = 0; i < plan.schedule.size(); ++i)
        plan.schedule[i] = i;
    std::stable_sort(plan.schedule.begin(), plan.schedule.end(),
                     [&](std::size_t x, std::size_t y) { return plan.chunks[x].size > plan.chunks[y].size; });
    return plan;
}

std::vector<ChunkResult> run_plan(const Enumerator& e, const Plan& plan, const std::vector<std::size_t>& which,
                                  const PassSpec& spec, int workers)
{
    std::vector<ChunkResult> results(plan.chunks.size());
    run_parallel(which.size(), workers, [&](std::size_t t) {
        const std::size_t i = which[t];
        results[i] = plan.incremental ? e.run_incremental(plan.chunks[i], spec) : e.run_plain(plan.chunks[i], spec);
    });
    return results;
}

void validate_m(const GrammianProjection& p, int m)
{
    if (m < 1 || m > p.n())
        throw Error(Errc::InvalidParameters,
                    "m must lie in [1, n] = [1, " + std::to_string(p.n()) + "], got " + std::to_string(m));
}

ErasureReport base_report(const GrammianProjection& p, int m, double power)
{
    ErasureReport r;
    r.n = p.n();
    r.k = p.k();
    r.m = m;
    r.p = power;
    if (auto shape = two_uniform_shape(p)) {
        r.bound_basic = bound_basic(r.n, r.k, m);
        if (m >= 3)
            r.bound_refined = bound_refined(r.n, r.k, m);
    }
    return r;
}

std::string budget_message(const ErasureReport& r, const ErasureOptions& options)
{
    return "C(" + std::to_string(r.n) + "," + std::to_string(r.m) + ") subsets exceed the budget of " +
           std::to_string(options.budget);
}

// Saturation shortcut for 2-uniform frames: the maximum equals k/n + (m-1)c
// exactly when some m-subset induces a complete bipartite graph, and the
// maximising sets are precisely those subsets.
std::optional<ErasureReport> saturation_shortcut(const GrammianProjection& p, int m, ErasureReport r)
{
    if (m < 2 || !r.bound_basic || m > bound_max_bipartite_size(r.n, r.k))
        return std::nullopt;
    SeidelGraph g(p.n());
    for (int i = 0; i < p.n(); ++i)
        for (int j = i + 1; j < p.n(); ++j)
            if (p(i, j) < 0)
                g.set_edge(i, j, true);
    if (max_complete_bipartite(g, m).max_size < m)
        return std::nullopt;
    FirstSets first;
    r.worst_count = for_each_complete_bipartite(g, m, [&](std::span<const int> s) {
        first.offer(s);
        return true;
    });
    for (auto& s : first.sets)
        r.worst_sets.emplace_back(s, r.n);
    r.value = compression_norm(p, r.worst_sets.front());
    r.subsets_examined = r.worst_count;
    r.saturated_basic = true;
    r.method = "bipartite-saturation";
    return r;
}

} // namespace

ErasureReport e_m_inf(const GrammianProjection& p, int m, const ErasureOptions& options)
{
    validate_m(p, m);
    ErasureReport r = base_report(p, m, p_infinity);
    if (options.prune && options.saturation_shortcut)
        if (auto shortcut = saturation_shortcut(p, m, r))
            return *shortcut;

    const Enumerator e(p, m);
    const bool incremental = options.prune && m <= kIncrementalMaxM;
    const Plan plan = make_plan(e, options, incremental);

    PassSpec first;
    first.pass = Pass::Max;
    first.prune = incremental;
    if (incremental && !plan.partial)
        first.seed = e.greedy_seed();
    const std::vector<ChunkResult> phase1 = run_plan(e, plan, plan.schedule, first, options.workers);

    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : phase1) {
        best = std::max(best, c.max);
        r.subsets_examined += c.examined;
    }

    PassSpec second;
    second.pass = Pass::Collect;
    second.prune = incremental;
    second.threshold = best - tie_tolerance;
    std::vector<std::size_t> again;
    for (std::size_t i : plan.schedule)
        if (phase1[i].max >= second.threshold)
            again.push_back(i);
    const std::vector<ChunkResult> phase2 = run_plan(e, plan, again, second, options.workers);

    FirstSets merged;
    for (std::size_t i = 0; i < phase2.size(); ++i) {
        r.worst_count += phase2[i].hits;
        for (const auto& s : phase2[i].first.sets)
            merged.offer(s);
    }
    for (auto& s : merged.sets)
        r.worst_sets.emplace_back(s, r.n);
    r.value = best;
    r.method = incremental ? "incremental" : "enumeration";
    if (r.bound_basic)
        r.saturated_basic = std::abs(r.value - *r.bound_basic) <= tie_tolerance;
    if (plan.partial) {
        r.exact = false;
        throw BudgetExceeded(budget_message(r, options), r);
    }
    return r;
}

ErasureReport e_m_p(const GrammianProjection& p, int m, double power, const ErasureOptions& options)
{
    if (std::isinf(power) && power > 0)
        return e_m_inf(p, m, options);
    if (!(power >= 1))
        throw Error(Errc::InvalidParameters, "p must be >= 1");
    validate_m(p, m);
    ErasureReport r = base_report(p, m, power);

    const Enumerator e(p, m);
    const bool incremental = options.prune && m <= kIncrementalMaxM;
    const Plan plan = make_plan(e, options, incremental);
    PassSpec spec;
    spec.pass = Pass::Power;
    spec.power = power;
    const std::vector<ChunkResult> res = run_plan(e, plan, plan.schedule, spec, options.workers);

    Neumaier total;
    for (const auto& c : res) {
        total.add(c.sum.value());
        r.subsets_examined += c.examined;
    }
    const double count = plan.partial ? static_cast<double>(r.subsets_examined) : binomial(p.n(), m);
    r.value = std::pow(total.value() / count, 1 / power);
    r.worst_count = 0;
    r.method = incremental ? "incremental" : "enumeration";
    if (plan.partial) {
        r.exact = false;
        throw BudgetExceeded(budget_message(r, options), r);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Encoding and reconstruction

std::vector<double> encode(const AnalysisOperator& v, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != v.k())
        throw Error(Errc::InvalidParameters, "vector length must equal k");
    return v.matrix() * x;
}

std::vector<double> erase(std::span<const double> y, const ErasureSet& s)
{
    std::vector<double> out(y.begin(), y.end());
    for (int i : s.indices()) {
        if (i >= static_cast<int>(out.size()))
            throw Error(Errc::InvalidParameters, "erasure index out of range");
        out[i] = 0;
    }
    return out;
}

Reconstruction reconstruct(const AnalysisOperator& v, const ErasureSet& s, std::span<const double> y_erased)
{
    const int n = v.n();
    const int k = v.k();
    if (static_cast<int>(y_erased.size()) != n)
        throw Error(Errc::InvalidParameters, "coefficient vector length must equal n");
    Reconstruction out;
    if (s.m() > 0) {
        Matrix vs(s.m(), k);
        for (int a = 0; a < s.m(); ++a)
            for (int j = 0; j < k; ++j)
                vs(a, j) = v.matrix()(s.indices()[a], j);
        // V* D V has the same top eigenvalue as the compression V_S V_S*
        Matrix g = vs * vs.transposed();
        for (int a = 0; a < s.m(); ++a)
            for (int b = a + 1; b < s.m(); ++b)
                g(a, b) = g(b, a) = 0.5 * (g(a, b) + g(b, a));
        out.error_norm = top_eigenvalue(SymmetricMatrix(std::move(g)));
    }
    if (out.error_norm >= 1 - 1e-10)
        throw Error(Errc::NotReconstructible, "erasure error operator has norm " + std::to_string(out.error_norm));

    std::vector<int> kept;
    for (int i = 0, a = 0; i < n; ++i) {
        if (a < s.m() && s.indices()[a] == i) {
            ++a;
            continue;
        }
        kept.push_back(i);
    }
    Matrix w(static_cast<int>(kept.size()), k);
    std::vector<double> yk(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
        for (int j = 0; j < k; ++j)
            w(static_cast<int>(a), j) = v.matrix()(kept[a], j);
        yk[a] = y_erased[kept[a]];
    }
    const LeftInverse l = minimal_left_inverse(w);
    out.x = l.inverse * std::span<const double>(yk);
    out.left_inverse_norm = l.norm();
    return out;
}

std::vector<double> approx_reconstruct(const AnalysisOperator& v, std::span<const double> y_erased)
{
    if (static_cast<int>(y_erased.size()) != v.n())
        throw Error(Errc::InvalidParameters, "coefficient vector length must equal n");
    return v.matrix().transposed() * y_erased;
}

// ---------------------------------------------------------------------------

ReversalReport compare_p2_reversal(int n, int k, double p_high, const ErasureOptions& options)
{
    if (k < 1 || n != 2 * k)
        throw Error(Errc::InvalidParameters, "the comparison needs n = 2k with k >= 1");
    SignatureMatrix q;
    if (k == 1)
        q = trivial_signature(2, false);
    else if (is_prime(2 * k - 1) && (2 * k - 1) % 4 == 1)
        q = paley_conference(2 * k - 1);
    else
        throw Error(Errc::Unavailable, "no prime Paley construction of order " + std::to_string(n));

    const GrammianProjection uniform = grammian_from_signature(q);
    const GrammianProjection repetition = grammian(basis_repetition(k));
    ReversalReport r;
    r.n = n;
    r.k = k;
    r.p_high = p_high;
    r.threshold = 2 + std::sqrt(5.0 * k * (n - 1) / (n - k));
    r.uniform_p2 = e_m_p(uniform, 2, 2, options).value;
    r.repetition_p2 = e_m_p(repetition, 2, 2, options).value;
    r.uniform_high = e_m_p(uniform, 2, p_high, options).value;
    r.repetition_high = e_m_p(repetition, 2, p_high, options).value;
    r.uniform_worse_at_p2 = r.uniform_p2 > r.repetition_p2;
    r.reversed_at_high = r.uniform_high < r.repetition_high;
    return r;
}

} // namespace sf
