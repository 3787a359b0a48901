#include "seidelframes/constructions.hpp"

#include "seidelframes/error.hpp"

#include <cmath>
#include <string>

namespace sf {

std::string_view to_string(ConstructionKind kind) noexcept
{
    switch (kind) {
    case ConstructionKind::TrivialDim1: return "trivial-dim1";
    case ConstructionKind::TrivialCodim1: return "trivial-codim1";
    case ConstructionKind::PaleyConference: return "paley";
    case ConstructionKind::GraphHadamardPlus: return "hadamard-plus";
    case ConstructionKind::GraphHadamardMinus: return "hadamard-minus";
    case ConstructionKind::BasisRepetition: return "basis-repetition";
    }
    return "unknown";
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

SignatureMatrix trivial_signature(int n, bool codim1)
{
    if (n < 2)
        throw Error(Errc::InvalidParameters, "trivial frames need n >= 2");
    const int off = codim1 ? -1 : 1;
    IntMatrix q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q(i, j) = i == j ? 0 : off;
    return SignatureMatrix(std::move(q));
}

SignatureMatrix paley_conference(int p)
{
    if (!is_prime(p) || p % 4 != 1)
        throw Error(Errc::InvalidParameters, "Paley construction needs a prime p = 1 mod 4, got " + std::to_string(p));
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (long long x = 1; x < p; ++x)
        chi[(x * x) % p] = 1;
    const int n = p + 1;
    IntMatrix q(n);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j)
            q(i, j) = chi[((j - i) % p + p) % p];
        q(i, p) = q(p, i) = 1;
    }
    return SignatureMatrix(std::move(q));
}

namespace {

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    const int na = a.order();
    const int nb = b.order();
    IntMatrix c(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    c(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return c;
}

} // namespace

IntMatrix graph_hadamard(int order)
{
    int m = 0;
    long long pw = 1;
    while (pw < order) {
        pw *= 4;
        ++m;
    }
    if (order < 4 || pw != order)
        throw Error(Errc::InvalidParameters, "graph Hadamard order must be 4^m with m >= 1, got " + std::to_string(order));

    const IntMatrix h4(4, {1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1});
    IntMatrix h = h4;
    for (int i = 1; i < m; ++i)
        h = kronecker(h4, h);
    return h;
}

bool is_graph_hadamard(const IntMatrix& h)
{
    const int n = h.order();
    if (n < 1)
        return false;
    for (int i = 0; i < n; ++i) {
        if (h(i, i) != 1)
            return false;
        for (int j = 0; j < n; ++j)
            if ((h(i, j) != 1 && h(i, j) != -1) || h(i, j) != h(j, i))
                return false;
    }
    const IntMatrix sq = h * h;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sq(i, j) != (i == j ? n : 0))
                return false;
    return true;
}

SignatureMatrix hadamard_signature(const IntMatrix& h, bool plus)
{
    if (!is_graph_hadamard(h))
        throw Error(Errc::InvalidInput, "not a graph Hadamard");
    const int n = h.order();
    IntMatrix q(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q(i, j) = i == j ? 0 : (plus ? h(i, j) : -h(i, j));
    return SignatureMatrix(std::move(q));
}

AnalysisOperator basis_repetition(int k)
{
    if (k < 1)
        throw Error(Errc::InvalidParameters, "basis repetition needs k >= 1");
    const double s = 1.0 / std::sqrt(2.0);
    Matrix v(2 * k, k);
    for (int i = 0; i < k; ++i) {
        v(i, i) = s;
        v(k + i, i) = s;
    }
    return AnalysisOperator(std::move(v));
}

SignatureMatrix build_signature(const ConstructionRecipe& recipe)
{
    switch (recipe.kind) {
    case ConstructionKind::TrivialDim1: return trivial_signature(recipe.size, false);
    case ConstructionKind::TrivialCodim1: return trivial_signature(recipe.size, true);
    case ConstructionKind::PaleyConference: return paley_conference(recipe.size);
    case ConstructionKind::GraphHadamardPlus: return hadamard_signature(graph_hadamard(recipe.size), true);
    case ConstructionKind::GraphHadamardMinus: return hadamard_signature(graph_hadamard(recipe.size), false);
    case ConstructionKind::BasisRepetition: break;
    }
    throw Error(Errc::InvalidParameters, "basis repetition frames have no signature matrix");
}

AnalysisOperator build_frame(const ConstructionRecipe& recipe)
{
    if (recipe.kind == ConstructionKind::BasisRepetition)
        return basis_repetition(recipe.size);
    return frame_from_signature(build_signature(recipe));
}

} // namespace sf
