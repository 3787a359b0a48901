#include "seidelframes/frames.hpp"

#include "seidelframes/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sf {

namespace {

constexpr double kProjectionTol = 1e-9;
constexpr double kPredicateTol = 1e-8;

std::string pos(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

IntMatrix::IntMatrix(int order, std::vector<std::int64_t> entries) : order_(order), data_(std::move(entries))
{
    if (order < 0 || data_.size() != static_cast<std::size_t>(order) * order)
        throw Error(Errc::InvalidInput, "entry count does not match matrix order");
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.order() != b.order())
        throw Error(Errc::InvalidInput, "order mismatch");
    const int n = a.order();
    IntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            const std::int64_t ail = a(i, l);
            if (ail == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c(i, j) += ail * b(l, j);
        }
    return c;
}

SignatureMatrix::SignatureMatrix(IntMatrix q) : q_(std::move(q))
{
    const int n = q_.order();
    if (n < 1)
        throw Error(Errc::InvalidInput, "signature matrix must have order >= 1");
    for (int i = 0; i < n; ++i) {
        if (q_(i, i) != 0)
            throw Error(Errc::InvalidInput, "non-zero diagonal at " + std::to_string(i));
        for (int j = i + 1; j < n; ++j) {
            if (q_(i, j) != 1 && q_(i, j) != -1)
                throw Error(Errc::InvalidInput, "off-diagonal entry not +-1 at " + pos(i, j));
            if (q_(i, j) != q_(j, i))
                throw Error(Errc::InvalidInput, "not symmetric at " + pos(i, j));
        }
    }
}

SignatureMatrix::SignatureMatrix(int order, std::vector<std::int64_t> entries)
    : SignatureMatrix(IntMatrix(order, std::move(entries)))
{
}

SignatureMatrix SignatureMatrix::negated() const
{
    IntMatrix m(order());
    for (int i = 0; i < order(); ++i)
        for (int j = 0; j < order(); ++j)
            m(i, j) = -q_(i, j);
    return SignatureMatrix(std::move(m));
}

SignatureMatrix conjugate(const SignatureMatrix& q, const SignedPermutation& u)
{
    const int n = q.order();
    if (static_cast<int>(u.perm.size()) != n || static_cast<int>(u.signs.size()) != n)
        throw Error(Errc::InvalidInput, "signed permutation has the wrong size");
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (u.perm[i] < 0 || u.perm[i] >= n || seen[u.perm[i]] || (u.signs[i] != 1 && u.signs[i] != -1))
            throw Error(Errc::InvalidInput, "not a signed permutation");
        seen[u.perm[i]] = 1;
    }
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(u.perm[i], u.perm[j]) = u.signs[i] * u.signs[j] * q(i, j);
    return SignatureMatrix(std::move(m));
}

AnalysisOperator::AnalysisOperator(Matrix v) : v_(std::move(v))
{
    if (v_.cols() < 1 || v_.rows() < v_.cols())
        throw Error(Errc::InvalidParameters, "analysis operator needs n >= k >= 1");
}

GrammianProjection::GrammianProjection(SymmetricMatrix p) : p_(std::move(p))
{
    const int n = p_.order();
    double trace = 0.0;
    for (int i = 0; i < n; ++i)
        trace += p_(i, i);
    const double k = std::round(trace);
    if (std::abs(trace - k) > kProjectionTol || k < 0)
        throw Error(Errc::InvalidInput, "trace of a projection must be an integer");
    const Matrix sq = p_.matrix() * p_.matrix();
    if (max_abs_diff(sq, p_.matrix()) > kProjectionTol)
        throw Error(Errc::InvalidInput, "matrix is not idempotent");
    k_ = static_cast<int>(k);
}

GrammianProjection GrammianProjection::unchecked(SymmetricMatrix p, int k)
{
    GrammianProjection g;
    g.p_ = std::move(p);
    g.k_ = k;
    return g;
}

double c_nk(int n, int k)
{
    if (k < 1 || k >= n)
        throw Error(Errc::InvalidParameters, "c_nk requires 1 <= k < n");
    const double nn = n;
    const double kk = k;
    return std::sqrt(kk * (nn - kk) / (nn * nn * (nn - 1.0)));
}

GrammianProjection grammian(const AnalysisOperator& v)
{
    if (!is_parseval(v))
        throw Error(Errc::NotParseval, "V^T V differs from the identity");
    const Matrix& m = v.matrix();
    const int n = v.n();
    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int l = 0; l < v.k(); ++l)
                s += m(i, l) * m(j, l);
            p(i, j) = p(j, i) = s;
        }
    return GrammianProjection(SymmetricMatrix(std::move(p)));
}

SignatureMatrix signature_from_grammian(const GrammianProjection& p)
{
    const int n = p.n();
    const int k = p.k();
    if (k < 1 || k >= n)
        throw Error(Errc::NotTwoUniform, "rank must satisfy 1 <= k < n");
    const double a = static_cast<double>(k) / n;
    for (int i = 0; i < n; ++i)
        if (std::abs(p(i, i) - a) > kPredicateTol)
            throw Error(Errc::NotUniform, "diagonal entry " + std::to_string(i) + " differs from k/n");
    const double c = c_nk(n, k);
    IntMatrix q(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double pij = p(i, j);
            if (std::abs(std::abs(pij) - c) > kPredicateTol)
                throw Error(Errc::NotTwoUniform, "off-diagonal magnitude differs from c at " + pos(i, j));
            q(i, j) = q(j, i) = pij > 0 ? 1 : -1;
        }
    return SignatureMatrix(std::move(q));
}

FrameParameters signature_parameters(const SignatureMatrix& q)
{
    const int n = q.order();
    if (n < 2)
        throw Error(Errc::InvalidParameters, "signature matrix needs order >= 2");
    const IntMatrix sq = q.matrix() * q.matrix();
    const std::int64_t mu = sq(0, 1) * q(0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::int64_t expect = i == j ? n - 1 : mu * q(i, j);
            if (sq(i, j) != expect)
                throw Error(Errc::NotTwoUniformSignature,
                            "Q^2 - (n-1)I is not a multiple of Q at " + pos(i, j));
        }

    FrameParameters fp;
    fp.n = n;
    fp.mu = static_cast<int>(mu);
    const double disc = std::sqrt(static_cast<double>(mu * mu + 4 * (n - 1)));
    fp.rho1 = 0.5 * (static_cast<double>(mu) + disc);
    fp.rho2 = 0.5 * (static_cast<double>(mu) - disc);
    const double k_formula = n / 2.0 - (static_cast<double>(mu) * n / 2.0) / disc;
    const double k_round = std::round(k_formula);
    if (std::abs(k_formula - k_round) > 1e-9)
        throw Error(Errc::InconsistentParameters, "k = " + std::to_string(k_formula) + " is not an integer");
    fp.k = static_cast<int>(k_round);

    // independent route: multiplicity of the top eigenvalue
    Matrix qd(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            qd(i, j) = static_cast<double>(q(i, j));
    const EigenDecomposition eig = symm_eig(SymmetricMatrix(std::move(qd)));
    int mult = 0;
    for (double lam : eig.eigenvalues) {
        const bool near1 = std::abs(lam - fp.rho1) <= 1e-6;
        const bool near2 = std::abs(lam - fp.rho2) <= 1e-6;
        if (!near1 && !near2)
            throw Error(Errc::InconsistentParameters, "eigenvalue " + std::to_string(lam) + " is neither rho1 nor rho2");
        mult += near1 ? 1 : 0;
    }
    if (mult != fp.k)
        throw Error(Errc::InconsistentParameters,
                    "mult(rho1) = " + std::to_string(mult) + " but the mu formula gives k = " + std::to_string(fp.k));
    if (fp.k < 1 || fp.k >= n)
        throw Error(Errc::InconsistentParameters, "k outside [1, n-1]");
    fp.c = c_nk(n, fp.k);
    return fp;
}

GrammianProjection grammian_from_signature(const SignatureMatrix& q)
{
    FrameParameters fp;
    try {
        fp = signature_parameters(q);
    } catch (const Error& e) {
        if (e.code() == Errc::NotTwoUniformSignature || e.code() == Errc::InconsistentParameters ||
            e.code() == Errc::InvalidParameters)
            throw Error(Errc::NotASignature, e.what());
        throw;
    }
    const int n = fp.n;
    const double a = static_cast<double>(fp.k) / n;
    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(i, j) = i == j ? a : fp.c * q(i, j);
    try {
        return GrammianProjection(SymmetricMatrix(std::move(p)));
    } catch (const Error& e) {
        throw Error(Errc::NotASignature, e.what());
    }
}

AnalysisOperator frame_from_signature(const SignatureMatrix& q)
{
    const GrammianProjection p = grammian_from_signature(q);
    const EigenDecomposition eig = symm_eig(p.matrix());
    const int n = p.n();
    const int k = p.k();
    // eigenvalue 1 occupies the top k slots of the ascending list
    Matrix v(n, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r)
            v(r, c) = eig.eigenvectors(r, n - k + c);
    AnalysisOperator out(std::move(v));
    if (!is_parseval(out))
        throw Error(Errc::NotParseval, "factored frame failed the Parseval check");
    return out;
}

bool is_parseval(const AnalysisOperator& v)
{
    const Matrix& m = v.matrix();
    for (int a = 0; a < v.k(); ++a)
        for (int b = a; b < v.k(); ++b) {
            double s = 0.0;
            for (int i = 0; i < v.n(); ++i)
                s += m(i, a) * m(i, b);
            if (std::abs(s - (a == b ? 1.0 : 0.0)) > kPredicateTol)
                return false;
        }
    return true;
}

namespace {

double dot(std::span<const double> x, std::span<const double> y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * y[i];
    return s;
}

} // namespace

bool is_uniform(const AnalysisOperator& v)
{
    if (!is_parseval(v))
        return false;
    const double a = static_cast<double>(v.k()) / v.n();
    for (int i = 0; i < v.n(); ++i)
        if (std::abs(dot(v.vector(i), v.vector(i)) - a) > kPredicateTol)
            return false;
    return true;
}

bool is_two_uniform(const AnalysisOperator& v)
{
    if (!is_uniform(v))
        return false;
    if (v.n() == v.k())
        return true;
    const double c = c_nk(v.n(), v.k());
    for (int i = 0; i < v.n(); ++i)
        for (int j = i + 1; j < v.n(); ++j)
            if (std::abs(std::abs(dot(v.vector(i), v.vector(j))) - c) > kPredicateTol)
                return false;
    return true;
}

bool is_three_uniform(const AnalysisOperator& v)
{
    if (!is_two_uniform(v))
        return false;
    const int n = v.n();
    if (n < 3)
        return true;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int idx[3] = {a, b, c};
                Matrix s(3, 3);
                for (int x = 0; x < 3; ++x)
                    for (int y = 0; y < 3; ++y)
                        s(x, y) = dot(v.vector(idx[x]), v.vector(idx[y]));
                for (int x = 0; x < 3; ++x)
                    for (int y = x + 1; y < 3; ++y)
                        s(y, x) = s(x, y);
                const double t = top_eigenvalue(SymmetricMatrix(std::move(s)));
                lo = std::min(lo, t);
                hi = std::max(hi, t);
                if (hi - lo > kPredicateTol)
                    return false;
            }
    return true;
}

} // namespace sf
