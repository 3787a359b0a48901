#include "seidelframes/spectra.hpp"

#include "seidelframes/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sf {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill)
{
    if (rows < 0 || cols < 0)
        throw Error(Errc::InvalidInput, "negative matrix dimension");
}

Matrix::Matrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows < 0 || cols < 0 || data_.size() != static_cast<std::size_t>(rows) * cols)
        throw Error(Errc::InvalidInput, "entry count does not match matrix shape");
}

Matrix Matrix::identity(int order)
{
    Matrix m(order, order);
    for (int i = 0; i < order; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw Error(Errc::InvalidInput, "matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) += ail * b(l, j);
        }
    return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x)
{
    if (static_cast<std::size_t>(a.cols()) != x.size())
        throw Error(Errc::InvalidInput, "matrix-vector shape mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < a.cols(); ++j)
            s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double max_abs_diff(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::InvalidInput, "shape mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
    return d;
}

SymmetricMatrix::SymmetricMatrix(Matrix m) : m_(std::move(m))
{
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw Error(Errc::InvalidInput, "symmetric matrix must be square of order >= 1");
    for (int i = 0; i < m_.rows(); ++i)
        for (int j = i + 1; j < m_.cols(); ++j)
            if (m_(i, j) != m_(j, i) && !(std::isnan(m_(i, j)) && std::isnan(m_(j, i))))
                throw Error(Errc::InvalidInput,
                            "matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

SymmetricMatrix::SymmetricMatrix(int order, std::vector<double> entries)
    : SymmetricMatrix(Matrix(order, order, std::move(entries)))
{
}

SymmetricMatrix SymmetricMatrix::compress(std::span<const int> indices) const
{
    const int m = static_cast<int>(indices.size());
    Matrix c(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            c(a, b) = m_(indices[a], indices[b]);
    return SymmetricMatrix(std::move(c));
}

SymmetricMatrix SymmetricMatrix::direct_sum(const SymmetricMatrix& a, const SymmetricMatrix& b)
{
    const int na = a.order();
    Matrix c(na + b.order(), na + b.order());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            c(i, j) = a(i, j);
    for (int i = 0; i < b.order(); ++i)
        for (int j = 0; j < b.order(); ++j)
            c(na + i, na + j) = b(i, j);
    return SymmetricMatrix(std::move(c));
}

namespace detail {

namespace {

inline void rotate(std::span<double> a, std::size_t ij, std::size_t kl, double s, double tau)
{
    const double g = a[ij];
    const double h = a[kl];
    a[ij] = g - s * (h + g * tau);
    a[kl] = h + s * (g - h * tau);
}

} // namespace

void jacobi(std::span<double> a, int order, std::span<double> values, std::span<double> vectors)
{
    const std::size_t n = static_cast<std::size_t>(order);
    const bool want_vectors = !vectors.empty();
    if (want_vectors) {
        std::fill(vectors.begin(), vectors.begin() + static_cast<std::ptrdiff_t>(n * n), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            vectors[i * n + i] = 1.0;
    }
    // b accumulates the diagonal at the start of each sweep, z the updates within it.
    double b[512];
    double z[512];
    std::vector<double> heap;
    double* bp = b;
    double* zp = z;
    if (n > 512) {
        heap.assign(2 * n, 0.0);
        bp = heap.data();
        zp = heap.data() + n;
    }
    for (std::size_t i = 0; i < n; ++i) {
        bp[i] = values[i] = a[i * n + i];
        zp[i] = 0.0;
    }

    for (int sweep = 1; sweep <= 64; ++sweep) {
        double sm = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                sm += std::abs(a[p * n + q]);
        if (sm == 0.0)
            return;
        const double tresh = sweep < 4 ? 0.2 * sm / static_cast<double>(n * n) : 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                const double g = 100.0 * std::abs(apq);
                if (sweep > 4 && std::abs(values[p]) + g == std::abs(values[p]) &&
                    std::abs(values[q]) + g == std::abs(values[q])) {
                    a[p * n + q] = 0.0;
                    continue;
                }
                if (std::abs(apq) <= tresh)
                    continue;
                double h = values[q] - values[p];
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0)
                        t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                h = t * apq;
                zp[p] -= h;
                zp[q] += h;
                values[p] -= h;
                values[q] += h;
                a[p * n + q] = 0.0;
                for (std::size_t j = 0; j < p; ++j)
                    rotate(a, j * n + p, j * n + q, s, tau);
                for (std::size_t j = p + 1; j < q; ++j)
                    rotate(a, p * n + j, j * n + q, s, tau);
                for (std::size_t j = q + 1; j < n; ++j)
                    rotate(a, p * n + j, q * n + j, s, tau);
                if (want_vectors)
                    for (std::size_t j = 0; j < n; ++j)
                        rotate(vectors, j * n + p, j * n + q, s, tau);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            bp[i] += zp[i];
            values[i] = bp[i];
            zp[i] = 0.0;
        }
    }
}

double bordered_top_eigenvalue(std::span<const double> values, std::span<const double> vectors, int order,
                               std::span<const double> border, double corner)
{
    constexpr int kMaxOrder = 64;
    double beta2[kMaxOrder];
    std::vector<double> heap;
    double* b2 = beta2;
    if (order > kMaxOrder) {
        heap.resize(order);
        b2 = heap.data();
    }
    const std::size_t n = static_cast<std::size_t>(order);
    double lambda_max = -std::numeric_limits<double>::infinity();
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += vectors[j * n + i] * border[j];
        b2[i] = s * s;
        lambda_max = std::max(lambda_max, values[i]);
        norm2 += border[i] * border[i];
    }
    if (order == 0)
        return corner;
    double lo = std::max(lambda_max, corner);
    if (norm2 == 0.0)
        return lo;
    const double half = 0.5 * (lambda_max - corner);
    double hi = 0.5 * (lambda_max + corner) + std::sqrt(half * half + norm2);
    if (!(hi > lo))
        return lo;

    // g is increasing and concave on (lambda_max, inf); g(hi) >= 0 by construction.
    auto eval = [&](double x, double& deriv) {
        double g = x - corner;
        deriv = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (b2[i] == 0.0)
                continue;
            const double d = x - values[i];
            g -= b2[i] / d;
            deriv += b2[i] / (d * d);
        }
        return g;
    };

    double x = hi;
    for (int it = 0; it < 200; ++it) {
        double deriv;
        const double g = eval(x, deriv);
        if (g == 0.0)
            return x;
        if (g > 0.0)
            hi = x;
        else
            lo = x;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(hi)))
            break;
        double next = x - g / deriv;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (next == x)
            break;
        x = next;
    }
    return hi;
}

} // namespace detail

namespace {

void require_finite(const SymmetricMatrix& m)
{
    for (double v : m.matrix().data())
        if (!std::isfinite(v))
            throw Error(Errc::InvalidInput, "non-finite matrix entry");
}

} // namespace

EigenDecomposition symm_eig(const SymmetricMatrix& m)
{
    require_finite(m);
    const int n = m.order();
    std::vector<double> a(m.matrix().data().begin(), m.matrix().data().end());
    std::vector<double> values(n);
    std::vector<double> vectors(static_cast<std::size_t>(n) * n);
    detail::jacobi(a, n, values, vectors);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return values[x] < values[y]; });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (int c = 0; c < n; ++c) {
        out.eigenvalues[c] = values[order[c]];
        for (int r = 0; r < n; ++r)
            out.eigenvectors(r, c) = vectors[static_cast<std::size_t>(r) * n + order[c]];
    }
    return out;
}

double top_eigenvalue(const SymmetricMatrix& m)
{
    require_finite(m);
    const int n = m.order();
    std::vector<double> a(m.matrix().data().begin(), m.matrix().data().end());
    std::vector<double> values(n);
    detail::jacobi(a, n, values, {});
    return *std::max_element(values.begin(), values.end());
}

LeftInverse minimal_left_inverse(const Matrix& a)
{
    const int k = a.cols();
    if (k < 1 || a.rows() < k)
        throw Error(Errc::NotLeftInvertible, "matrix is not tall");
    const Matrix at = a.transposed();
    const Matrix gram = at * a;
    // symmetrize exactly; the product is symmetric only up to rounding
    Matrix g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g(i, j) = 0.5 * (gram(i, j) + gram(j, i));
    const EigenDecomposition eig = symm_eig(SymmetricMatrix(std::move(g)));
    const double smallest = std::max(eig.eigenvalues.front(), 0.0);
    const double t_min = std::sqrt(smallest);
    if (!(t_min > 1e-10))
        throw Error(Errc::NotLeftInvertible, "smallest singular value below 1e-10");

    // (A^T A)^{-1} = U diag(1/s^2) U^T
    Matrix inv_gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (int l = 0; l < k; ++l)
                s += eig.eigenvectors(i, l) * eig.eigenvectors(j, l) / eig.eigenvalues[l];
            inv_gram(i, j) = s;
        }
    return {inv_gram * at, t_min};
}

} // namespace sf
