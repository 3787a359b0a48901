#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sf {

/// Dense row-major real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0);
    Matrix(int rows, int cols, std::vector<double> entries);

    static Matrix identity(int order);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<const double> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

/// Largest absolute entrywise difference; matrices must share a shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Real symmetric matrix, stored in full. Symmetry is checked bit-exactly on
/// construction and the value is immutable afterwards.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(Matrix m);
    SymmetricMatrix(int order, std::vector<double> entries);

    int order() const noexcept { return m_.rows(); }
    double operator()(int i, int j) const { return m_(i, j); }
    const Matrix& matrix() const noexcept { return m_; }

    /// Principal submatrix on the given (not necessarily sorted) index list.
    SymmetricMatrix compress(std::span<const int> indices) const;

    /// Block-diagonal composition of two symmetric matrices.
    static SymmetricMatrix direct_sum(const SymmetricMatrix& a, const SymmetricMatrix& b);

private:
    Matrix m_;
};

/// Eigenvalues ascending; eigenvector i is column i of `eigenvectors`.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

EigenDecomposition symm_eig(const SymmetricMatrix& m);

/// Largest eigenvalue. For a positive-semidefinite matrix this is the operator norm.
double top_eigenvalue(const SymmetricMatrix& m);

struct LeftInverse {
    Matrix inverse;   // k x n
    double t_min = 0; // smallest singular value of the input
    double norm() const { return 1.0 / t_min; }
};

/// Minimal-norm left inverse (A^T A)^{-1} A^T of a tall matrix with full column
/// rank, i.e. T^{-1} W^T for the polar decomposition A = W T.
LeftInverse minimal_left_inverse(const Matrix& a);

namespace detail {

/// Cyclic Jacobi on a row-major `order` x `order` buffer. The upper triangle of
/// `a` is destroyed. `values` receives the unsorted eigenvalues; when `vectors`
/// is non-empty it receives the eigenvectors as columns (row-major).
void jacobi(std::span<double> a, int order, std::span<double> values, std::span<double> vectors);

/// Top eigenvalue of the bordered matrix [[A, b], [b^T, corner]] given the full
/// eigendecomposition of A (eigenvalues in any order, eigenvectors as columns of
/// the row-major `vectors`). Solves the secular equation
///     x - corner = sum_i (u_i . b)^2 / (x - lambda_i)
/// on the interval above max(lambda_max(A), corner).
double bordered_top_eigenvalue(std::span<const double> values, std::span<const double> vectors, int order,
                               std::span<const double> border, double corner);

} // namespace detail

} // namespace sf
