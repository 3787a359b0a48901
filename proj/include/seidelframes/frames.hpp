#pragma once

#include "seidelframes/spectra.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sf {

/// Square integer matrix used for the exact identities (signatures, Hadamards).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int order, std::vector<std::int64_t> entries);
    explicit IntMatrix(int order) : IntMatrix(order, std::vector<std::int64_t>(static_cast<std::size_t>(order) * order, 0)) {}

    int order() const noexcept { return order_; }
    std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    std::span<const std::int64_t> data() const noexcept { return data_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int order_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Symmetric matrix with zero diagonal and +-1 off the diagonal.
class SignatureMatrix {
public:
    SignatureMatrix() = default;
    /// Throws InvalidInput unless the entries form a valid signature pattern.
    explicit SignatureMatrix(IntMatrix q);
    SignatureMatrix(int order, std::vector<std::int64_t> entries);

    int order() const noexcept { return q_.order(); }
    int operator()(int i, int j) const { return static_cast<int>(q_(i, j)); }
    const IntMatrix& matrix() const noexcept { return q_; }

    SignatureMatrix negated() const;

    friend bool operator==(const SignatureMatrix&, const SignatureMatrix&) = default;

private:
    IntMatrix q_;
};

/// U = (permutation) * diag(signs); conjugation maps Q to U Q U^T, so entry
/// (i, j) of Q lands at (perm[i], perm[j]) multiplied by signs[i] * signs[j].
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;
};

SignatureMatrix conjugate(const SignatureMatrix& q, const SignedPermutation& u);

class AnalysisOperator {
public:
    AnalysisOperator() = default;
    /// Rows are the adjoints of the frame vectors; requires rows >= cols >= 1.
    explicit AnalysisOperator(Matrix v);

    int n() const noexcept { return v_.rows(); }
    int k() const noexcept { return v_.cols(); }
    const Matrix& matrix() const noexcept { return v_; }
    std::span<const double> vector(int i) const { return v_.row(i); }

private:
    Matrix v_;
};

/// Rank-k orthogonal projection P = V V^T.
class GrammianProjection {
public:
    GrammianProjection() = default;
    /// Checks P^2 = P and an integral trace within 1e-9.
    explicit GrammianProjection(SymmetricMatrix p);

    /// Skips the projection checks; for callers holding a near-projection
    /// (perturbation tests, externally supplied matrices).
    static GrammianProjection unchecked(SymmetricMatrix p, int k);

    int n() const noexcept { return p_.order(); }
    int k() const noexcept { return k_; }
    const SymmetricMatrix& matrix() const noexcept { return p_; }
    double operator()(int i, int j) const { return p_(i, j); }

private:
    SymmetricMatrix p_;
    int k_ = 0;
};

struct FrameParameters {
    int n = 0;
    int k = 0;
    int mu = 0;
    double rho1 = 0;
    double rho2 = 0;
    double c = 0;
};

/// Modulus of the pairwise inner products of a 2-uniform (n,k)-frame.
double c_nk(int n, int k);

GrammianProjection grammian(const AnalysisOperator& v);
SignatureMatrix signature_from_grammian(const GrammianProjection& p);
GrammianProjection grammian_from_signature(const SignatureMatrix& q);

/// Exact check of Q^2 = (n-1)I + mu Q; k from mu and, independently, from the
/// multiplicity of the top eigenvalue. The two must agree.
FrameParameters signature_parameters(const SignatureMatrix& q);

/// Analysis operator whose columns are an orthonormal basis of the range of the
/// Grammian defined by `q`.
AnalysisOperator frame_from_signature(const SignatureMatrix& q);

bool is_parseval(const AnalysisOperator& v);
bool is_uniform(const AnalysisOperator& v);
bool is_two_uniform(const AnalysisOperator& v);
bool is_three_uniform(const AnalysisOperator& v);

} // namespace sf
