#include "oracle.hpp"

#include "seidelframes/error.hpp"
#include "seidelframes/spectra.hpp"

#include <doctest.h>

#include <random>

using namespace sf;

namespace {

SymmetricMatrix random_symmetric(int n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m(i, j) = m(j, i) = u(rng);
    return SymmetricMatrix(m);
}

Matrix random_matrix(int rows, int cols, std::mt19937_64& rng)
{
    std::normal_distribution<double> g;
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = g(rng);
    return m;
}

} // namespace

TEST_CASE("symm_eig matches the Eigen oracle and reconstructs the input")
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 40; ++n) {
        const SymmetricMatrix m = random_symmetric(n, rng);
        const EigenDecomposition d = symm_eig(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::to_eigen(m.matrix()));
        REQUIRE(d.eigenvalues.size() == static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            CHECK(d.eigenvalues[i] == doctest::Approx(es.eigenvalues()(i)).epsilon(1e-10));
            if (i > 0)
                CHECK(d.eigenvalues[i - 1] <= d.eigenvalues[i]);
        }
        double err = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0;
                for (int l = 0; l < n; ++l)
                    s += d.eigenvectors(i, l) * d.eigenvalues[l] * d.eigenvectors(j, l);
                err = std::max(err, std::abs(s - m(i, j)));
            }
        CHECK(err < 1e-10 * n);
        CHECK(top_eigenvalue(m) == doctest::Approx(es.eigenvalues().maxCoeff()).epsilon(1e-10));
    }
}

TEST_CASE("symm_eig is bitwise deterministic")
{
    std::mt19937_64 rng(5);
    const SymmetricMatrix m = random_symmetric(25, rng);
    const EigenDecomposition a = symm_eig(m), b = symm_eig(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("symmetric matrices reject asymmetric input")
{
    Matrix m(2, 2);
    m(0, 1) = 1;
    CHECK_THROWS_AS(SymmetricMatrix{m}, Error);
}

TEST_CASE("top eigenvalue of a direct sum is the larger top eigenvalue")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const SymmetricMatrix a = random_symmetric(1 + trial % 7, rng);
        const SymmetricMatrix b = random_symmetric(1 + trial % 5, rng);
        const double t = top_eigenvalue(SymmetricMatrix::direct_sum(a, b));
        CHECK(t == doctest::Approx(std::max(top_eigenvalue(a), top_eigenvalue(b))).epsilon(1e-12));
    }
}

TEST_CASE("bordered secular solve agrees with a full eigensolve")
{
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 12; ++n) {
        const SymmetricMatrix full = random_symmetric(n + 1, rng);
        std::vector<int> head(n);
        for (int i = 0; i < n; ++i)
            head[i] = i;
        const EigenDecomposition d = symm_eig(full.compress(head));
        std::vector<double> border(n);
        for (int i = 0; i < n; ++i)
            border[i] = full(i, n);
        const double t = detail::bordered_top_eigenvalue(d.eigenvalues, d.eigenvectors.data(), n, border, full(n, n));
        CHECK(t == doctest::Approx(oracle::top_eig(oracle::to_eigen(full.matrix()))).epsilon(1e-11));
    }
}

TEST_CASE("minimal left inverse: trivial cases")
{
    SUBCASE("isometry")
    {
        Matrix a(3, 2);
        a(0, 0) = 1;
        a(1, 1) = 1;
        const LeftInverse l = minimal_left_inverse(a);
        CHECK(l.t_min == doctest::Approx(1.0));
        CHECK(max_abs_diff(l.inverse, a.transposed()) < 1e-12);
    }
    SUBCASE("column (1,1)")
    {
        Matrix a(2, 1, std::vector<double>{1, 1});
        const LeftInverse l = minimal_left_inverse(a);
        CHECK(l.t_min == doctest::Approx(std::sqrt(2.0)));
        CHECK(l.inverse(0, 0) == doctest::Approx(0.5));
        CHECK(l.inverse(0, 1) == doctest::Approx(0.5));
    }
    SUBCASE("rank deficient")
    {
        Matrix a(3, 2, std::vector<double>{1, 2, 2, 4, 3, 6});
        CHECK_THROWS_AS(minimal_left_inverse(a), Error);
    }
}

TEST_CASE("minimal left inverse matches the pseudo-inverse oracle")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 1 + trial % 6, n = k + trial % 5;
        const Matrix a = random_matrix(n, k, rng);
        const LeftInverse l = minimal_left_inverse(a);
        const Eigen::MatrixXd e = oracle::to_eigen(a);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double smin = svd.singularValues().minCoeff();
        CHECK(l.t_min == doctest::Approx(smin).epsilon(1e-9));
        CHECK(l.norm() == doctest::Approx(1 / smin).epsilon(1e-9));
        const Eigen::MatrixXd pinv = svd.matrixV() * svd.singularValues().cwiseInverse().asDiagonal() * svd.matrixU().transpose();
        CHECK((oracle::to_eigen(l.inverse) - pinv).cwiseAbs().maxCoeff() < 1e-8);
        const Matrix li = l.inverse * a;
        CHECK(max_abs_diff(li, Matrix::identity(k)) < 1e-8);
    }
}
