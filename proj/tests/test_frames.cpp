#include "oracle.hpp"

#include "seidelframes/catalog.hpp"
#include "seidelframes/constructions.hpp"
#include "seidelframes/error.hpp"
#include "seidelframes/frames.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace sf;

namespace {

std::vector<SignatureMatrix> sample_signatures()
{
    std::vector<SignatureMatrix> out{paley_conference(5), paley_conference(13), trivial_signature(5, false),
                                     trivial_signature(6, true),
                                     hadamard_signature(graph_hadamard(16), false),
                                     hadamard_signature(graph_hadamard(16), true)};
    for (const auto& q : table2_matrices())
        out.push_back(q);
    return out;
}

SignedPermutation random_signed_permutation(int n, std::mt19937_64& rng)
{
    SignedPermutation u;
    u.perm.resize(n);
    std::iota(u.perm.begin(), u.perm.end(), 0);
    std::shuffle(u.perm.begin(), u.perm.end(), rng);
    for (int i = 0; i < n; ++i)
        u.signs.push_back(rng() & 1 ? 1 : -1);
    return u;
}

} // namespace

TEST_CASE("c_nk")
{
    CHECK(c_nk(6, 3) == doctest::Approx(1 / std::sqrt(20.0)));
    CHECK(c_nk(36, 15) == doctest::Approx(1.0 / 12));
    CHECK(c_nk(5, 1) == doctest::Approx(0.2));
}

TEST_CASE("signature parameters of known matrices")
{
    const FrameParameters t = signature_parameters(trivial_signature(6, true));
    CHECK(t.k == 5);
    CHECK(t.mu == -4);
    const FrameParameters c = signature_parameters(paley_conference(5));
    CHECK(c.k == 3);
    CHECK(c.mu == 0);
    CHECK(c.rho1 == doctest::Approx(std::sqrt(5.0)));
    const FrameParameters h = signature_parameters(hadamard_signature(graph_hadamard(16), false));
    CHECK(h.n == 16);
    CHECK(h.k == 6);
    CHECK(h.mu == 2);
    for (const auto& q : table2_matrices()) {
        const FrameParameters p = signature_parameters(q);
        CHECK(p.k == 15);
        CHECK(p.mu == 2);
        CHECK(p.rho1 == doctest::Approx(7.0));
        CHECK(p.rho2 == doctest::Approx(-5.0));
    }
}

TEST_CASE("signature_parameters rejects matrices that are not 2-uniform")
{
    // One edge on four vertices: three distinct eigenvalues.
    SignatureMatrix q(4, {0, -1, 1, 1, -1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0});
    CHECK_THROWS_AS(signature_parameters(q), Error);
    CHECK_THROWS_AS(SignatureMatrix(2, {0, 1, -1, 0}), Error);
    CHECK_THROWS_AS(SignatureMatrix(2, {1, 1, 1, 0}), Error);
}

TEST_CASE("Grammian round trip and the eigenvalue oracle")
{
    for (const auto& q : sample_signatures()) {
        const FrameParameters fp = signature_parameters(q);
        const GrammianProjection p = grammian_from_signature(q);
        CHECK(signature_from_grammian(p) == q);
        CHECK(p.k() == fp.k);
        const Eigen::MatrixXd e = oracle::grammian_of_signature(q, fp.k);
        CHECK((oracle::to_eigen(p.matrix().matrix()) - e).cwiseAbs().maxCoeff() < 1e-12);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::to_eigen(Matrix(q.order(), q.order(), [&] {
            std::vector<double> v;
            for (auto x : q.matrix().data())
                v.push_back(double(x));
            return v;
        }())));
        int mult = 0;
        for (int i = 0; i < q.order(); ++i)
            mult += std::abs(es.eigenvalues()(i) - fp.rho1) < 1e-6;
        CHECK(mult == fp.k);
    }
}

TEST_CASE("frames from signatures are Parseval and 2-uniform")
{
    for (const auto& q : sample_signatures()) {
        const FrameParameters fp = signature_parameters(q);
        const AnalysisOperator v = frame_from_signature(q);
        CHECK(v.n() == fp.n);
        CHECK(v.k() == fp.k);
        CHECK(is_parseval(v));
        CHECK(is_uniform(v));
        CHECK(is_two_uniform(v));
        const GrammianProjection p = grammian(v);
        for (int i = 0; i < v.n(); ++i)
            for (int j = 0; j < v.n(); ++j)
                if (i != j)
                    CHECK(std::abs(p(i, j)) == doctest::Approx(fp.c).epsilon(1e-8));
    }
}

TEST_CASE("signed permutations preserve parameters")
{
    std::mt19937_64 rng(3);
    for (const auto& q : sample_signatures()) {
        const FrameParameters a = signature_parameters(q);
        for (int t = 0; t < 5; ++t) {
            const FrameParameters b = signature_parameters(conjugate(q, random_signed_permutation(q.order(), rng)));
            CHECK(a.n == b.n);
            CHECK(a.k == b.k);
            CHECK(a.mu == b.mu);
            CHECK(a.rho1 == b.rho1);
            CHECK(a.rho2 == b.rho2);
        }
    }
}

TEST_CASE("exact identity Q^2 = (n-1)I + mu Q")
{
    for (const auto& q : sample_signatures()) {
        const FrameParameters fp = signature_parameters(q);
        const IntMatrix sq = q.matrix() * q.matrix();
        for (int i = 0; i < q.order(); ++i)
            for (int j = 0; j < q.order(); ++j)
                CHECK(sq(i, j) == (i == j ? fp.n - 1 : fp.mu * q(i, j)));
    }
}

TEST_CASE("3-uniformity")
{
    for (int n = 3; n <= 10; ++n)
        CHECK(is_three_uniform(frame_from_signature(trivial_signature(n, true))));
    CHECK_FALSE(is_three_uniform(frame_from_signature(paley_conference(5))));
    CHECK_FALSE(is_three_uniform(frame_from_signature(hadamard_signature(graph_hadamard(16), false))));
    CHECK_FALSE(is_three_uniform(frame_from_signature(catalog_matrix("table2-1"))));
}

TEST_CASE("orthonormal basis is a degenerate 2-uniform frame")
{
    const AnalysisOperator v(Matrix::identity(3));
    CHECK(is_parseval(v));
    CHECK(is_two_uniform(v));
    CHECK_FALSE(is_two_uniform(basis_repetition(3)));
    CHECK(is_parseval(basis_repetition(3)));
}

TEST_CASE("Paley conference matrices")
{
    for (int p : {5, 13, 17, 29, 37, 41}) {
        const SignatureMatrix c = paley_conference(p);
        const FrameParameters fp = signature_parameters(c);
        CHECK(fp.n == p + 1);
        CHECK(fp.mu == 0);
        CHECK(2 * fp.k == fp.n);
    }
    CHECK_THROWS_AS(paley_conference(7), Error);
    CHECK_THROWS_AS(paley_conference(9), Error);
    CHECK_THROWS_AS(paley_conference(1), Error);
}

TEST_CASE("graph Hadamard matrices")
{
    const IntMatrix h4 = graph_hadamard(4);
    CHECK(h4 == IntMatrix(4, {1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1}));
    const IntMatrix h16 = graph_hadamard(16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            CHECK(h16(i, j) == h4(i / 4, j / 4) * h4(i % 4, j % 4));
    for (int order : {4, 16, 64})
        CHECK(is_graph_hadamard(graph_hadamard(order)));
    CHECK_THROWS_AS(graph_hadamard(8), Error);
    CHECK(signature_parameters(hadamard_signature(h16, true)).k == 10);
    CHECK(signature_parameters(hadamard_signature(graph_hadamard(64), true)).k == 36);
    CHECK(signature_parameters(hadamard_signature(graph_hadamard(64), false)).k == 28);
}

TEST_CASE("recipes build the advertised shapes")
{
    CHECK(build_frame({ConstructionKind::BasisRepetition, 3}).n() == 6);
    CHECK(build_frame({ConstructionKind::TrivialDim1, 4}).k() == 1);
    CHECK(build_frame({ConstructionKind::PaleyConference, 13}).k() == 7);
    CHECK_THROWS_AS(build_signature({ConstructionKind::BasisRepetition, 3}), Error);
    CHECK(to_string(ConstructionKind::PaleyConference) == "paley");
}
