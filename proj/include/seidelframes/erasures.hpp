#pragma once

#include "seidelframes/error.hpp"
#include "seidelframes/frames.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sf {

/// Erased coordinates, stored 0-based and strictly ascending.
class ErasureSet {
public:
    ErasureSet() = default;
    /// Throws InvalidParameters unless strictly ascending within [0, n).
    ErasureSet(std::vector<int> indices, int n);

    static ErasureSet from_one_based(std::span<const int> indices, int n);

    int m() const noexcept { return static_cast<int>(indices_.size()); }
    std::span<const int> indices() const noexcept { return indices_; }
    std::vector<int> one_based() const;

    friend bool operator==(const ErasureSet&, const ErasureSet&) = default;
    friend auto operator<=>(const ErasureSet&, const ErasureSet&) = default;

private:
    std::vector<int> indices_;
};

inline constexpr double p_infinity = std::numeric_limits<double>::infinity();

struct ErasureReport {
    int n = 0;
    int k = 0;
    int m = 0;
    double p = p_infinity;
    double value = 0;
    std::vector<ErasureSet> worst_sets; // p = inf only: lexicographically first 16
    std::uint64_t worst_count = 0;      // all maximising sets within 1e-9
    std::uint64_t subsets_examined = 0;
    std::optional<double> bound_basic;  // 2-uniform frames only
    std::optional<double> bound_refined; // 2-uniform frames with m >= 3
    bool saturated_basic = false;
    bool exact = true;
    std::string method; // "enumeration", "incremental", "bipartite-saturation"
};

/// Thrown when the subset budget runs out; carries the partial report.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string message, ErasureReport partial)
        : Error(Errc::BudgetExceeded, std::move(message)), partial_(std::move(partial))
    {
    }
    const ErasureReport& partial() const noexcept { return partial_; }

private:
    ErasureReport partial_;
};

struct ErasureOptions {
    std::uint64_t budget = 100'000'000ULL;
    int workers = 1;
    /// false forces plain enumeration with a full eigensolve per subset.
    bool prune = true;
    /// With prune: answer saturated cases of 2-uniform frames from a complete
    /// bipartite witness instead of enumerating.
    bool saturation_shortcut = true;
};

inline constexpr int worst_set_limit = 16;
inline constexpr double tie_tolerance = 1e-9;

/// Top eigenvalue of the principal submatrix of P on S, i.e. ||V* D V||.
double compression_norm(const GrammianProjection& p, const ErasureSet& s);

ErasureReport e_m_inf(const GrammianProjection& p, int m, const ErasureOptions& options = {});

/// l^p average over all m-subsets; p = p_infinity routes to e_m_inf.
ErasureReport e_m_p(const GrammianProjection& p, int m, double power, const ErasureOptions& options = {});

/// Closed form for e_3^p of a 2-uniform (n,k)-frame from the triple counts.
double e_3_p_closed(int n, int k, double power);

/// k/n + 2c, valid for k < n - 1.
double e_3_inf_two_uniform(int n, int k);

double bound_basic(int n, int k, int m);
double bound_refined(int n, int k, int m);
int bound_max_bipartite_size(int n, int k);
int full_erasure_threshold(int n, int k);

/// (k, c) when P has constant diagonal and constant off-diagonal modulus.
struct TwoUniformShape {
    int k = 0;
    double c = 0;
};
std::optional<TwoUniformShape> two_uniform_shape(const GrammianProjection& p, double tol = 1e-9);

std::vector<double> encode(const AnalysisOperator& v, std::span<const double> x);
std::vector<double> erase(std::span<const double> y, const ErasureSet& s);

struct Reconstruction {
    std::vector<double> x;
    double left_inverse_norm = 1; // 1 / t_min
    double error_norm = 0;        // ||V* D V||
};

/// Exact recovery through the minimal-norm left inverse of the surviving rows.
/// Throws NotReconstructible when ||V* D V|| >= 1 - 1e-10.
Reconstruction reconstruct(const AnalysisOperator& v, const ErasureSet& s, std::span<const double> y_erased);

/// V* y_erased = V* (I - D) V x, the uncorrected estimate.
std::vector<double> approx_reconstruct(const AnalysisOperator& v, std::span<const double> y_erased);

struct ReversalReport {
    int n = 0;
    int k = 0;
    double p_high = 30;
    double threshold = 0;       // 2 + sqrt(5k(n-1)/(n-k))
    double uniform_p2 = 0;      // e_2^2 of the 2-uniform frame
    double repetition_p2 = 0;   // e_2^2 of basis repetition
    double uniform_high = 0;
    double repetition_high = 0;
    bool uniform_worse_at_p2 = false;
    bool reversed_at_high = false;
};

/// Compares e_2^p of a 2-uniform (2k,k) frame (Paley, or the trivial (2,1)
/// frame for k = 1) with basis_repetition(k). Throws Unavailable when no
/// Paley construction exists for this k.
ReversalReport compare_p2_reversal(int n, int k, double p_high = 30, const ErasureOptions& options = {});

double binomial(int n, int m);

} // namespace sf
