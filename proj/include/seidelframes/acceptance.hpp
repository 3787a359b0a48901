#pragma once

#include "seidelframes/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sf {

enum class Scope { Quick, Full };

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s) noexcept;

struct CriterionResult {
    int id = 0;
    std::string title;
    Status status = Status::Fail;
    std::string detail; // deterministic: no timings
    double seconds = 0;
    double limit_seconds = 0; // 0 = no runtime target
};

struct AcceptanceOptions {
    Scope scope = Scope::Full;
    int workers = 1;
    /// Criterion 14 reruns the quick suite; disabled for those inner runs.
    bool include_determinism = true;
};

/// Runs the acceptance criteria in order, reporting each through `on_result`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// Deterministic report (timings live under the top-level "timing" member).
Json acceptance_report(const std::vector<CriterionResult>& results, Scope scope, int workers);

/// Golden e_8 of every printed (36,15) matrix.
inline constexpr double e8_golden = 0.92692546880147253;

} // namespace sf
