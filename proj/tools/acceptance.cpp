#include "seidelframes/acceptance.hpp"
#include "seidelframes/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::string scope = "full", report_path;
    int workers = 1;
    app.add_option("--scope", scope, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--report", report_path, "write the JSON report here");
    CLI11_PARSE(app, argc, argv);

    sf::AcceptanceOptions options;
    options.scope = scope == "quick" ? sf::Scope::Quick : sf::Scope::Full;
    options.workers = workers;
    const auto results = sf::run_acceptance(options, [](const sf::CriterionResult& r) {
        std::printf("%s %2d  %-44s %8.2fs  %s\n", std::string(sf::to_string(r.status)).c_str(), r.id, r.title.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    const sf::Json report = sf::acceptance_report(results, options.scope, workers);
    if (!report_path.empty())
        std::ofstream(report_path) << sf::to_json_text(report);
    int failed = 0;
    for (const auto& r : results)
        failed += r.status == sf::Status::Fail;
    std::printf("%d of %zu criteria failed\n", failed, results.size());
    return failed == 0 ? 0 : 1;
}
