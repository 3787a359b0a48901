#include "cli.hpp"

#include "seidelframes/acceptance.hpp"
#include "seidelframes/catalog.hpp"
#include "seidelframes/constructions.hpp"
#include "seidelframes/erasures.hpp"
#include "seidelframes/report.hpp"
#include "seidelframes/seidel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace sf::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Input {
    std::string path;
    std::string bytes;
    SignatureMatrix q;
};

Input load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(Errc::InvalidInput, 0, 0, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    Input input{path, ss.str(), {}};
    input.q = parse_signature_text(input.bytes);
    return input;
}

Json input_json(const Input& in)
{
    return Json{{"path", in.path}, {"sha256", sha256_hex(in.bytes)}, {"n", in.q.order()}};
}

void finish(Json& report, Clock::time_point t0, int workers, std::ostream& out)
{
    report["timing"] = Json{{"seconds", std::chrono::duration<double>(Clock::now() - t0).count()}, {"workers", workers}};
    out << to_json_text(report);
}

double parse_power(const std::string& text)
{
    if (text == "inf" || text == "infinity")
        return p_infinity;
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(v >= 1))
        throw Error(Errc::InvalidParameters, "--lp must be a number >= 1 or \"inf\", got \"" + text + "\"");
    return v;
}

ConstructionKind parse_kind(const std::string& kind)
{
    for (ConstructionKind k : {ConstructionKind::TrivialDim1, ConstructionKind::TrivialCodim1,
                               ConstructionKind::PaleyConference, ConstructionKind::GraphHadamardPlus,
                               ConstructionKind::GraphHadamardMinus, ConstructionKind::BasisRepetition})
        if (to_string(k) == kind)
            return k;
    throw Error(Errc::InvalidParameters, "unknown construction kind \"" + kind + "\"");
}

Json analyze(const Input& in)
{
    Json r;
    r["command"] = "analyze";
    r["input"] = input_json(in);
    const SeidelGraph g = graph_from_signature(in.q);
    std::optional<FrameParameters> params;
    try {
        params = signature_parameters(in.q);
        r["parameters"] = to_json(*params);
    } catch (const Error& e) {
        r["parameters"] = nullptr;
        r["parameters_error"] = e.what();
    }
    Json res;
    const auto alpha = regular_two_graph_alpha(g);
    res["regular_two_graph_alpha"] = alpha ? Json(*alpha) : Json(nullptr);
    if (alpha && params)
        res["alpha_relation_holds"] = -2 * *alpha == 2 + params->mu - params->n;
    try {
        res["srg_reduction"] = to_json(srg_reduction(g, 0));
    } catch (const Error& e) {
        res["srg_reduction"] = nullptr;
        res["srg_reduction_error"] = e.what();
    }
    const TripleCounts t = count_e3_o3(g);
    res["e3_brute"] = t.e3;
    res["o3_brute"] = t.o3;
    if (params && params->k < params->n) {
        try {
            res["e3_formula"] = count_e3_formula(params->n, params->k);
        } catch (const Error& e) {
            res["e3_formula"] = nullptr;
        }
        res["bound_max_bipartite_size"] = bound_max_bipartite_size(params->n, params->k);
        res["full_erasure_threshold"] = full_erasure_threshold(params->n, params->k);
    }
    if (g.n() <= 40)
        res["switching_certificate_sha256"] = sha256_hex(switching_certificate(g));
    r["results"] = res;
    return r;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-uniform frames, Seidel graphs and erasure errors"};
    app.require_subcommand(1);

    std::string kind, out_path, sig_path, lp = "inf", scope = "quick";
    int p = 0, order = 0, m = 1, cap = 0, workers = 1, erasures = 1;
    std::uint64_t budget = 100'000'000ULL, seed = 0;
    bool no_prune = false;

    auto* construct = app.add_subcommand("construct", "write a signature matrix (.sig)");
    construct->add_option("--kind", kind, "trivial-dim1 | trivial-codim1 | paley | hadamard-plus | hadamard-minus")->required();
    construct->add_option("--p", p, "prime p = 1 mod 4 (paley)");
    construct->add_option("--order", order, "order: 4^m (hadamard) or n (trivial)");
    construct->add_option("--out", out_path, "output path (default: stdout)");

    auto* analyze_cmd = app.add_subcommand("analyze", "parameters, two-graph and counting report");
    analyze_cmd->add_option("sig", sig_path, "signature file")->required();

    auto* erasures_cmd = app.add_subcommand("erasures", "erasure error e_m^p");
    erasures_cmd->add_option("sig", sig_path, "signature file")->required();
    erasures_cmd->add_option("--m", m, "number of erasures")->required();
    erasures_cmd->add_option("--lp", lp, "p >= 1 or inf");
    erasures_cmd->add_option("--budget", budget, "maximum number of subsets");
    erasures_cmd->add_option("--workers", workers, "worker threads");
    erasures_cmd->add_flag("--no-prune", no_prune, "plain enumeration with a full eigensolve per subset");

    auto* bipartite_cmd = app.add_subcommand("bipartite", "largest induced complete bipartite subgraph");
    bipartite_cmd->add_option("sig", sig_path, "signature file")->required();
    bipartite_cmd->add_option("--cap", cap, "largest size to search (default n)");
    bipartite_cmd->add_option("--budget", budget, "search node budget");

    auto* demo = app.add_subcommand("reconstruct-demo", "encode, erase and reconstruct a random vector");
    demo->add_option("sig", sig_path, "signature file")->required();
    demo->add_option("--erasures", erasures, "number of erased coefficients");
    demo->add_option("--seed", seed, "64-bit seed");

    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--scope", scope, "quick | full");
    verify->add_option("--workers", workers, "worker threads");

    auto* catalog_cmd = app.add_subcommand("catalog", "list known frames; export the embedded matrices");
    catalog_cmd->add_option("--out", out_path, "directory for the table2-*.sig files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : InvalidParameters;
    }

    const auto t0 = Clock::now();
    try {
        if (*construct) {
            const ConstructionKind k = parse_kind(kind);
            int size = 0;
            if (k == ConstructionKind::PaleyConference)
                size = p;
            else
                size = order;
            const SignatureMatrix q = build_signature({k, size});
            const std::string text = emit_signature_text(q);
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f)
                    throw Error(Errc::InvalidParameters, "cannot write " + out_path);
                f << text;
                Json r{{"command", "construct"},
                       {"kind", kind},
                       {"size", size},
                       {"out", out_path},
                       {"sha256", sha256_hex(text)},
                       {"parameters", to_json(signature_parameters(q))}};
                finish(r, t0, 1, out);
            }
            return Ok;
        }
        if (*analyze_cmd) {
            Json r = analyze(load(sig_path));
            finish(r, t0, 1, out);
            return Ok;
        }
        if (*erasures_cmd) {
            const Input in = load(sig_path);
            const double power = parse_power(lp);
            if (workers < 1)
                throw Error(Errc::InvalidParameters, "--workers must be >= 1");
            const GrammianProjection proj = grammian_from_signature(in.q);
            ErasureOptions opt;
            opt.budget = budget;
            opt.workers = workers;
            opt.prune = !no_prune;
            Json r;
            r["command"] = "erasures";
            r["arguments"] = Json{{"m", m}, {"lp", number(power)}, {"budget", budget}, {"no_prune", no_prune}};
            r["input"] = input_json(in);
            r["parameters"] = to_json(signature_parameters(in.q));
            try {
                r["results"] = to_json(e_m_p(proj, m, power, opt));
                if (m == 3 && !std::isinf(power) && proj.k() < proj.n())
                    r["results"]["e3_closed"] = e_3_p_closed(proj.n(), proj.k(), power);
            } catch (const sf::BudgetExceeded& e) {
                r["results"] = to_json(e.partial());
                r["error"] = e.what();
                finish(r, t0, workers, out);
                err << e.what() << "\n";
                return BudgetExceeded;
            }
            finish(r, t0, workers, out);
            return Ok;
        }
        if (*bipartite_cmd) {
            const Input in = load(sig_path);
            const int c = cap > 0 ? cap : in.q.order();
            const BipartiteSearchResult res = max_complete_bipartite(graph_from_signature(in.q), c, budget);
            Json r;
            r["command"] = "bipartite";
            r["arguments"] = Json{{"cap", c}, {"budget", budget}};
            r["input"] = input_json(in);
            r["results"] = to_json(res);
            try {
                const FrameParameters fp = signature_parameters(in.q);
                if (fp.k < fp.n)
                    r["results"]["bound_max_bipartite_size"] = bound_max_bipartite_size(fp.n, fp.k);
            } catch (const Error&) {
            }
            finish(r, t0, 1, out);
            return res.complete ? Ok : BudgetExceeded;
        }
        if (*demo) {
            const Input in = load(sig_path);
            const AnalysisOperator v = frame_from_signature(in.q);
            if (erasures < 0 || erasures > v.n())
                throw Error(Errc::InvalidParameters, "--erasures must lie in [0, n]");
            std::mt19937_64 rng(seed);
            std::normal_distribution<double> gauss(0.0, 1.0);
            std::vector<double> x(v.k());
            for (double& xi : x)
                xi = gauss(rng);
            std::vector<int> idx(v.n());
            std::iota(idx.begin(), idx.end(), 0);
            for (int i = 0; i < erasures; ++i)
                std::swap(idx[i], idx[i + static_cast<int>(rng() % static_cast<std::uint64_t>(v.n() - i))]);
            std::vector<int> chosen(idx.begin(), idx.begin() + erasures);
            std::sort(chosen.begin(), chosen.end());
            const ErasureSet s(chosen, v.n());
            const auto y = erase(encode(v, x), s);
            const Reconstruction rec = reconstruct(v, s, y);
            const auto approx = approx_reconstruct(v, y);
            double norm = 0, res = 0, res_approx = 0;
            for (int i = 0; i < v.k(); ++i) {
                norm += x[i] * x[i];
                res += (rec.x[i] - x[i]) * (rec.x[i] - x[i]);
                res_approx += (approx[i] - x[i]) * (approx[i] - x[i]);
            }
            Json r;
            r["command"] = "reconstruct-demo";
            r["arguments"] = Json{{"erasures", erasures}, {"seed", seed}};
            r["input"] = input_json(in);
            r["results"] = Json{{"erased", s.one_based()},
                                {"error_norm", rec.error_norm},
                                {"left_inverse_norm", rec.left_inverse_norm},
                                {"left_inverse_bound", 1 / std::sqrt(1 - rec.error_norm)},
                                {"relative_residual", std::sqrt(res / norm)},
                                {"approx_relative_residual", std::sqrt(res_approx / norm)}};
            finish(r, t0, 1, out);
            return Ok;
        }
        if (*verify) {
            if (scope != "quick" && scope != "full")
                throw Error(Errc::InvalidParameters, "--scope must be quick or full");
            if (workers < 1)
                throw Error(Errc::InvalidParameters, "--workers must be >= 1");
            AcceptanceOptions opt;
            opt.scope = scope == "quick" ? Scope::Quick : Scope::Full;
            opt.workers = workers;
            const auto results = run_acceptance(opt, [&](const CriterionResult& c) {
                err << "[" << to_string(c.status) << "] " << c.id << ". " << c.title << "\n";
            });
            Json r = acceptance_report(results, opt.scope, workers);
            out << to_json_text(r);
            return r["all_passed"].get<bool>() ? Ok : 1;
        }
        if (*catalog_cmd) {
            Json r;
            r["command"] = "catalog";
            Json list = Json::array();
            for (const auto& rec : known_frames()) {
                Json e{{"n", rec.n},
                       {"k", rec.k},
                       {"classes", rec.classes.label()},
                       {"type", std::string(type_tag(rec.family))},
                       {"constructible", rec.constructible}};
                if (rec.recipe)
                    e["construction"] = std::string(to_string(rec.recipe->kind)) + " " + std::to_string(rec.recipe->size);
                if (!rec.catalog_ids.empty())
                    e["catalog_ids"] = rec.catalog_ids;
                if (!rec.note.empty())
                    e["note"] = rec.note;
                list.push_back(e);
            }
            r["known_frames"] = list;
            Json assets = Json::array();
            const auto& texts = table2_texts();
            for (std::size_t i = 0; i < texts.size(); ++i) {
                const std::string name = "table2-" + std::to_string(i + 1) + ".sig";
                assets.push_back(Json{{"name", name}, {"sha256", sha256_hex(texts[i])}});
                if (!out_path.empty()) {
                    std::filesystem::create_directories(out_path);
                    std::ofstream f(std::filesystem::path(out_path) / name, std::ios::binary);
                    if (!f)
                        throw Error(Errc::InvalidParameters, "cannot write into " + out_path);
                    f << texts[i];
                }
            }
            r["table2"] = assets;
            finish(r, t0, 1, out);
            return Ok;
        }
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.row() > 0)
            err << " at row " << e.row() << (e.col() > 0 ? ", column " + std::to_string(e.col()) : "");
        err << ": " << e.what() << "\n";
        return ParseFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::BudgetExceeded ? BudgetExceeded : InvalidParameters;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return InvalidParameters;
    }
    return InvalidParameters;
}

} // namespace sf::cli
