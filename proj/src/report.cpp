#include "seidelframes/report.hpp"

#include <cmath>
#include <cstdio>

namespace sf {

namespace {

std::string format_double(double x)
{
    if (std::isnan(x))
        return "\"nan\"";
    if (std::isinf(x))
        return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos)
        s += ".0";
    return s;
}

void write(std::string& out, const Json& j, int indent, int depth)
{
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) * (depth + 1), ' ') : "";
    const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent) * depth, ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{";
        out += nl;
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) {
                out += ",";
                out += nl;
            }
            first = false;
            out += pad;
            out += Json(it.key()).dump();
            out += indent > 0 ? ": " : ":";
            write(out, it.value(), indent, depth + 1);
        }
        out += nl;
        out += close;
        out += "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // arrays of scalars stay on one line
        bool flat = true;
        for (const auto& e : j)
            flat = flat && !e.is_structured();
        out += "[";
        bool first = true;
        for (const auto& e : j) {
            if (!first)
                out += flat ? ", " : ",";
            first = false;
            if (!flat) {
                out += nl;
                out += pad;
            }
            write(out, e, indent, depth + 1);
        }
        if (!flat) {
            out += nl;
            out += close;
        }
        out += "]";
        return;
    }
    case Json::value_t::number_float:
        out += format_double(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace

std::string to_json_text(const Json& j, int indent)
{
    std::string out;
    write(out, j, indent, 0);
    out += "\n";
    return out;
}

Json number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

Json to_json(const FrameParameters& p)
{
    return Json{{"n", p.n}, {"k", p.k}, {"mu", p.mu}, {"rho1", p.rho1}, {"rho2", p.rho2}, {"c", p.c}};
}

Json to_json(const ErasureSet& s)
{
    return Json(s.one_based());
}

Json to_json(const ErasureReport& r)
{
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["m"] = r.m;
    j["p"] = number(r.p);
    j["value"] = r.value;
    j["method"] = r.method;
    j["exact"] = r.exact;
    j["subsets_examined"] = r.subsets_examined;
    if (std::isinf(r.p)) {
        j["worst_count"] = r.worst_count;
        Json sets = Json::array();
        for (const auto& s : r.worst_sets)
            sets.push_back(to_json(s));
        j["worst_sets"] = sets;
    }
    j["bound_basic"] = r.bound_basic ? Json(*r.bound_basic) : Json(nullptr);
    j["bound_refined"] = r.bound_refined ? Json(*r.bound_refined) : Json(nullptr);
    j["saturated_basic"] = r.saturated_basic;
    return j;
}

Json to_json(const BipartiteSearchResult& r)
{
    std::vector<int> witness(r.witness);
    for (int& v : witness)
        ++v;
    return Json{{"max_size", r.max_size},
                {"witness", witness},
                {"exhausted_to", r.exhausted_to},
                {"complete", r.complete},
                {"nodes", r.nodes}};
}

Json to_json(const SrgReduction& r)
{
    return Json{{"vertices", r.vertices}, {"valency", r.valency}, {"p", r.p}, {"q", r.q}, {"c", r.c}};
}

Json to_json(const ReversalReport& r)
{
    return Json{{"n", r.n},
                {"k", r.k},
                {"p_high", r.p_high},
                {"threshold", r.threshold},
                {"uniform_p2", r.uniform_p2},
                {"repetition_p2", r.repetition_p2},
                {"uniform_high", r.uniform_high},
                {"repetition_high", r.repetition_high},
                {"uniform_worse_at_p2", r.uniform_worse_at_p2},
                {"reversed_at_high", r.reversed_at_high}};
}

Json without_timing(const Json& j)
{
    Json copy = j;
    if (copy.is_object())
        copy.erase("timing");
    return copy;
}

} // namespace sf
