// charvar command line front end.  Talks to the library exclusively through
// the public C API in charvar.h; everything it prints is either the JSON
// produced by the library or thin JSON/CSV assembled around it.
//
// Exit codes: 0 all requested checks passed, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "charvar.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
    void operator()(char* s) const { cv_string_free(s); }
};
using CvString = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
    void operator()(cv_poly* p) const { cv_poly_free(p); }
};
using CvPoly = std::unique_ptr<cv_poly, PolyDeleter>;

// Statuses caused by bad input map to exit 2; disagreement detected during a
// computation maps to exit 1; everything else is an internal error.
int exit_code_for(cv_status status) {
    switch (status) {
    case CV_OK:
        return kExitOk;
    case CV_ERROR_ROUTE_DISAGREEMENT:
        return kExitVerifyFailed;
    default:
        return kExitUsage;
    }
}

int fail(cv_status status) {
    std::cerr << "error (" << cv_status_name(status) << "): " << cv_last_error_message()
              << "\n";
    return exit_code_for(status);
}

json poly_json(const cv_poly* poly) {
    char* raw = nullptr;
    if (cv_poly_to_json(poly, &raw) != CV_OK)
        return nullptr;
    CvString guard(raw);
    return json::parse(raw);
}

std::string poly_text(const cv_poly* poly) {
    char* raw = nullptr;
    if (cv_poly_to_text(poly, &raw) != CV_OK)
        return "";
    CvString guard(raw);
    return raw;
}

int emit_poly_payload(json payload, const cv_poly* poly) {
    payload["poly"] = poly_json(poly);
    payload["text"] = poly_text(poly);
    std::cout << payload.dump() << "\n";
    return kExitOk;
}

int run_families(const std::string& family, unsigned n, const std::string& route_name) {
    cv_poly* raw = nullptr;
    cv_status status = CV_ERROR_BAD_ARGUMENT;
    json payload{{"family", family}, {"n", n}};
    if (family == "p") {
        status = cv_trace_power_poly(n, &raw);
    } else if (family == "g") {
        status = cv_cyclotomic_poly(n, &raw);
    } else {
        cv_q_route route = CV_Q_ROUTE_BOTH;
        if (route_name == "recursive")
            route = CV_Q_ROUTE_RECURSIVE;
        else if (route_name == "via-cyclotomic")
            route = CV_Q_ROUTE_VIA_CYCLOTOMIC;
        payload["route"] = route_name;
        status = cv_half_cyclotomic_poly(n, route, &raw);
    }
    if (status != CV_OK)
        return fail(status);
    CvPoly poly(raw);
    int degree = -1;
    cv_poly_degree(poly.get(), 'Z', &degree);
    payload["degree"] = degree;
    return emit_poly_payload(std::move(payload), poly.get());
}

int run_trace_reduce(const std::string& word) {
    char* reduced_raw = nullptr;
    if (cv_status s = cv_word_reduce(word.c_str(), &reduced_raw); s != CV_OK)
        return fail(s);
    CvString reduced(reduced_raw);
    cv_poly* poly_raw = nullptr;
    if (cv_status s = cv_word_trace_poly(word.c_str(), &poly_raw); s != CV_OK)
        return fail(s);
    CvPoly poly(poly_raw);
    json payload{{"word", word}, {"reduced", reduced.get()}};
    return emit_poly_payload(std::move(payload), poly.get());
}

int run_variety_defining(unsigned m, const std::string& form_name) {
    cv_form form = CV_FORM_CLOSED;
    if (form_name == "direct")
        form = CV_FORM_DIRECT;
    else if (form_name == "trace")
        form = CV_FORM_TRACE;
    cv_poly* raw = nullptr;
    if (cv_status s = cv_variety_defining(m, form, &raw); s != CV_OK)
        return fail(s);
    CvPoly poly(raw);
    json payload{{"m", m}, {"form", form_name}};
    return emit_poly_payload(std::move(payload), poly.get());
}

int run_variety_lines(unsigned m) {
    char* raw = nullptr;
    if (cv_status s = cv_curve_description_json(m, &raw); s != CV_OK)
        return fail(s);
    CvString out(raw);
    std::cout << out.get() << "\n";
    return kExitOk;
}

int run_plot_data(unsigned m, double x_min, double x_max, unsigned samples) {
    char* raw = nullptr;
    if (cv_status s = cv_plot_csv(m, x_min, x_max, samples, &raw); s != CV_OK)
        return fail(s);
    CvString out(raw);
    std::cout << out.get();
    return kExitOk;
}

int run_verify(const std::string& scope, unsigned max_m, unsigned max_n,
               unsigned max_m_trace, unsigned max_m_div, const std::string& fixture_path) {
    json reports = json::array();
    bool all = true;

    auto merge = [&](const char* raw, int passed) {
        json part = json::parse(raw);
        for (auto& r : part)
            reports.push_back(std::move(r));
        all = all && passed != 0;
    };

    if (scope == "families" || scope == "all") {
        char* raw = nullptr;
        int passed = 0;
        if (cv_status s = cv_verify_families_json(max_n, &raw, &passed); s != CV_OK)
            return fail(s);
        CvString guard(raw);
        merge(raw, passed);
    }
    if (scope == "variety" || scope == "all") {
        char* raw = nullptr;
        int passed = 0;
        if (cv_status s = cv_verify_variety_json(max_m, max_m_trace, max_m_div, &raw, &passed);
            s != CV_OK)
            return fail(s);
        CvString guard(raw);
        merge(raw, passed);
    }
    if (!fixture_path.empty()) {
        std::ifstream in(fixture_path);
        if (!in) {
            std::cerr << "error: cannot read fixture file " << fixture_path << "\n";
            return kExitUsage;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        char* raw = nullptr;
        int passed = 0;
        if (cv_status s = cv_verify_q_fixture_json(buffer.str().c_str(), &raw, &passed);
            s != CV_OK)
            return fail(s);
        CvString guard(raw);
        merge(raw, passed);
    }

    json payload{{"reports", reports}, {"passed", all}};
    std::cout << payload.dump() << "\n";
    return all ? kExitOk : kExitVerifyFailed;
}

int run_sample(unsigned m, unsigned count, unsigned long long seed, double tol,
               const std::string& kind, bool csv) {
    json samples = json::array();
    bool all = true;
    auto collect = [&](cv_rep_kind rep_kind) -> cv_status {
        char* raw = nullptr;
        int ok = 0;
        cv_status s = cv_sample_reports_json(m, count, seed, tol, rep_kind, &raw, &ok);
        if (s != CV_OK)
            return s;
        CvString guard(raw);
        json part = json::parse(raw);
        for (auto& r : part)
            samples.push_back(std::move(r));
        all = all && ok != 0;
        return CV_OK;
    };
    if (kind == "abelian" || kind == "both")
        if (cv_status s = collect(CV_REP_ABELIAN); s != CV_OK)
            return fail(s);
    if (kind == "irreducible" || kind == "both")
        if (cv_status s = collect(CV_REP_IRREDUCIBLE); s != CV_OK)
            return fail(s);

    if (csv) {
        std::cout << "m,kind,seed,X_re,X_im,Z_re,Z_im,residual_defining,residual_relation,"
                     "nearest_line\n";
        char buf[256];
        for (const auto& r : samples) {
            std::string nearest =
                r["nearest_line"].is_null() ? "" : r["nearest_line"].dump();
            std::snprintf(buf, sizeof buf, "%u,%s,%llu,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%s\n",
                          r["m"].get<unsigned>(), r["kind"].get<std::string>().c_str(),
                          (unsigned long long)r["seed"].get<std::uint64_t>(),
                          r["X"][0].get<double>(), r["X"][1].get<double>(),
                          r["Z"][0].get<double>(), r["Z"][1].get<double>(),
                          r["residual_defining"].get<double>(),
                          r["residual_relation"].get<double>(), nearest.c_str());
            std::cout << buf;
        }
    } else {
        json payload{{"samples", samples}, {"passed", all}};
        std::cout << payload.dump() << "\n";
    }
    return all ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for SL(2,C) trace polynomials and the character "
                 "variety of (m,2) torus knots"};
    app.require_subcommand(1);

    bool flag_json = false, flag_csv = false;
    unsigned threads = 1;
    app.add_flag("--json", flag_json, "JSON output (default)");
    app.add_flag("--csv", flag_csv, "CSV output for tabular results");
    app.add_option("--threads", threads, "worker thread hint (current build runs serially)");
    app.fallthrough();

    // families {p|q|g} --n N [--route ...]
    auto* families_cmd = app.add_subcommand("families", "polynomial families p_n, q_n, g_n");
    std::string family, route = "both";
    unsigned fam_n = 0;
    families_cmd->add_option("family", family, "which family: p, q or g")
        ->required()
        ->check(CLI::IsMember({"p", "q", "g"}));
    families_cmd->add_option("--n", fam_n, "index")->required();
    families_cmd->add_option("--route", route, "construction route for q")
        ->check(CLI::IsMember({"recursive", "via-cyclotomic", "both"}));

    // trace reduce --word W
    auto* trace_cmd = app.add_subcommand("trace", "trace polynomials of free-group words");
    trace_cmd->require_subcommand(1);
    auto* trace_reduce = trace_cmd->add_subcommand("reduce", "reduce a word to its trace polynomial");
    std::string word;
    trace_reduce->add_option("--word", word, "word over x, y, X, Y; powers like x^3, (xy)^5")
        ->required();

    // variety defining | lines
    auto* variety_cmd = app.add_subcommand("variety", "the character variety of H_m");
    variety_cmd->require_subcommand(1);
    auto* defining = variety_cmd->add_subcommand("defining", "defining polynomial of X(H_m)");
    unsigned var_m = 3;
    std::string form = "closed";
    defining->add_option("--m", var_m, "odd m > 1")->required();
    defining->add_option("--form", form, "construction route")
        ->check(CLI::IsMember({"direct", "closed", "trace"}));
    auto* lines = variety_cmd->add_subcommand("lines", "parabola plus horizontal lines");
    unsigned lines_m = 3;
    lines->add_option("--m", lines_m, "odd m > 1")->required();

    // verify {families|variety|all}
    auto* verify_cmd = app.add_subcommand("verify", "exact verification sweeps");
    std::string scope;
    unsigned max_m = 99, max_n = 200, max_m_trace = 17, max_m_div = 13;
    std::string fixture;
    verify_cmd->add_option("scope", scope, "families, variety or all")
        ->required()
        ->check(CLI::IsMember({"families", "variety", "all"}));
    verify_cmd->add_option("--max-m", max_m, "largest odd m for variety checks");
    verify_cmd->add_option("--max-n", max_n, "largest index for family identities");
    verify_cmd->add_option("--max-m-trace", max_m_trace,
                           "cap for the word-trace route (it grows quickly)");
    verify_cmd->add_option("--max-m-div", max_m_div, "cap for the relator divisibility check");
    verify_cmd->add_option("--fixture", fixture,
                           "JSON file {\"q\":{\"<n>\":<poly>,...}} to check against computed q_n");

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "seeded numeric representation sampling");
    unsigned sample_m = 3, count = 100;
    unsigned long long seed = 1;
    double tol = 1e-6;
    std::string kind = "both";
    sample_cmd->add_option("--m", sample_m, "odd m > 1")->required();
    sample_cmd->add_option("--count", count, "samples per kind");
    sample_cmd->add_option("--seed", seed, "base seed; sample i uses seed + i");
    sample_cmd->add_option("--tol", tol, "residual tolerance");
    sample_cmd->add_option("--kind", kind, "abelian, irreducible or both")
        ->check(CLI::IsMember({"abelian", "irreducible", "both"}));

    // plot-data
    auto* plot_cmd = app.add_subcommand("plot-data", "CSV samples of the curve components");
    unsigned plot_m = 3, plot_samples = 101;
    double x_min = -3.0, x_max = 3.0;
    plot_cmd->add_option("--m", plot_m, "odd m > 1")->required();
    plot_cmd->add_option("--xmin", x_min, "left end of the x range");
    plot_cmd->add_option("--xmax", x_max, "right end of the x range");
    plot_cmd->add_option("--samples", plot_samples, "parabola sample count (>= 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (families_cmd->parsed())
            return run_families(family, fam_n, route);
        if (trace_cmd->parsed() && trace_reduce->parsed())
            return run_trace_reduce(word);
        if (variety_cmd->parsed() && defining->parsed())
            return run_variety_defining(var_m, form);
        if (variety_cmd->parsed() && lines->parsed())
            return run_variety_lines(lines_m);
        if (verify_cmd->parsed())
            return run_verify(scope, max_m, max_n, max_m_trace, max_m_div, fixture);
        if (sample_cmd->parsed())
            return run_sample(sample_m, count, seed, tol, kind, flag_csv);
        if (plot_cmd->parsed())
            return run_plot_data(plot_m, x_min, x_max, plot_samples);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: missing subcommand\n";
    return kExitUsage;
}
