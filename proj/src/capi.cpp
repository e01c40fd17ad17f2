#include "charvar.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "families.hpp"
#include "mpoly.hpp"
#include "numeric.hpp"
#include "variety.hpp"
#include "words.hpp"

using json = nlohmann::json;

struct cv_poly {
    charvar::MPoly value;
};

namespace {

thread_local std::string t_last_error;

cv_status status_from(charvar::ErrorCode code) {
    using charvar::ErrorCode;
    switch (code) {
    case ErrorCode::BadArgument: return CV_ERROR_BAD_ARGUMENT;
    case ErrorCode::NotDivisible: return CV_ERROR_NOT_DIVISIBLE;
    case ErrorCode::ZeroDivisor: return CV_ERROR_ZERO_DIVISOR;
    case ErrorCode::NotUnivariate: return CV_ERROR_NOT_UNIVARIATE;
    case ErrorCode::MissingAssignment: return CV_ERROR_MISSING_ASSIGNMENT;
    case ErrorCode::RouteDisagreement: return CV_ERROR_ROUTE_DISAGREEMENT;
    case ErrorCode::ParseError: return CV_ERROR_PARSE;
    case ErrorCode::BadRange: return CV_ERROR_BAD_RANGE;
    case ErrorCode::NotOddM: return CV_ERROR_NOT_ODD_M;
    case ErrorCode::UnknownGenerator: return CV_ERROR_UNKNOWN_GENERATOR;
    case ErrorCode::RelationViolated: return CV_ERROR_RELATION_VIOLATED;
    case ErrorCode::DegenerateSample: return CV_ERROR_DEGENERATE_SAMPLE;
    }
    return CV_ERROR_INTERNAL;
}

template <typename Fn>
cv_status guarded(Fn&& fn) {
    try {
        fn();
        return CV_OK;
    } catch (const charvar::Error& e) {
        t_last_error = e.what();
        return status_from(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CV_ERROR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return CV_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cv_status require(bool ok, const char* message) {
    if (!ok) {
        t_last_error = message;
        return CV_ERROR_BAD_ARGUMENT;
    }
    return CV_OK;
}

charvar::families::QRoute route_from(cv_q_route route) {
    switch (route) {
    case CV_Q_ROUTE_RECURSIVE: return charvar::families::QRoute::Recursive;
    case CV_Q_ROUTE_VIA_CYCLOTOMIC: return charvar::families::QRoute::ViaCyclotomic;
    default: return charvar::families::QRoute::Both;
    }
}

json report_json(const charvar::families::FamilyReport& r) {
    return json::parse(r.to_json());
}

json variety_check_reports(unsigned max_m, unsigned max_m_trace, unsigned max_m_div,
                           bool& all_passed) {
    using namespace charvar;
    families::FamilyReport direct, traced, divides, lines;
    direct = {"variety_direct_equals_closed", 3, (long)max_m, true, std::nullopt};
    traced = {"variety_trace_route", 3, (long)std::min(max_m, max_m_trace), true, std::nullopt};
    divides = {"variety_divides_p0", 3, (long)std::min(max_m, max_m_div), true, std::nullopt};
    lines = {"variety_line_structure", 3, (long)max_m, true, std::nullopt};

    for (unsigned m = 3; m <= max_m; m += 2) {
        unsigned s = (m - 1) / 2;
        if (direct.all_passed &&
            variety::f_direct(s) != variety::closed_form(m)) {
            direct.all_passed = false;
            direct.first_failure = (long)m;
        }
        if (m <= (unsigned)traced.range_hi && traced.all_passed) {
            MPoly traced_poly =
                words::f_trace(m).f.substitute(Var::Y, MPoly::variable(Var::X));
            if (traced_poly != variety::f_direct(s)) {
                traced.all_passed = false;
                traced.first_failure = (long)m;
            }
        }
        if (m <= (unsigned)divides.range_hi && divides.all_passed) {
            if (!variety::verify_variety(m).divides_p0) {
                divides.all_passed = false;
                divides.first_failure = (long)m;
            }
        }
        if (lines.all_passed) {
            auto levels = variety::line_levels(m);
            MPoly factor = variety::line_factor(m);
            bool ok = levels.size() == (m - 1) / 2;
            for (std::size_t i = 0; ok && i + 1 < levels.size(); ++i)
                ok = levels[i] < levels[i + 1];
            for (double level : levels) {
                if (!ok)
                    break;
                ok = variety::scaled_root_residual(factor, Var::Z, level) <= 1e-9;
            }
            if (!ok) {
                lines.all_passed = false;
                lines.first_failure = (long)m;
            }
        }
    }
    all_passed = direct.all_passed && traced.all_passed && divides.all_passed &&
                 lines.all_passed;
    return json::array({report_json(direct), report_json(traced), report_json(divides),
                        report_json(lines)});
}

} // namespace

extern "C" {

const char* cv_version(void) { return "1.0.0"; }

const char* cv_status_name(cv_status status) {
    switch (status) {
    case CV_OK: return "ok";
    case CV_ERROR_BAD_ARGUMENT: return "bad_argument";
    case CV_ERROR_NOT_DIVISIBLE: return "not_divisible";
    case CV_ERROR_ZERO_DIVISOR: return "zero_divisor";
    case CV_ERROR_NOT_UNIVARIATE: return "not_univariate";
    case CV_ERROR_MISSING_ASSIGNMENT: return "missing_assignment";
    case CV_ERROR_ROUTE_DISAGREEMENT: return "route_disagreement";
    case CV_ERROR_PARSE: return "parse_error";
    case CV_ERROR_BAD_RANGE: return "bad_range";
    case CV_ERROR_NOT_ODD_M: return "not_odd_m";
    case CV_ERROR_UNKNOWN_GENERATOR: return "unknown_generator";
    case CV_ERROR_RELATION_VIOLATED: return "relation_violated";
    case CV_ERROR_DEGENERATE_SAMPLE: return "degenerate_sample";
    case CV_ERROR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* cv_last_error_message(void) { return t_last_error.c_str(); }

void cv_poly_free(cv_poly* poly) { delete poly; }

void cv_string_free(char* str) { delete[] str; }

cv_status cv_poly_from_json(const char* text, cv_poly** out) {
    if (cv_status s = require(text && out, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = new cv_poly{charvar::MPoly::from_json(text)}; });
}

cv_status cv_poly_to_json(const cv_poly* poly, char** out) {
    if (cv_status s = require(poly && out, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = dup_string(poly->value.to_json()); });
}

cv_status cv_poly_to_text(const cv_poly* poly, char** out) {
    if (cv_status s = require(poly && out, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = dup_string(poly->value.to_string()); });
}

cv_status cv_poly_equal(const cv_poly* a, const cv_poly* b, int* out_equal) {
    if (cv_status s = require(a && b && out_equal, "null argument"); s != CV_OK)
        return s;
    *out_equal = (a->value == b->value) ? 1 : 0;
    return CV_OK;
}

cv_status cv_poly_degree(const cv_poly* poly, char var, int* out_degree) {
    if (cv_status s = require(poly && out_degree, "null argument"); s != CV_OK)
        return s;
    charvar::Var v;
    switch (var) {
    case 'X': v = charvar::Var::X; break;
    case 'Y': v = charvar::Var::Y; break;
    case 'Z': v = charvar::Var::Z; break;
    default: return require(false, "var must be 'X', 'Y' or 'Z'");
    }
    *out_degree = poly->value.degree(v);
    return CV_OK;
}

cv_status cv_trace_power_poly(unsigned n, cv_poly** out) {
    if (cv_status s = require(out != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = new cv_poly{charvar::families::trace_power_poly(n)}; });
}

cv_status cv_cyclotomic_poly(unsigned n, cv_poly** out) {
    if (cv_status s = require(out != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = new cv_poly{charvar::families::cyclotomic(n)}; });
}

cv_status cv_half_cyclotomic_poly(unsigned n, cv_q_route route, cv_poly** out) {
    if (cv_status s = require(out != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded(
        [&] { *out = new cv_poly{charvar::families::half_cyclotomic(n, route_from(route))}; });
}

cv_status cv_poly_star(const cv_poly* poly, cv_poly** out) {
    if (cv_status s = require(poly && out, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = new cv_poly{charvar::star(poly->value)}; });
}

cv_status cv_generator_count(unsigned long long n, unsigned long long* out) {
    if (cv_status s = require(out != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded([&] { *out = charvar::families::generator_count(n); });
}

cv_status cv_word_reduce(const char* word, char** out_reduced) {
    if (cv_status s = require(word && out_reduced, "null argument"); s != CV_OK)
        return s;
    return guarded([&] {
        *out_reduced =
            dup_string(charvar::words::word_string(charvar::words::free_reduce(charvar::words::parse_word(word))));
    });
}

cv_status cv_word_trace_poly(const char* word, cv_poly** out) {
    if (cv_status s = require(word && out, "null argument"); s != CV_OK)
        return s;
    return guarded([&] {
        *out = new cv_poly{charvar::words::trace_poly(charvar::words::parse_word(word))};
    });
}

cv_status cv_variety_defining(unsigned m, cv_form form, cv_poly** out) {
    if (cv_status s = require(out != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded([&] {
        using namespace charvar;
        MPoly poly;
        switch (form) {
        case CV_FORM_DIRECT:
            if (m <= 1 || m % 2 == 0)
                raise(ErrorCode::NotOddM, "m must be an odd integer greater than 1");
            poly = variety::f_direct((m - 1) / 2);
            break;
        case CV_FORM_CLOSED:
            poly = variety::closed_form(m);
            break;
        case CV_FORM_TRACE:
            poly = words::f_trace(m).f.substitute(Var::Y, MPoly::variable(Var::X));
            break;
        default:
            raise(ErrorCode::BadArgument, "unknown form");
        }
        *out = new cv_poly{std::move(poly)};
    });
}

cv_status cv_curve_description_json(unsigned m, char** out_json) {
    if (cv_status s = require(out_json != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded(
        [&] { *out_json = dup_string(charvar::variety::curve_description(m).to_json()); });
}

cv_status cv_line_levels(unsigned m, double* out_levels, size_t capacity, size_t* out_count) {
    if (cv_status s = require(out_count != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded([&] {
        auto levels = charvar::variety::line_levels(m);
        *out_count = levels.size();
        if (out_levels) {
            if (capacity < levels.size())
                charvar::raise(charvar::ErrorCode::BadArgument,
                               "capacity too small for line levels");
            for (std::size_t i = 0; i < levels.size(); ++i)
                out_levels[i] = levels[i];
        }
    });
}

cv_status cv_plot_csv(unsigned m, double x_min, double x_max, unsigned samples,
                      char** out_csv) {
    if (cv_status s = require(out_csv != nullptr, "null argument"); s != CV_OK)
        return s;
    return guarded([&] {
        *out_csv = dup_string(
            charvar::variety::plot_csv(charvar::variety::plot_data(m, x_min, x_max, samples)));
    });
}

cv_status cv_verify_families_json(unsigned max_n, char** out_json, int* out_all_passed) {
    if (cv_status s = require(out_json && out_all_passed && max_n >= 1, "need max_n >= 1");
        s != CV_OK)
        return s;
    return guarded([&] {
        using namespace charvar::families;
        std::vector<FamilyReport> reports;
        reports.push_back(verify_family_identity(FamilyIdentity::PnFactorization, max_n));
        reports.push_back(
            verify_family_identity(FamilyIdentity::SumPi, std::max(1u, max_n / 2)));
        reports.push_back(
            verify_family_identity(FamilyIdentity::AlternatingSum, std::max(1u, max_n / 2)));
        reports.push_back(verify_family_identity(FamilyIdentity::BetaIdentity, max_n));
        if (max_n >= 3)
            reports.push_back(verify_q_route_agreement(max_n));
        json arr = json::array();
        bool all = true;
        for (const auto& r : reports) {
            all = all && r.all_passed;
            arr.push_back(report_json(r));
        }
        *out_all_passed = all ? 1 : 0;
        *out_json = dup_string(arr.dump());
    });
}

cv_status cv_verify_variety_json(unsigned max_m, unsigned max_m_trace,
                                 unsigned max_m_divisibility, char** out_json,
                                 int* out_all_passed) {
    if (cv_status s = require(out_json && out_all_passed && max_m >= 3, "need max_m >= 3");
        s != CV_OK)
        return s;
    return guarded([&] {
        bool all = false;
        json arr = variety_check_reports(max_m, max_m_trace, max_m_divisibility, all);
        *out_all_passed = all ? 1 : 0;
        *out_json = dup_string(arr.dump());
    });
}

cv_status cv_verify_q_fixture_json(const char* fixture_json, char** out_json,
                                   int* out_all_passed) {
    if (cv_status s = require(fixture_json && out_json && out_all_passed, "null argument");
        s != CV_OK)
        return s;
    return guarded([&] {
        using namespace charvar;
        json fixture = json::parse(fixture_json, nullptr, false);
        if (fixture.is_discarded() || !fixture.is_object() || !fixture.contains("q") ||
            !fixture["q"].is_object())
            raise(ErrorCode::ParseError, "fixture must be {\"q\":{\"<n>\":<poly>,...}}");
        families::FamilyReport report;
        report.identity = "q_fixture";
        report.all_passed = true;
        long lo = 0, hi = 0;
        std::vector<std::pair<long, MPoly>> entries;
        for (const auto& [key, value] : fixture["q"].items()) {
            char* end = nullptr;
            long n = std::strtol(key.c_str(), &end, 10);
            if (end == key.c_str() || *end != '\0' || n < 1)
                raise(ErrorCode::ParseError, "fixture keys must be positive integers");
            entries.emplace_back(n, MPoly::from_json(value.dump()));
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!entries.empty()) {
            lo = entries.front().first;
            hi = entries.back().first;
        }
        report.range_lo = lo;
        report.range_hi = hi;
        for (const auto& [n, poly] : entries) {
            if (families::half_cyclotomic((unsigned)n) != poly) {
                report.all_passed = false;
                report.first_failure = n;
                break;
            }
        }
        *out_all_passed = report.all_passed ? 1 : 0;
        *out_json = dup_string(json::array({report_json(report)}).dump());
    });
}

cv_status cv_sample_reports_json(unsigned m, unsigned count, unsigned long long seed,
                                 double tol, cv_rep_kind kind, char** out_json,
                                 int* out_all_within_tol) {
    if (cv_status s = require(out_json && out_all_within_tol, "null argument"); s != CV_OK)
        return s;
    return guarded([&] {
        using namespace charvar::numeric;
        RepKind rk = (kind == CV_REP_ABELIAN) ? RepKind::Abelian : RepKind::IrreducibleCandidate;
        json arr = json::array();
        bool all = true;
        for (unsigned i = 0; i < count; ++i) {
            Representation rep = sample_representation(m, rk, seed + i);
            MembershipReport report = membership_check(m, rep, tol);
            bool ok = report.residual_defining <= tol;
            if (report.parabola_residual)
                ok = ok && *report.parabola_residual <= tol;
            if (report.line_distance)
                ok = ok && *report.line_distance <= tol;
            all = all && ok;
            arr.push_back(json::parse(report.to_json()));
        }
        *out_all_within_tol = all ? 1 : 0;
        *out_json = dup_string(arr.dump());
    });
}

} // extern "C"
