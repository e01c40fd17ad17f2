#include <doctest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "charvar.h"

using json = nlohmann::json;

namespace {

std::string take_string(char* s) {
    std::string out = s ? s : "";
    cv_string_free(s);
    return out;
}

std::string poly_text(cv_poly* p) {
    char* raw = nullptr;
    REQUIRE(cv_poly_to_text(p, &raw) == CV_OK);
    return take_string(raw);
}

} // namespace

TEST_CASE("family polynomials through the C API") {
    cv_poly* p = nullptr;
    REQUIRE(cv_trace_power_poly(4, &p) == CV_OK);
    CHECK(poly_text(p) == "Z^4 - 4*Z^2 + 2");
    cv_poly_free(p);

    REQUIRE(cv_half_cyclotomic_poly(3, CV_Q_ROUTE_BOTH, &p) == CV_OK);
    CHECK(poly_text(p) == "Z + 1");
    int degree = -2;
    CHECK(cv_poly_degree(p, 'Z', &degree) == CV_OK);
    CHECK(degree == 1);
    cv_poly* ps = nullptr;
    REQUIRE(cv_poly_star(p, &ps) == CV_OK);
    CHECK(poly_text(ps) == "Z - 1");
    cv_poly_free(ps);
    cv_poly_free(p);

    REQUIRE(cv_cyclotomic_poly(6, &p) == CV_OK);
    CHECK(poly_text(p) == "Z^2 - Z + 1");
    cv_poly_free(p);

    unsigned long long nu = 0;
    REQUIRE(cv_generator_count(2, &nu) == CV_OK);
    CHECK(nu == 3);
}

TEST_CASE("error paths set a message and a matching status") {
    cv_poly* p = nullptr;
    CHECK(cv_cyclotomic_poly(0, &p) == CV_ERROR_BAD_ARGUMENT);
    CHECK(std::string(cv_last_error_message()).size() > 0);
    CHECK(cv_half_cyclotomic_poly(2, CV_Q_ROUTE_VIA_CYCLOTOMIC, &p) == CV_ERROR_BAD_ARGUMENT);
    CHECK(cv_variety_defining(4, CV_FORM_CLOSED, &p) == CV_ERROR_NOT_ODD_M);
    CHECK(cv_word_trace_poly("x^", &p) == CV_ERROR_PARSE);
    CHECK(cv_poly_from_json("{}", &p) == CV_ERROR_PARSE);
    CHECK(cv_poly_to_json(nullptr, nullptr) == CV_ERROR_BAD_ARGUMENT);
    CHECK(std::string(cv_status_name(CV_ERROR_NOT_ODD_M)) == "not_odd_m");
}

TEST_CASE("words through the C API") {
    char* reduced = nullptr;
    REQUIRE(cv_word_reduce("xyYx", &reduced) == CV_OK);
    CHECK(take_string(reduced) == "xx");

    cv_poly* p = nullptr;
    REQUIRE(cv_word_trace_poly("xyXY", &p) == CV_OK);
    CHECK(poly_text(p) == "-X*Y*Z + X^2 + Y^2 + Z^2 - 2");
    cv_poly_free(p);
}

TEST_CASE("variety routes agree through the C API") {
    for (unsigned m : {3u, 5u, 9u}) {
        cv_poly *direct = nullptr, *closed = nullptr, *trace = nullptr;
        REQUIRE(cv_variety_defining(m, CV_FORM_DIRECT, &direct) == CV_OK);
        REQUIRE(cv_variety_defining(m, CV_FORM_CLOSED, &closed) == CV_OK);
        REQUIRE(cv_variety_defining(m, CV_FORM_TRACE, &trace) == CV_OK);
        int eq = 0;
        CHECK(cv_poly_equal(direct, closed, &eq) == CV_OK);
        CHECK(eq == 1);
        CHECK(cv_poly_equal(direct, trace, &eq) == CV_OK);
        CHECK(eq == 1);
        cv_poly_free(direct);
        cv_poly_free(closed);
        cv_poly_free(trace);
    }
}

TEST_CASE("poly JSON round trip through the C API") {
    cv_poly* p = nullptr;
    REQUIRE(cv_variety_defining(5, CV_FORM_CLOSED, &p) == CV_OK);
    char* raw = nullptr;
    REQUIRE(cv_poly_to_json(p, &raw) == CV_OK);
    std::string text = take_string(raw);
    cv_poly* q = nullptr;
    REQUIRE(cv_poly_from_json(text.c_str(), &q) == CV_OK);
    int eq = 0;
    CHECK(cv_poly_equal(p, q, &eq) == CV_OK);
    CHECK(eq == 1);
    cv_poly_free(p);
    cv_poly_free(q);
}

TEST_CASE("line levels and plot CSV through the C API") {
    double levels[8] = {0};
    size_t count = 0;
    REQUIRE(cv_line_levels(5, levels, 8, &count) == CV_OK);
    REQUIRE(count == 2);
    CHECK(levels[0] == doctest::Approx(-0.6180339887));
    CHECK(levels[1] == doctest::Approx(1.6180339887));
    CHECK(cv_line_levels(5, levels, 1, &count) == CV_ERROR_BAD_ARGUMENT);
    CHECK(cv_line_levels(6, levels, 8, &count) == CV_ERROR_NOT_ODD_M);

    char* csv = nullptr;
    REQUIRE(cv_plot_csv(3, -2.0, 2.0, 3, &csv) == CV_OK);
    std::string text = take_string(csv);
    CHECK(text.rfind("component,x,z\n", 0) == 0);
    CHECK(cv_plot_csv(3, 2.0, -2.0, 3, &csv) == CV_ERROR_BAD_RANGE);
}

TEST_CASE("curve description through the C API") {
    char* raw = nullptr;
    REQUIRE(cv_curve_description_json(3, &raw) == CV_OK);
    json j = json::parse(take_string(raw));
    CHECK(j["m"] == 3);
    CHECK(j["parabola"] == "Z=X^2-2");
    REQUIRE(j["lines"].size() == 1);
    CHECK(j["lines"][0].get<double>() == doctest::Approx(1.0));
    CHECK(j["defining_poly"]["vars"] == json({"X", "Y", "Z"}));
}

TEST_CASE("verification sweeps through the C API") {
    char* raw = nullptr;
    int passed = 0;
    REQUIRE(cv_verify_families_json(20, &raw, &passed) == CV_OK);
    json reports = json::parse(take_string(raw));
    CHECK(passed == 1);
    CHECK(reports.size() == 5);
    for (const auto& r : reports) {
        CHECK(r["passed"] == true);
        CHECK(r["first_failure"].is_null());
    }

    REQUIRE(cv_verify_variety_json(9, 9, 9, &raw, &passed) == CV_OK);
    reports = json::parse(take_string(raw));
    CHECK(passed == 1);
    CHECK(reports.size() == 4);
}

TEST_CASE("q fixture verification") {
    // correct fixture passes
    cv_poly* q5 = nullptr;
    REQUIRE(cv_half_cyclotomic_poly(5, CV_Q_ROUTE_BOTH, &q5) == CV_OK);
    char* q5_json = nullptr;
    REQUIRE(cv_poly_to_json(q5, &q5_json) == CV_OK);
    std::string fixture =
        std::string(R"({"q":{"5":)") + q5_json + "}}";
    cv_string_free(q5_json);
    cv_poly_free(q5);

    char* raw = nullptr;
    int passed = 0;
    REQUIRE(cv_verify_q_fixture_json(fixture.c_str(), &raw, &passed) == CV_OK);
    json report = json::parse(take_string(raw));
    CHECK(passed == 1);
    CHECK(report[0]["identity"] == "q_fixture");

    // corrupting one coefficient flips the result
    json broken = json::parse(fixture);
    broken["q"]["5"]["terms"][0]["c"] = "2";
    REQUIRE(cv_verify_q_fixture_json(broken.dump().c_str(), &raw, &passed) == CV_OK);
    report = json::parse(take_string(raw));
    CHECK(passed == 0);
    CHECK(report[0]["first_failure"] == 5);

    CHECK(cv_verify_q_fixture_json("[]", &raw, &passed) == CV_ERROR_PARSE);
}

TEST_CASE("sample reports through the C API") {
    char* raw = nullptr;
    int ok = 0;
    REQUIRE(cv_sample_reports_json(5, 25, 99, 1e-6, CV_REP_ABELIAN, &raw, &ok) == CV_OK);
    json reports = json::parse(take_string(raw));
    CHECK(ok == 1);
    REQUIRE(reports.size() == 25);
    CHECK(reports[0]["kind"] == "abelian");
    CHECK(reports[0]["seed"] == 99);
    CHECK(reports[24]["seed"] == 123);

    // byte-stable across runs with the same seed
    char* raw2 = nullptr;
    REQUIRE(cv_sample_reports_json(5, 25, 99, 1e-6, CV_REP_ABELIAN, &raw2, &ok) == CV_OK);
    std::string first = json::parse(take_string(raw2)).dump();
    CHECK(first == reports.dump());

    REQUIRE(cv_sample_reports_json(5, 10, 7, 1e-6, CV_REP_IRREDUCIBLE, &raw, &ok) == CV_OK);
    reports = json::parse(take_string(raw));
    CHECK(ok == 1);
    for (const auto& r : reports) {
        CHECK(r["kind"] == "irreducible_candidate");
        CHECK(!r["nearest_line"].is_null());
    }
}

TEST_CASE("version string") {
    CHECK(std::string(cv_version()).size() > 0);
}
