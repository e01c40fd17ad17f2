#include "variety.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include <nlohmann/json.hpp>

#include "words.hpp"

namespace charvar::variety {

using json = nlohmann::json;
using families::half_cyclotomic;
using families::trace_power_poly;

namespace {

void require_odd_m(unsigned m) {
    if (m <= 1 || m % 2 == 0)
        raise(ErrorCode::NotOddM, "m must be an odd integer greater than 1");
}

double round_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

} // namespace

MPoly f_direct(unsigned s) {
    if (s < 1)
        raise(ErrorCode::BadArgument, "f_s needs s >= 1");
    MPoly X2 = MPoly::variable(Var::X) * MPoly::variable(Var::X);
    MPoly h = X2 - MPoly::variable(Var::Z);
    MPoly k = X2 - MPoly::constant(2);
    MPoly f = trace_power_poly(s) * (h - MPoly::constant(1));
    for (unsigned i = 1; i <= s; ++i) {
        MPoly term = trace_power_poly(s - i) * (i % 2 == 0 ? h : k);
        f += (i % 2 == 0) ? term : -term;
    }
    return f;
}

MPoly line_factor(unsigned m) {
    require_odd_m(m);
    MPoly prod = MPoly::constant(1);
    for (unsigned d : families::divisors(m))
        if (d != 1)
            prod *= star(half_cyclotomic(d, families::QRoute::Recursive));
    return prod;
}

MPoly closed_form(unsigned m) {
    MPoly parabola = MPoly::variable(Var::X) * MPoly::variable(Var::X) -
                     MPoly::variable(Var::Z) - MPoly::constant(2);
    return parabola * line_factor(m);
}

VarietyChecks verify_variety(unsigned m) {
    require_odd_m(m);
    VarietyChecks out;
    out.m = m;
    unsigned s = (m - 1) / 2;
    MPoly direct = f_direct(s);
    out.direct_equals_closed = (direct == closed_form(m));

    MPoly traced = words::f_trace(m).f.substitute(Var::Y, MPoly::variable(Var::X));
    out.trace_matches_direct = (traced == direct);

    MPoly p0_xx =
        words::h_m_presentation(m).p0.substitute(Var::Y, MPoly::variable(Var::X));
    try {
        exact_div(p0_xx, direct, Var::X);
        out.divides_p0 = true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisible)
            throw;
        out.divides_p0 = false;
    }
    return out;
}

std::vector<double> line_levels(unsigned m) {
    require_odd_m(m);
    std::vector<double> out;
    out.reserve((m - 1) / 2);
    for (unsigned k = 1; k <= (m - 1) / 2; ++k)
        out.push_back(-2.0 * std::cos(2.0 * std::numbers::pi * (double)k / (double)m));
    std::sort(out.begin(), out.end());
    return out;
}

double scaled_root_residual(const MPoly& p, Var v, double t) {
    if (p.is_zero())
        return 0.0;
    double norm = p.max_abs_coeff().get_d();
    return std::abs(p.eval_real_dd(v, t)) / norm;
}

CurveDescription curve_description(unsigned m) {
    CurveDescription out;
    out.m = m;
    out.has_parabola = true;
    out.levels = line_levels(m);
    out.factor = line_factor(m);
    return out;
}

std::string CurveDescription::to_json() const {
    json lines = json::array();
    for (double l : levels)
        lines.push_back(round_sig12(l));
    json j{{"m", m},
           {"parabola", "Z=X^2-2"},
           {"lines", lines},
           {"defining_poly", json::parse(closed_form(m).to_json())}};
    return j.dump();
}

std::vector<PlotPoint> plot_data(unsigned m, double x_min, double x_max, unsigned samples) {
    require_odd_m(m);
    if (!(x_min < x_max) || samples < 2 || !std::isfinite(x_min) || !std::isfinite(x_max))
        raise(ErrorCode::BadRange, "need x_min < x_max and samples >= 2");
    std::vector<PlotPoint> out;
    for (unsigned i = 0; i < samples; ++i) {
        double x = x_min + (x_max - x_min) * (double)i / (double)(samples - 1);
        out.push_back({"parabola", x, x * x - 2.0});
    }
    std::vector<double> levels = line_levels(m);
    for (std::size_t k = 0; k < levels.size(); ++k) {
        std::string name = "line" + std::to_string(k + 1);
        out.push_back({name, x_min, levels[k]});
        out.push_back({name, x_max, levels[k]});
    }
    return out;
}

std::string plot_csv(const std::vector<PlotPoint>& points) {
    std::string out = "component,x,z\n";
    char buf[96];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%s,%.12g,%.12g\n", p.component.c_str(), p.x, p.z);
        out += buf;
    }
    return out;
}

} // namespace charvar::variety
