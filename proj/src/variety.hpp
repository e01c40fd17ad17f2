#pragma once

#include <string>
#include <vector>

#include "families.hpp"
#include "mpoly.hpp"

namespace charvar::variety {

// f_s(X,Z) = p_s(Z)(h - 1) + sum_{i=1..s} (-1)^i p_{s-i}(Z) alpha_i with
// h = X^2 - Z, k = X^2 - 2, alpha_i = h (i even) or k (i odd).
MPoly f_direct(unsigned s);

// (X^2 - Z - 2) * prod_{1 != d | m} q_d*(Z) for odd m > 1.
MPoly closed_form(unsigned m);

// prod_{1 != d | m} q_d*(Z): the horizontal-line factor alone.
MPoly line_factor(unsigned m);

struct VarietyChecks {
    unsigned m = 0;
    bool direct_equals_closed = false; // f_direct((m-1)/2) == closed_form(m)
    bool trace_matches_direct = false; // f_trace(m) at Y = X == f_direct
    bool divides_p0 = false;           // f_direct divides p0(X, X, Z)
    bool all() const { return direct_equals_closed && trace_matches_direct && divides_p0; }
};

// Runs the three exact cross-checks tying the defining polynomial routes
// together; failures are recorded, not thrown.
VarietyChecks verify_variety(unsigned m);

// The (m-1)/2 horizontal line heights -2cos(2*pi*k/m), sorted ascending.
std::vector<double> line_levels(unsigned m);

struct CurveDescription {
    unsigned m = 0;
    bool has_parabola = true;
    std::vector<double> levels;
    MPoly factor; // line_factor(m)

    // {"m":m,"parabola":"Z=X^2-2","lines":[...],"defining_poly":{...}}
    std::string to_json() const;
};

CurveDescription curve_description(unsigned m);

struct PlotPoint {
    std::string component;
    double x = 0.0;
    double z = 0.0;
};

// Parabola samples plus one segment (two endpoints) per horizontal line.
std::vector<PlotPoint> plot_data(unsigned m, double x_min, double x_max, unsigned samples);

// CSV with header "component,x,z" and 12-significant-digit values.
std::string plot_csv(const std::vector<PlotPoint>& points);

// |p(t)| / max|coeff|, evaluated with compensated Horner; the shared
// residual scaling for all root checks.
double scaled_root_residual(const MPoly& p, Var v, double t);

} // namespace charvar::variety
