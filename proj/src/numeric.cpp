#include "numeric.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "families.hpp"
#include "variety.hpp"

namespace charvar::numeric {

using json = nlohmann::json;

Mat2 Mat2::pow(long e) const {
    Mat2 base = e < 0 ? adjugate_inverse() : *this;
    unsigned long k = (unsigned long)(e < 0 ? -e : e);
    Mat2 result = identity();
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

double Mat2::frob_norm() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

double matrix_residual(const Mat2& M, const Mat2& N) {
    double scale = std::max({1.0, M.frob_norm(), N.frob_norm()});
    return (M - N).frob_norm() / scale;
}

const char* kind_name(RepKind k) {
    return k == RepKind::Abelian ? "abelian" : "irreducible_candidate";
}

namespace {

void require_odd_m(unsigned m) {
    if (m <= 1 || m % 2 == 0)
        raise(ErrorCode::NotOddM, "m must be an odd integer greater than 1");
}

// Hand-rolled uniforms over mt19937_64 output so that identical seeds give
// identical draws on every platform and standard library.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double unit() { return (double)(gen() >> 11) * 0x1.0p-53; } // [0, 1)
    double sym() { return 2.0 * unit() - 1.0; }                 // [-1, 1)
    cplx box() { double re = sym(); double im = sym(); return {re, im}; }
    std::uint64_t below(std::uint64_t n) { return gen() % n; }
};

// Conditioning guards for the random draws: products of up to ~2m images
// must stay far enough from singular configurations to keep the 1e-9
// matrix-residual checks meaningful.
constexpr double kMinAbelianModulus = 0.4;
constexpr double kMinOffDiagonal = 0.5;
constexpr int kMaxRedraws = 64;

void install_hm_generators(Representation& rep) {
    rep.x = rep.B.adjugate_inverse() * rep.A.pow((long)(rep.m + 1) / 2);
    rep.y = rep.A.pow(-(long)((rep.m - 1) / 2)) * rep.B;
}

double round_sig12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

json cplx_json(cplx v) { return json::array({round_sig12(v.real()), round_sig12(v.imag())}); }

} // namespace

Representation abelian_from_parameter(unsigned m, cplx u) {
    require_odd_m(m);
    if (std::abs(u) == 0.0)
        raise(ErrorCode::DegenerateSample, "abelian parameter must be nonzero");
    Representation rep;
    rep.m = m;
    rep.kind = RepKind::Abelian;
    cplx u2 = u * u;
    cplx um = std::pow(u, (double)m);
    rep.A = {u2, 0.0, 0.0, 1.0 / u2};
    rep.B = {um, 0.0, 0.0, 1.0 / um};
    install_hm_generators(rep);
    return rep;
}

Representation irreducible_from_parameters(unsigned m, unsigned j, cplx a, cplx b) {
    require_odd_m(m);
    if (j >= m || j == (m - 1) / 2)
        raise(ErrorCode::BadArgument, "j must lie in [0, m-1] and avoid (m-1)/2");
    if (std::abs(b) < 1e-12)
        raise(ErrorCode::DegenerateSample, "off-diagonal parameter b is too close to 0");
    Representation rep;
    rep.m = m;
    rep.kind = RepKind::IrreducibleCandidate;
    double angle = std::numbers::pi * (double)(2 * j + 1) / (double)m;
    cplx lambda = std::polar(1.0, angle);
    rep.A = {lambda, 0.0, 0.0, 1.0 / lambda};
    cplx c = -(1.0 + a * a) / b;
    rep.B = {a, b, c, -a}; // tr B = 0, det B = 1, so B^2 = -I
    install_hm_generators(rep);
    return rep;
}

Representation sample_representation(unsigned m, RepKind kind, std::uint64_t seed) {
    require_odd_m(m);
    Rng rng(seed ^ (kind == RepKind::Abelian ? 0x61626572ULL : 0x69727265ULL));
    Representation rep;
    if (kind == RepKind::Abelian) {
        bool unit_modulus = rng.unit() < 0.5;
        cplx u;
        if (unit_modulus) {
            u = std::polar(1.0, 2.0 * std::numbers::pi * rng.unit());
        } else {
            int tries = 0;
            do {
                u = rng.box();
                if (++tries > kMaxRedraws)
                    raise(ErrorCode::DegenerateSample, "could not draw a usable abelian parameter");
            } while (std::abs(u) < kMinAbelianModulus);
        }
        rep = abelian_from_parameter(m, u);
    } else {
        unsigned j = (unsigned)rng.below(m);
        while (j == (m - 1) / 2)
            j = (unsigned)rng.below(m);
        cplx a = rng.box();
        cplx b;
        int tries = 0;
        do {
            b = rng.box();
            if (++tries > kMaxRedraws)
                raise(ErrorCode::DegenerateSample, "could not draw a usable off-diagonal entry");
        } while (std::abs(b) < kMinOffDiagonal);
        rep = irreducible_from_parameters(m, j, a, b);
    }
    rep.seed = seed;
    return rep;
}

Mat2 eval_word(const Representation& rep, const words::FreeWord& w) {
    Mat2 result = Mat2::identity();
    for (words::Letter l : w.letters) {
        const Mat2& img = (std::abs((int)l) == 1) ? rep.x : rep.y;
        result = result * (l > 0 ? img : img.adjugate_inverse());
    }
    return result;
}

double power_trace_check(const Mat2& M, unsigned n) {
    cplx predicted = families::trace_power_value(M.trace(), n);
    cplx actual = M.pow((long)n).trace();
    return std::abs(predicted - actual) / std::max(1.0, std::abs(actual));
}

double ToroReport::max_residual() const {
    return std::max({input_relation, hm_relation, psi_phi_A, psi_phi_B, phi_psi_x, phi_psi_y});
}

ToroReport check_toro_isomorphism(unsigned m, const Representation& rep, double tol) {
    require_odd_m(m);
    ToroReport report;
    report.input_relation = matrix_residual(rep.A.pow((long)m), rep.B * rep.B);
    if (report.input_relation > tol)
        raise(ErrorCode::RelationViolated,
              "representation does not satisfy A^m = B^2 within tolerance");

    // H_m relation for the induced generators.
    Mat2 lhs = eval_word(rep, words::alternating_word(true, m));
    Mat2 rhs = eval_word(rep, words::alternating_word(false, m));
    report.hm_relation = matrix_residual(lhs, rhs);

    // psi sends A to yx and B to the alternating length-m word yxy...y.
    Mat2 A_back = rep.y * rep.x;
    Mat2 B_back = eval_word(rep, words::alternating_word(false, m));
    report.psi_phi_A = matrix_residual(A_back, rep.A);
    report.psi_phi_B = matrix_residual(B_back, rep.B);

    // phi applied to the rebuilt pair must recover the H_m images.
    Mat2 x_back = B_back.adjugate_inverse() * A_back.pow((long)(m + 1) / 2);
    Mat2 y_back = A_back.pow(-(long)((m - 1) / 2)) * B_back;
    report.phi_psi_x = matrix_residual(x_back, rep.x);
    report.phi_psi_y = matrix_residual(y_back, rep.y);
    return report;
}

MembershipReport membership_check(unsigned m, const Representation& rep, double tol) {
    require_odd_m(m);
    Mat2 lhs = eval_word(rep, words::alternating_word(true, m));
    Mat2 rhs = eval_word(rep, words::alternating_word(false, m));
    double relation = matrix_residual(lhs, rhs);
    if (relation > tol)
        raise(ErrorCode::RelationViolated,
              "H_m images do not satisfy the defining relation within tolerance");

    MembershipReport report;
    report.m = m;
    report.kind = rep.kind;
    report.seed = rep.seed;
    report.residual_relation = relation;
    report.X = rep.x.trace();
    report.Z = (rep.x * rep.y).trace();

    MPoly defining = variety::closed_form(m);
    std::array<std::optional<cplx>, 3> assignment;
    assignment[(int)Var::X] = report.X;
    assignment[(int)Var::Z] = report.Z;
    double norm = defining.max_abs_coeff().get_d();
    report.residual_defining = std::abs(defining.eval(assignment)) / norm;

    if (rep.kind == RepKind::Abelian) {
        report.parabola_residual = std::abs(report.Z - (report.X * report.X - 2.0));
    } else {
        double best_dist = 0.0, best_level = 0.0;
        bool first = true;
        for (double level : variety::line_levels(m)) {
            double dist = std::abs(report.Z - level);
            if (first || dist < best_dist) {
                best_dist = dist;
                best_level = level;
                first = false;
            }
        }
        report.nearest_line = best_level;
        report.line_distance = best_dist;
    }
    return report;
}

std::string MembershipReport::to_json() const {
    json j{{"m", m},
           {"kind", kind_name(kind)},
           {"seed", seed},
           {"X", cplx_json(X)},
           {"Z", cplx_json(Z)},
           {"residual_defining", round_sig12(residual_defining)},
           {"residual_relation", round_sig12(residual_relation)}};
    j["nearest_line"] = nearest_line ? json(round_sig12(*nearest_line)) : json(nullptr);
    j["residual_parabola"] =
        parabola_residual ? json(round_sig12(*parabola_residual)) : json(nullptr);
    j["line_distance"] = line_distance ? json(round_sig12(*line_distance)) : json(nullptr);
    return j.dump();
}

} // namespace charvar::numeric
