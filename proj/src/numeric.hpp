#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "mpoly.hpp"
#include "words.hpp"

namespace charvar::numeric {

using cplx = std::complex<double>;

// 2x2 complex matrix; everything admitted as a representation image has
// determinant 1 up to rounding, so the inverse is the adjugate.
struct Mat2 {
    cplx a{}, b{}, c{}, d{};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }
    Mat2 adjugate_inverse() const { return {d, -b, -c, a}; }
    Mat2 pow(long e) const; // binary exponentiation, negatives via the adjugate

    double frob_norm() const;
};

// ||M - N||_F / max(1, ||M||_F, ||N||_F): the residual used for every
// matrix-level agreement check.
double matrix_residual(const Mat2& M, const Mat2& N);

enum class RepKind { Abelian, IrreducibleCandidate };

const char* kind_name(RepKind k);

// A sampled representation of the torus-knot group <A, B | A^m = B^2>
// together with the induced H_m generator images x = B^-1 A^((m+1)/2),
// y = A^-((m-1)/2) B.
struct Representation {
    unsigned m = 0;
    RepKind kind = RepKind::Abelian;
    std::uint64_t seed = 0;
    Mat2 A, B; // torus-knot generators
    Mat2 x, y; // induced H_m generators
};

// Deterministic sampling: identical (m, kind, seed) gives the identical
// representation.  Abelian draws are diagonal with A^m = B^2 exactly;
// irreducible candidates satisfy A^m = B^2 = -I.  Draws that would make the
// matrix entries badly conditioned are rejected and redrawn internally.
Representation sample_representation(unsigned m, RepKind kind, std::uint64_t seed);

// Deterministic constructors, used directly by tests.
Representation abelian_from_parameter(unsigned m, cplx u);
Representation irreducible_from_parameters(unsigned m, unsigned j, cplx a, cplx b);

// Matrix image of a word over {x, y} under the representation's H_m images.
Mat2 eval_word(const Representation& rep, const words::FreeWord& w);

// |p_n(tr M) - tr(M^n)| / max(1, |tr(M^n)|).
double power_trace_check(const Mat2& M, unsigned n);

struct ToroReport {
    double input_relation = 0.0; // A^m vs B^2
    double hm_relation = 0.0;    // the two alternating length-m words in (x, y)
    double psi_phi_A = 0.0;      // yx image vs A
    double psi_phi_B = 0.0;      // length-m alternating image vs B
    double phi_psi_x = 0.0;      // rebuilt x vs x
    double phi_psi_y = 0.0;      // rebuilt y vs y
    double max_residual() const;
};

// Matrix-level verification of the isomorphism between the torus-knot group
// and H_m: the H_m relation for the induced generators and both round trips.
// Throws RelationViolated if the input fails A^m = B^2 within tol.
ToroReport check_toro_isomorphism(unsigned m, const Representation& rep, double tol);

struct MembershipReport {
    unsigned m = 0;
    RepKind kind = RepKind::Abelian;
    std::uint64_t seed = 0;
    cplx X{}, Z{};
    double residual_defining = 0.0;
    double residual_relation = 0.0;           // H_m relation at matrix level
    std::optional<double> parabola_residual;  // abelian: |Z - (X^2 - 2)|
    std::optional<double> nearest_line;       // irreducible: closest line height
    std::optional<double> line_distance;      // irreducible: |Z - nearest|

    std::string to_json() const;
};

// Evaluates the defining polynomial of X(H_m) at the character point of the
// representation.  Throws RelationViolated if the H_m images fail the
// relation within tol.
MembershipReport membership_check(unsigned m, const Representation& rep, double tol);

} // namespace charvar::numeric
