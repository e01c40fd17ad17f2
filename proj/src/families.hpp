#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpoly.hpp"

namespace charvar::families {

// p_n: the monic degree-n family with p_n(tr M) = tr(M^n) on SL(2,C),
// generated by p_1 = T, p_2 = T^2 - 2, p_n = T p_{n-1} - p_{n-2}, p_0 = 1.
MPoly trace_power_poly(unsigned n, Var v = Var::Z);

// Numerically stable evaluation of p_n at a complex point via the same
// three-term recurrence (the expanded-coefficient form is ill conditioned
// near t = +/-2 for large n).
std::complex<double> trace_power_value(std::complex<double> t, unsigned n);

// n-th cyclotomic polynomial, computed by exact division of T^n - 1 by the
// cyclotomic polynomials of the proper divisors.
MPoly cyclotomic(unsigned n, Var v = Var::Z);

enum class QRoute { Recursive, ViaCyclotomic, Both };

// q_n: q_1 = T - 2, q_2 = T + 2, and for n > 2 the polynomial with
// g_n(T) = T^(phi(n)/2) q_n(T + 1/T).  Route Recursive builds the divisor
// product side as a Laurent palindrome and divides out the smaller q_d;
// route ViaCyclotomic reads q_n off the palindromic coefficients of g_n
// (requires n > 2).  Route Both computes both and throws RouteDisagreement
// if they differ.
MPoly half_cyclotomic(unsigned n, QRoute route = QRoute::Both, Var v = Var::Z);

// Size of the standard trace-function generating set for n generators:
// n(n^2+5)/6, always an integer.
std::uint64_t generator_count(std::uint64_t n);

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

struct FamilyReport {
    std::string identity;
    long range_lo = 0;
    long range_hi = 0;
    bool all_passed = false;
    std::optional<long> first_failure;

    // {"identity":"...","range":[lo,hi],"passed":bool,"first_failure":n|null}
    std::string to_json() const;
};

enum class FamilyIdentity {
    PnFactorization, // p_n - 2 = q_1 prod q_d^2 (odd) / q_1 q_2 prod q_d^2 (even)
    SumPi,           // sum_{i<=s} p_i = prod_{1!=d|2s+1} q_d
    AlternatingSum,  // sum (-1)^i p_{s-i} = prod_{1!=d|2s+1} q_d*
    BetaIdentity,    // p_s + sum (-1)^i beta_i p_{s-i} = 0
};

const char* identity_name(FamilyIdentity id);

// Checks the identity by exact coefficient comparison for every index in
// [1, limit] ([2, limit] for BetaIdentity); failures are reported, not thrown.
FamilyReport verify_family_identity(FamilyIdentity id, unsigned limit);

// Recursive vs via-cyclotomic construction of q_n for 3 <= n <= max_n,
// plus the degree check deg q_n = phi(n)/2.
FamilyReport verify_q_route_agreement(unsigned max_n);

} // namespace charvar::families
