#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace charvar {

// The fixed, ordered variable set of the whole toolkit.
enum class Var : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Var, 3> kAllVars{Var::X, Var::Y, Var::Z};

const char* var_name(Var v);

using Exponents = std::array<unsigned, 3>;

// Graded lexicographic order (total degree first, then X before Y before Z).
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = a[0] + a[1] + a[2];
        unsigned db = b[0] + b[1] + b[2];
        if (da != db)
            return da < db;
        for (int i = 0; i < 3; ++i)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }
};

// Sparse multivariate polynomial in (X, Y, Z) with arbitrary-precision
// integer coefficients.  The term map never stores a zero coefficient, so
// equality of term maps is equality of polynomials.
class MPoly {
public:
    using TermMap = std::map<Exponents, mpz_class, GrlexLess>;

    MPoly() = default;

    static MPoly constant(mpz_class c);
    static MPoly constant(long c) { return constant(mpz_class(c)); }
    static MPoly variable(Var v);
    static MPoly monomial(const Exponents& e, mpz_class c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Degree conventions: the zero polynomial reports -1 everywhere.
    int degree(Var v) const;
    int total_degree() const;

    mpz_class coeff(const Exponents& e) const;
    mpz_class constant_term() const { return coeff({0, 0, 0}); }

    // Coefficient of v^k, a polynomial in the remaining variables.
    MPoly coeff_poly(Var v, unsigned k) const;
    MPoly leading_coeff(Var v) const { return coeff_poly(v, (unsigned)std::max(0, degree(v))); }

    // Number of distinct variables with positive degree.
    int variables_used() const;
    bool uses(Var v) const { return degree(v) > 0; }
    // The single variable of a non-constant univariate polynomial.
    std::optional<Var> sole_variable() const;

    // Dense coefficient list c_0..c_d of a polynomial univariate in v
    // (constants allowed).  Throws NotUnivariate otherwise.
    std::vector<mpz_class> dense_coeffs(Var v) const;

    mpz_class max_abs_coeff() const;
    mpz_class content() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    MPoly& operator*=(const mpz_class& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const mpz_class& c) { return a *= c; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(unsigned k) const;

    // Polynomial composition: substitute `value` for v (Horner in v).
    MPoly substitute(Var v, const MPoly& value) const;

    // Horner evaluation over the complex numbers; every variable occurring
    // in the polynomial must have an assignment (MissingAssignment).
    std::complex<double> eval(const std::array<std::optional<std::complex<double>>, 3>& assignment) const;

    // Compensated (double-double) Horner evaluation at a real point, for a
    // polynomial univariate in v.  Used for root-residual checks where the
    // plain double evaluation of high-degree expanded polynomials loses too
    // much to cancellation.
    double eval_real_dd(Var v, double t) const;

    // Shared polynomial JSON schema:
    //   {"vars":["X","Y","Z"],"terms":[{"e":[eX,eY,eZ],"c":"<decimal>"}]}
    // with terms in descending graded-lex order and decimal-string
    // coefficients.
    std::string to_json() const;
    static MPoly from_json(const std::string& text);

    std::string to_string() const;

    void add_term(const Exponents& e, const mpz_class& c);

private:
    TermMap terms_;
};

// Exact division in Z[X,Y,Z], treating `main_var` as the outermost variable
// and recursing on the remaining ones for leading-coefficient division.
// Throws NotDivisible as soon as any coefficient division fails, and
// ZeroDivisor for a zero divisor.
MPoly exact_div(const MPoly& num, const MPoly& den, Var main_var);

// The coefficient-sign involution g*(T) = sum (-1)^(n-i) a_i T^i, where n is
// the exact degree of g.  Defined for univariate (or constant) input only.
MPoly star(const MPoly& p);

// A palindromic Laurent polynomial a_0 + sum_{k>=1} a_k (T^k + T^-k), stored
// by its half coefficient sequence (a_0, ..., a_d) with a_d != 0 unless the
// value is zero.
class LaurentPalindrome {
public:
    LaurentPalindrome() = default;
    explicit LaurentPalindrome(std::vector<mpz_class> half);

    const std::vector<mpz_class>& half_coeffs() const { return half_; }
    bool is_zero() const { return half_.empty(); }
    int top_index() const { return (int)half_.size() - 1; }

    friend bool operator==(const LaurentPalindrome& a, const LaurentPalindrome& b) {
        return a.half_ == b.half_;
    }

private:
    std::vector<mpz_class> half_;
};

// Change of variable T + 1/T -> v: maps the palindrome to
// a_0 + sum_{k>=1} a_k p_k(v), the unique ordinary polynomial of degree d
// that agrees with it under v = T + 1/T.
MPoly palindrome_to_Z(const LaurentPalindrome& lp, Var v = Var::Z);

} // namespace charvar
