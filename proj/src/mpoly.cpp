#include "mpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace charvar {

using json = nlohmann::json;

const char* var_name(Var v) {
    switch (v) {
    case Var::X: return "X";
    case Var::Y: return "Y";
    case Var::Z: return "Z";
    }
    return "?";
}

MPoly MPoly::constant(mpz_class c) {
    MPoly p;
    p.add_term({0, 0, 0}, c);
    return p;
}

MPoly MPoly::variable(Var v) {
    Exponents e{0, 0, 0};
    e[(int)v] = 1;
    return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& e, mpz_class c) {
    MPoly p;
    p.add_term(e, c);
    return p;
}

void MPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

int MPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, (int)e[(int)v]);
    return d;
}

int MPoly::total_degree() const {
    if (terms_.empty())
        return -1;
    // Graded order: the last term has maximal total degree.
    const Exponents& e = terms_.rbegin()->first;
    return (int)(e[0] + e[1] + e[2]);
}

mpz_class MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

MPoly MPoly::coeff_poly(Var v, unsigned k) const {
    MPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[(int)v] == k) {
            Exponents r = e;
            r[(int)v] = 0;
            out.add_term(r, c);
        }
    }
    return out;
}

int MPoly::variables_used() const {
    int n = 0;
    for (Var v : kAllVars)
        if (uses(v))
            ++n;
    return n;
}

std::optional<Var> MPoly::sole_variable() const {
    std::optional<Var> found;
    for (Var v : kAllVars) {
        if (uses(v)) {
            if (found)
                return std::nullopt;
            found = v;
        }
    }
    return found;
}

std::vector<mpz_class> MPoly::dense_coeffs(Var v) const {
    for (Var w : kAllVars)
        if (w != v && uses(w))
            raise(ErrorCode::NotUnivariate,
                  std::string("polynomial is not univariate in ") + var_name(v));
    std::vector<mpz_class> out((std::size_t)std::max(0, degree(v)) + 1, mpz_class(0));
    for (const auto& [e, c] : terms_)
        out[e[(int)v]] = c;
    return out;
}

mpz_class MPoly::max_abs_coeff() const {
    mpz_class m = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (a > m)
            m = a;
    }
    return m;
}

mpz_class MPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

MPoly MPoly::operator-() const {
    MPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MPoly& MPoly::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result = MPoly::constant(1);
    MPoly base = *this;
    while (k) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
    if (!uses(v))
        return *this;
    int d = degree(v);
    MPoly result = coeff_poly(v, (unsigned)d);
    for (int k = d - 1; k >= 0; --k) {
        result = result * value + coeff_poly(v, (unsigned)k);
    }
    return result;
}

std::complex<double> MPoly::eval(
    const std::array<std::optional<std::complex<double>>, 3>& assignment) const {
    for (Var v : kAllVars)
        if (uses(v) && !assignment[(int)v])
            raise(ErrorCode::MissingAssignment,
                  std::string("no value assigned to ") + var_name(v));

    // Horner in the outermost used variable, recursing on the coefficients.
    for (Var v : kAllVars) {
        if (!uses(v))
            continue;
        int d = degree(v);
        std::complex<double> t = *assignment[(int)v];
        std::complex<double> acc = coeff_poly(v, (unsigned)d).eval(assignment);
        for (int k = d - 1; k >= 0; --k)
            acc = acc * t + coeff_poly(v, (unsigned)k).eval(assignment);
        return acc;
    }
    return terms_.empty() ? 0.0 : terms_.begin()->second.get_d();
}

namespace {

// Minimal double-double arithmetic (error-free transforms via fma).
struct DD {
    double hi = 0.0, lo = 0.0;
};

DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

DD fast_renorm(double hi, double lo) {
    double s = hi + lo;
    double err = lo - (s - hi);
    return {s, err};
}

DD two_prod(double a, double b) {
    double p = a * b;
    double e = std::fma(a, b, -p);
    return {p, e};
}

DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return fast_renorm(s.hi, s.lo + a.lo + b.lo);
}

DD dd_mul_double(DD a, double b) {
    DD p = two_prod(a.hi, b);
    return fast_renorm(p.hi, p.lo + a.lo * b);
}

DD dd_from_mpz(const mpz_class& z) {
    double hi = mpz_get_d(z.get_mpz_t());
    mpz_class rest = z - mpz_class(hi);
    return fast_renorm(hi, mpz_get_d(rest.get_mpz_t()));
}

} // namespace

double MPoly::eval_real_dd(Var v, double t) const {
    std::vector<mpz_class> cs = dense_coeffs(v);
    DD acc;
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = dd_add(dd_mul_double(acc, t), dd_from_mpz(*it));
    return acc.hi;
}

std::string MPoly::to_json() const {
    json terms = json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        terms.push_back({{"e", {it->first[0], it->first[1], it->first[2]}},
                         {"c", it->second.get_str()}});
    }
    json j{{"vars", {"X", "Y", "Z"}}, {"terms", terms}};
    return j.dump();
}

MPoly MPoly::from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        raise(ErrorCode::ParseError, "polynomial JSON is malformed");
    if (!j.contains("vars") || j["vars"] != json{"X", "Y", "Z"})
        raise(ErrorCode::ParseError, "polynomial JSON must declare vars [\"X\",\"Y\",\"Z\"]");
    if (!j.contains("terms") || !j["terms"].is_array())
        raise(ErrorCode::ParseError, "polynomial JSON needs a terms array");
    MPoly p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("e") || !t.contains("c") || !t["e"].is_array() ||
            t["e"].size() != 3 || !t["c"].is_string())
            raise(ErrorCode::ParseError, "polynomial term must be {\"e\":[eX,eY,eZ],\"c\":\"...\"}");
        Exponents e;
        for (int i = 0; i < 3; ++i) {
            if (!t["e"][i].is_number_unsigned())
                raise(ErrorCode::ParseError, "term exponents must be non-negative integers");
            e[i] = t["e"][i].get<unsigned>();
        }
        mpz_class c;
        if (mpz_set_str(c.get_mpz_t(), t["c"].get<std::string>().c_str(), 10) != 0)
            raise(ErrorCode::ParseError, "term coefficient is not a decimal integer");
        if (c == 0)
            raise(ErrorCode::ParseError, "zero coefficients may not be stored");
        if (p.terms_.count(e))
            raise(ErrorCode::ParseError, "duplicate exponent triple in terms");
        p.terms_.emplace(e, c);
    }
    return p;
}

std::string MPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->second;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Exponents& e = it->first;
        bool is_const = (e[0] == 0 && e[1] == 0 && e[2] == 0);
        if (a != 1 || is_const)
            os << a.get_str();
        bool printed_var = false;
        for (Var v : kAllVars) {
            unsigned k = e[(int)v];
            if (k == 0)
                continue;
            if (printed_var || a != 1)
                os << "*";
            os << var_name(v);
            if (k > 1)
                os << "^" << k;
            printed_var = true;
        }
    }
    return os.str();
}

namespace {

// Recursive multivariate long division; vars lists the division order with the
// main variable first.  Throws NotDivisible on the first failed step.
MPoly divide_rec(const MPoly& num, const MPoly& den, const std::vector<Var>& vars, std::size_t vi) {
    if (num.is_zero())
        return MPoly{};
    if (vi == vars.size()) {
        // Both sides are integer constants here.
        mpz_class n = num.constant_term();
        mpz_class d = den.constant_term();
        if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
            raise(ErrorCode::NotDivisible, "constant coefficient division leaves a remainder");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        return MPoly::constant(q);
    }
    Var v = vars[vi];
    int dd = den.degree(v);
    if (dd <= 0) {
        // Divisor free of v: divide coefficient-wise.
        MPoly out;
        int dn = num.degree(v);
        for (int k = 0; k <= dn; ++k) {
            MPoly ck = num.coeff_poly(v, (unsigned)k);
            if (ck.is_zero())
                continue;
            MPoly qk = divide_rec(ck, den, vars, vi + 1);
            Exponents e{0, 0, 0};
            e[(int)v] = (unsigned)k;
            out += qk * MPoly::monomial(e, 1);
        }
        return out;
    }
    MPoly lead_den = den.coeff_poly(v, (unsigned)dd);
    MPoly rem = num;
    MPoly quot;
    while (!rem.is_zero()) {
        int dr = rem.degree(v);
        if (dr < dd)
            raise(ErrorCode::NotDivisible, "nonzero remainder in polynomial division");
        MPoly lead_rem = rem.coeff_poly(v, (unsigned)dr);
        MPoly t = divide_rec(lead_rem, lead_den, vars, vi + 1);
        Exponents e{0, 0, 0};
        e[(int)v] = (unsigned)(dr - dd);
        MPoly term = t * MPoly::monomial(e, 1);
        quot += term;
        rem -= term * den;
        if (rem.degree(v) == dr && !rem.is_zero())
            raise(ErrorCode::NotDivisible, "leading term failed to cancel");
    }
    return quot;
}

} // namespace

MPoly exact_div(const MPoly& num, const MPoly& den, Var main_var) {
    if (den.is_zero())
        raise(ErrorCode::ZeroDivisor, "division by the zero polynomial");
    std::vector<Var> order{main_var};
    for (Var v : kAllVars)
        if (v != main_var)
            order.push_back(v);
    return divide_rec(num, den, order, 0);
}

MPoly star(const MPoly& p) {
    if (p.variables_used() > 1)
        raise(ErrorCode::NotUnivariate, "star is defined for univariate polynomials");
    if (p.is_constant())
        return p;
    Var v = *p.sole_variable();
    unsigned n = (unsigned)p.degree(v);
    MPoly out;
    for (const auto& [e, c] : p.terms()) {
        unsigned i = e[(int)v];
        out.add_term(e, ((n - i) % 2 == 0) ? c : mpz_class(-c));
    }
    return out;
}

LaurentPalindrome::LaurentPalindrome(std::vector<mpz_class> half) : half_(std::move(half)) {
    while (!half_.empty() && half_.back() == 0)
        half_.pop_back();
    // Normalize a lone zero constant away so that zero has an empty sequence.
}

MPoly palindrome_to_Z(const LaurentPalindrome& lp, Var v) {
    const auto& a = lp.half_coeffs();
    if (a.empty())
        return MPoly{};
    MPoly result = MPoly::constant(a[0]);
    // basis c_k(v) with T^k + T^-k = c_k(T + 1/T):
    //   c_1 = v, c_2 = v^2 - 2, c_k = v*c_{k-1} - c_{k-2}, c_0 = 2.
    MPoly prev = MPoly::constant(2);
    MPoly cur = MPoly::variable(v);
    for (std::size_t k = 1; k < a.size(); ++k) {
        if (a[k] != 0)
            result += cur * a[k];
        MPoly next = MPoly::variable(v) * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return result;
}

} // namespace charvar
