#include "families.hpp"

#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

namespace charvar::families {

using json = nlohmann::json;

namespace {

std::mutex g_cache_mutex;

MPoly rename_from_Z(const MPoly& p, Var v) {
    if (v == Var::Z)
        return p;
    return p.substitute(Var::Z, MPoly::variable(v));
}

// All cached family members are stored in variable Z.  Note the recurrence
// runs on traces (t_0 = 2), while p_0 = 1 is the summation convention: the
// cache holds 1, Z, Z^2 - 2 and recurses from there.
const MPoly& trace_power_cached(unsigned n) {
    static std::vector<MPoly> cache{
        MPoly::constant(1), MPoly::variable(Var::Z),
        MPoly::variable(Var::Z) * MPoly::variable(Var::Z) - MPoly::constant(2)};
    if (n < cache.size())
        return cache[n];
    for (std::size_t k = cache.size(); k <= n; ++k)
        cache.push_back(MPoly::variable(Var::Z) * cache[k - 1] - cache[k - 2]);
    return cache[n];
}

const MPoly& cyclotomic_cached(unsigned n) {
    static std::map<unsigned, MPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    MPoly g;
    if (n == 1) {
        g = MPoly::variable(Var::Z) - MPoly::constant(1);
    } else {
        // T^n - 1 divided by the product over proper divisors.
        MPoly tn_minus_1 =
            MPoly::monomial({0, 0, n}, 1) - MPoly::constant(1);
        MPoly prod = MPoly::constant(1);
        for (unsigned d : divisors(n))
            if (d != n)
                prod *= cyclotomic_cached(d);
        g = exact_div(tn_minus_1, prod, Var::Z);
    }
    return cache.emplace(n, std::move(g)).first->second;
}

// Right-hand side of the q-family defining product for index n, as a
// polynomial in Z: the palindrome (T^(n-1)+...+1)/T^((n-1)/2) for odd n and
// (T^(n-2)+T^(n-4)+...+1)/T^((n-2)/2) for even n.
MPoly q_product_side(unsigned n) {
    std::vector<mpz_class> half;
    if (n % 2 == 1) {
        half.assign((n - 1) / 2 + 1, mpz_class(1));
    } else {
        unsigned top = (n - 2) / 2;
        half.assign(top + 1, mpz_class(0));
        for (unsigned k = top;; k -= 2) {
            half[k] = 1;
            if (k < 2)
                break;
        }
    }
    return palindrome_to_Z(LaurentPalindrome(std::move(half)));
}

const MPoly& half_cyclotomic_recursive_cached(unsigned n) {
    static std::map<unsigned, MPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    MPoly q;
    if (n == 1) {
        q = MPoly::variable(Var::Z) - MPoly::constant(2);
    } else if (n == 2) {
        q = MPoly::variable(Var::Z) + MPoly::constant(2);
    } else {
        MPoly rhs = q_product_side(n);
        MPoly prod = MPoly::constant(1);
        for (unsigned d : divisors(n)) {
            if (d == n || d == 1)
                continue;
            if (n % 2 == 0 && d == 2)
                continue;
            prod *= half_cyclotomic_recursive_cached(d);
        }
        q = exact_div(rhs, prod, Var::Z);
    }
    return cache.emplace(n, std::move(q)).first->second;
}

MPoly half_cyclotomic_via_cyclotomic(unsigned n) {
    if (n <= 2)
        raise(ErrorCode::BadArgument, "via-cyclotomic route requires n > 2");
    const MPoly& g = cyclotomic_cached(n);
    std::vector<mpz_class> coeffs = g.dense_coeffs(Var::Z);
    unsigned s = euler_phi(n) / 2;
    // g_n is self-reciprocal for n > 2; take the upper half of its
    // coefficients as the palindrome.
    std::vector<mpz_class> half(coeffs.begin() + s, coeffs.end());
    return palindrome_to_Z(LaurentPalindrome(std::move(half)));
}

MPoly beta(unsigned k) {
    return (k % 2 == 1) ? MPoly::variable(Var::Z) : MPoly::constant(2);
}

} // namespace

MPoly trace_power_poly(unsigned n, Var v) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return rename_from_Z(trace_power_cached(n), v);
}

std::complex<double> trace_power_value(std::complex<double> t, unsigned n) {
    if (n == 0)
        return 1.0;
    std::complex<double> prev = 2.0, cur = t;
    for (unsigned k = 2; k <= n; ++k) {
        std::complex<double> next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

MPoly cyclotomic(unsigned n, Var v) {
    if (n < 1)
        raise(ErrorCode::BadArgument, "cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return rename_from_Z(cyclotomic_cached(n), v);
}

MPoly half_cyclotomic(unsigned n, QRoute route, Var v) {
    if (n < 1)
        raise(ErrorCode::BadArgument, "half-cyclotomic index must be positive");
    if (route == QRoute::ViaCyclotomic && n <= 2)
        raise(ErrorCode::BadArgument, "via-cyclotomic route requires n > 2");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    MPoly q;
    switch (route) {
    case QRoute::Recursive:
        q = half_cyclotomic_recursive_cached(n);
        break;
    case QRoute::ViaCyclotomic:
        q = half_cyclotomic_via_cyclotomic(n);
        break;
    case QRoute::Both:
        q = half_cyclotomic_recursive_cached(n);
        if (n > 2 && q != half_cyclotomic_via_cyclotomic(n))
            raise(ErrorCode::RouteDisagreement,
                  "recursive and via-cyclotomic constructions of q_" + std::to_string(n) +
                      " disagree");
        break;
    }
    return rename_from_Z(q, v);
}

std::uint64_t generator_count(std::uint64_t n) {
    if (n < 1)
        raise(ErrorCode::BadArgument, "generator count needs n >= 1");
    return n * (n * n + 5) / 6;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; (std::uint64_t)p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; (std::uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::string FamilyReport::to_json() const {
    json j{{"identity", identity},
           {"range", {range_lo, range_hi}},
           {"passed", all_passed}};
    if (first_failure)
        j["first_failure"] = *first_failure;
    else
        j["first_failure"] = nullptr;
    return j.dump();
}

const char* identity_name(FamilyIdentity id) {
    switch (id) {
    case FamilyIdentity::PnFactorization: return "pn_factorization";
    case FamilyIdentity::SumPi: return "sum_pi";
    case FamilyIdentity::AlternatingSum: return "alternating_sum";
    case FamilyIdentity::BetaIdentity: return "beta_identity";
    }
    return "?";
}

FamilyReport verify_family_identity(FamilyIdentity id, unsigned limit) {
    FamilyReport report;
    report.identity = identity_name(id);
    report.range_lo = (id == FamilyIdentity::BetaIdentity) ? 2 : 1;
    report.range_hi = limit;
    report.all_passed = true;

    for (long n = report.range_lo; n <= (long)limit; ++n) {
        bool ok = false;
        switch (id) {
        case FamilyIdentity::PnFactorization: {
            MPoly lhs = trace_power_poly((unsigned)n) - MPoly::constant(2);
            MPoly rhs = half_cyclotomic(1, QRoute::Recursive);
            if (n % 2 == 0)
                rhs *= half_cyclotomic(2, QRoute::Recursive);
            for (unsigned d : divisors((unsigned)n)) {
                if (d == 1 || (n % 2 == 0 && d == 2))
                    continue;
                rhs *= half_cyclotomic(d, QRoute::Recursive).pow(2);
            }
            ok = (lhs == rhs);
            break;
        }
        case FamilyIdentity::SumPi: {
            MPoly lhs;
            for (long i = 0; i <= n; ++i)
                lhs += trace_power_poly((unsigned)i);
            MPoly rhs = MPoly::constant(1);
            for (unsigned d : divisors((unsigned)(2 * n + 1)))
                if (d != 1)
                    rhs *= half_cyclotomic(d, QRoute::Recursive);
            ok = (lhs == rhs);
            break;
        }
        case FamilyIdentity::AlternatingSum: {
            MPoly lhs;
            for (long i = 0; i <= n; ++i) {
                MPoly term = trace_power_poly((unsigned)(n - i));
                lhs += (i % 2 == 0) ? term : -term;
            }
            MPoly rhs = MPoly::constant(1);
            for (unsigned d : divisors((unsigned)(2 * n + 1)))
                if (d != 1)
                    rhs *= star(half_cyclotomic(d, QRoute::Recursive));
            ok = (lhs == rhs);
            break;
        }
        case FamilyIdentity::BetaIdentity: {
            MPoly sum = trace_power_poly((unsigned)n);
            for (long i = 1; i <= n; ++i) {
                MPoly term = beta((unsigned)i) * trace_power_poly((unsigned)(n - i));
                sum += (i % 2 == 0) ? term : -term;
            }
            ok = sum.is_zero();
            break;
        }
        }
        if (!ok) {
            report.all_passed = false;
            report.first_failure = n;
            break;
        }
    }
    return report;
}

FamilyReport verify_q_route_agreement(unsigned max_n) {
    FamilyReport report;
    report.identity = "q_route_agreement";
    report.range_lo = 3;
    report.range_hi = max_n;
    report.all_passed = true;
    for (unsigned n = 3; n <= max_n; ++n) {
        bool ok;
        try {
            MPoly q = half_cyclotomic(n, QRoute::Both);
            ok = (q.degree(Var::Z) == (int)(euler_phi(n) / 2));
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) {
            report.all_passed = false;
            report.first_failure = (long)n;
            break;
        }
    }
    return report;
}

} // namespace charvar::families
