// Acceptance suite: every check this project promises, run end to end with
// pinned ranges and tolerances.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.  argv[1] is the path of the charvar CLI binary
// (used by the CLI contract criterion; that criterion fails if it is absent).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "families.hpp"
#include "mpoly.hpp"
#include "numeric.hpp"
#include "variety.hpp"
#include "words.hpp"

using namespace charvar;
using json = nlohmann::json;

namespace {

std::string g_cli_path;

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
};

bool approx_distinct_sorted(const std::vector<double>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] < v[i + 1]))
            return false;
    return true;
}

// ---- criterion bodies ----------------------------------------------------

bool main_theorem_chain(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    for (unsigned m = 3; m <= 99; m += 2) {
        if (variety::f_direct((m - 1) / 2) != variety::closed_form(m)) {
            detail = "mismatch at m = " + std::to_string(m);
            return false;
        }
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= 10.0) {
        detail = "took " + std::to_string(elapsed) + " s (budget 10 s)";
        return false;
    }
    return true;
}

bool trace_route(std::string& detail) {
    for (unsigned m = 3; m <= 17; m += 2) {
        MPoly traced = words::f_trace(m).f.substitute(Var::Y, MPoly::variable(Var::X));
        if (traced != variety::f_direct((m - 1) / 2)) {
            detail = "mismatch at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool presentation_identities(std::string& detail) {
    MPoly x_minus_y = MPoly::variable(Var::X) - MPoly::variable(Var::Y);
    for (unsigned m = 3; m <= 17; m += 2) {
        words::HmPresentation pres = words::h_m_presentation(m);
        if (pres.p2 != x_minus_y) {
            detail = "p2 != X - Y at m = " + std::to_string(m);
            return false;
        }
        if (pres.p1 != MPoly::variable(Var::X) * pres.p0 + x_minus_y) {
            detail = "p1 != X p0 + X - Y at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool relator_divisibility(std::string& detail) {
    for (unsigned m = 3; m <= 13; m += 2) {
        MPoly p0_xx =
            words::h_m_presentation(m).p0.substitute(Var::Y, MPoly::variable(Var::X));
        try {
            exact_div(p0_xx, variety::f_direct((m - 1) / 2), Var::X);
        } catch (const Error&) {
            detail = "f does not divide p0(X,X,Z) at m = " + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool report_criterion(families::FamilyReport report, std::string& detail) {
    if (!report.all_passed) {
        detail = report.identity + " first failure at " +
                 std::to_string(report.first_failure.value_or(-1));
        return false;
    }
    return true;
}

bool factorization_identity(std::string& detail) {
    return report_criterion(
        families::verify_family_identity(families::FamilyIdentity::PnFactorization, 200),
        detail);
}

bool prop_identities(std::string& detail) {
    return report_criterion(
               families::verify_family_identity(families::FamilyIdentity::AlternatingSum, 100),
               detail) &&
           report_criterion(
               families::verify_family_identity(families::FamilyIdentity::SumPi, 100), detail);
}

bool beta_identity(std::string& detail) {
    return report_criterion(
        families::verify_family_identity(families::FamilyIdentity::BetaIdentity, 200), detail);
}

bool star_involution(std::string& detail) {
    std::mt19937_64 rng(0x5741525354ULL);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> deg(0, 30);
    MPoly prev;
    bool have_prev = false;
    for (int i = 0; i < 500; ++i) {
        MPoly g;
        unsigned d = deg(rng);
        for (unsigned k = 0; k <= d; ++k)
            g.add_term({0, 0, k}, coeff(rng));
        if (star(star(g)) != g) {
            detail = "g** != g at draw " + std::to_string(i);
            return false;
        }
        if (have_prev && star(g * prev) != star(g) * star(prev)) {
            detail = "(gh)* != g*h* at draw " + std::to_string(i);
            return false;
        }
        prev = g;
        have_prev = true;
    }
    return true;
}

bool q_route_agreement(std::string& detail) {
    return report_criterion(families::verify_q_route_agreement(300), detail);
}

bool root_lemma(std::string& detail) {
    for (unsigned r = 1; r <= 100; ++r) {
        MPoly qr = families::half_cyclotomic(r, families::QRoute::Recursive);
        for (unsigned k = 1; k <= r; ++k) {
            if (std::gcd(k, r) != 1)
                continue;
            double point = 2.0 * std::cos(2.0 * std::numbers::pi * (double)k / (double)r);
            double residual = variety::scaled_root_residual(qr, Var::Z, point);
            if (residual > 1e-9) {
                detail = "q_" + std::to_string(r) + " residual " + std::to_string(residual) +
                         " at k = " + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool line_structure(std::string& detail) {
    for (unsigned m = 3; m <= 99; m += 2) {
        std::vector<double> levels = variety::line_levels(m);
        if (levels.size() != (m - 1) / 2 || !approx_distinct_sorted(levels)) {
            detail = "bad level set at m = " + std::to_string(m);
            return false;
        }
        MPoly factor = variety::line_factor(m);
        for (double level : levels) {
            double residual = variety::scaled_root_residual(factor, Var::Z, level);
            if (residual > 1e-9) {
                detail = "residual " + std::to_string(residual) + " at m = " +
                         std::to_string(m);
                return false;
            }
        }
    }
    return true;
}

bool numeric_membership(std::string& detail) {
    using namespace charvar::numeric;
    for (unsigned m = 3; m <= 15; m += 2) {
        for (RepKind kind : {RepKind::Abelian, RepKind::IrreducibleCandidate}) {
            for (unsigned i = 0; i < 1000; ++i) {
                std::uint64_t seed = 1000000ULL * m + i;
                MembershipReport report =
                    membership_check(m, sample_representation(m, kind, seed), 1e-6);
                if (report.residual_defining > 1e-6) {
                    detail = "defining residual " + std::to_string(report.residual_defining) +
                             " (m = " + std::to_string(m) + ", seed = " + std::to_string(seed) +
                             ")";
                    return false;
                }
                if (report.parabola_residual && *report.parabola_residual > 1e-9) {
                    detail = "parabola residual " + std::to_string(*report.parabola_residual) +
                             " (m = " + std::to_string(m) + ", seed = " + std::to_string(seed) +
                             ")";
                    return false;
                }
                if (report.line_distance && *report.line_distance > 1e-6) {
                    detail = "line distance " + std::to_string(*report.line_distance) +
                             " (m = " + std::to_string(m) + ", seed = " + std::to_string(seed) +
                             ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool toro_isomorphism(std::string& detail) {
    using namespace charvar::numeric;
    for (unsigned m = 3; m <= 15; m += 2) {
        for (RepKind kind : {RepKind::Abelian, RepKind::IrreducibleCandidate}) {
            for (unsigned i = 0; i < 1000; ++i) {
                std::uint64_t seed = 2000000ULL * m + i;
                ToroReport report =
                    check_toro_isomorphism(m, sample_representation(m, kind, seed), 1e-9);
                if (report.max_residual() > 1e-9) {
                    detail = "residual " + std::to_string(report.max_residual()) + " (m = " +
                             std::to_string(m) + ", kind = " + kind_name(kind) +
                             ", seed = " + std::to_string(seed) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool power_trace_remark(std::string& detail) {
    using namespace charvar::numeric;
    std::mt19937_64 rng(0x503050ULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        cplx a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
        if (std::abs(a) < 0.3) {
            --i;
            continue;
        }
        Mat2 M{a, b, c, (1.0 + b * c) / a};
        for (unsigned n = 1; n <= 50; ++n) {
            double residual = power_trace_check(M, n);
            if (residual > 1e-8) {
                detail = "residual " + std::to_string(residual) + " at draw " +
                         std::to_string(i) + ", n = " + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

int run_cli(const std::string& args) {
    std::string command = g_cli_path + " " + args + " > /dev/null 2>&1";
    int status = std::system(command.c_str());
    if (status == -1)
        return -1;
    return WEXITSTATUS(status);
}

bool cli_contract(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no CLI path given (argv[1])";
        return false;
    }
    int code = run_cli("verify all --max-m 99");
    if (code != 0) {
        detail = "verify all --max-m 99 exited " + std::to_string(code) + " (want 0)";
        return false;
    }

    // A fixture of correct q_n passes; corrupting any single coefficient of
    // any entry must flip the exit code to 1.
    json fixture{{"q", json::object()}};
    for (unsigned n : {3u, 5u, 9u, 15u})
        fixture["q"][std::to_string(n)] =
            json::parse(families::half_cyclotomic(n).to_json());

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path good = dir / "charvar_fixture_good.json";
    std::ofstream(good) << fixture.dump();
    code = run_cli("verify all --max-m 9 --max-n 20 --fixture " + good.string());
    if (code != 0) {
        detail = "correct fixture exited " + std::to_string(code) + " (want 0)";
        return false;
    }

    int variant = 0;
    for (const auto& [key, poly] : fixture["q"].items()) {
        for (std::size_t t = 0; t < poly["terms"].size(); ++t) {
            json corrupted = fixture;
            mpz_class c(poly["terms"][t]["c"].get<std::string>());
            // nudge to a different valid value (zero coefficients are not
            // representable in the schema)
            mpz_class wrong = (c == -1) ? c + 2 : c + 1;
            corrupted["q"][key]["terms"][t]["c"] = wrong.get_str();
            fs::path bad = dir / ("charvar_fixture_bad_" + std::to_string(variant++) + ".json");
            std::ofstream(bad) << corrupted.dump();
            code = run_cli("verify all --max-m 9 --max-n 20 --fixture " + bad.string());
            fs::remove(bad);
            if (code != 1) {
                detail = "corrupted q_" + std::string(key) + " term " + std::to_string(t) +
                         " exited " + std::to_string(code) + " (want 1)";
                return false;
            }
        }
    }
    fs::remove(good);

    if (int usage = run_cli("verify nonsense"); usage != 2) {
        detail = "usage error exited " + std::to_string(usage) + " (want 2)";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli_path = argv[1];

    std::vector<Criterion> criteria{
        {1, "f_direct((m-1)/2) equals closed_form(m) exactly, odd m in [3,99], under 10 s",
         main_theorem_chain},
        {2, "f_trace(m) at Y = X equals f_direct((m-1)/2), odd m in [3,17]", trace_route},
        {3, "p2 = X - Y and p1 = X p0 + X - Y exactly, odd m in [3,17]",
         presentation_identities},
        {4, "f_direct((m-1)/2) divides p0(X,X,Z) exactly, odd m in [3,13]",
         relator_divisibility},
        {5, "p_n - 2 factors through q_1 (q_2) prod q_d^2, 1 <= n <= 200",
         factorization_identity},
        {6, "alternating p sum equals prod q_d* and plain sum equals prod q_d, 1 <= s <= 100",
         prop_identities},
        {7, "p_s + sum (-1)^i beta_i p_{s-i} = 0, 2 <= s <= 200", beta_identity},
        {8, "g** = g and (gh)* = g* h* on 500 random polynomials of degree <= 30",
         star_involution},
        {9, "recursive and via-cyclotomic q_n agree with deg = phi(n)/2, 3 <= n <= 300",
         q_route_agreement},
        {10, "q_r(2cos(2 pi k/r)) scaled residual <= 1e-9 for r <= 100, gcd(k,r) = 1",
         root_lemma},
        {11, "(m-1)/2 distinct line levels, each a <= 1e-9 root of prod q_d*, odd m <= 99",
         line_structure},
        {12, "1000 samples per kind per odd m <= 15: defining <= 1e-6, parabola <= 1e-9, "
             "line distance <= 1e-6",
         numeric_membership},
        {13, "isomorphism relation and round trips <= 1e-9 over all samples, odd m <= 15",
         toro_isomorphism},
        {14, "p_n(tr M) vs tr(M^n) residual <= 1e-8, 500 random matrices, n <= 50",
         power_trace_remark},
        {15, "CLI: verify all --max-m 99 exits 0; any corrupted fixture coefficient exits 1",
         cli_contract},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.description.c_str(), elapsed,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
