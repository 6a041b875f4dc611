#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tconf/bounds.hpp"
#include "tconf/oracle.hpp"
#include "tconf/polya.hpp"
#include "tconf/verify.hpp"

using namespace tconf;

TEST_CASE("enumerated law: hand instances") {
    const ExactLaw law12 = enumerate_law(1, 2);
    CHECK(law12.pmf.at({1, 1}) == Rational(1, 3));
    CHECK(law12.pmf.at({2, 2}) == Rational(1, 3));
    CHECK(law12.pmf.at({1, 2}) == Rational(1, 6));

    const ExactLaw law21 = enumerate_law(2, 1);
    for (int j = 1; j <= 3; ++j) CHECK(law21.pmf.at({j}) == Rational(1, 3));

    Rational total = 0;
    for (const auto& [traj, prob] : law12.pmf) total += prob;
    CHECK(total == 1);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(enumerate_law(5, 5), std::invalid_argument);
    CHECK_NOTHROW(enumerate_law(5, 5, 10));
    CHECK_THROWS_AS(enumerate_law(6, 6, 12), std::invalid_argument);  // hard cap 11
    CHECK_THROWS_AS(exact_order_statistic_cdf(13, 13, 1, 1), std::invalid_argument);
}

TEST_CASE("sup-deviation law for n = m = 1") {
    const auto law = exact_sup_deviation_law(1, 1);
    CHECK(law.size() == 2);
    CHECK(law.at(Rational(0)) == Rational(1, 2));
    CHECK(law.at(Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("sup-deviation law is a probability law dominated by the analytic tail") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; n + m <= 7; ++m) {
            const auto law = exact_sup_deviation_law(n, m);
            Rational total = 0;
            for (const auto& [dev, prob] : law) total += prob;
            CHECK(total == 1);
        }
    }
}

TEST_CASE("order-statistic cdf: boundary values") {
    CHECK(exact_order_statistic_cdf(3, 2, 1, 4) == 1);  // p_(1) <= 1 always
    CHECK(exact_order_statistic_cdf(3, 2, 2, 0) == 0);  // p_(m) <= 0 never
    CHECK_THROWS_AS(exact_order_statistic_cdf(3, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("pattern enumeration agrees with the permutation law") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; n + m <= 6; ++m) {
            const ExactLaw law = enumerate_law(n, m);
            for (int k = 1; k <= m; ++k) {
                for (int l = 0; l <= n + 1; ++l) {
                    Rational from_perm = 0;
                    for (const auto& [traj, prob] : law.pmf) {
                        int small = 0;
                        for (int r : traj)
                            if (r <= l) ++small;
                        if (small >= k) from_perm += prob;
                    }
                    CHECK(from_perm == exact_order_statistic_cdf(n, m, k, l));
                }
            }
        }
    }
}

TEST_CASE("count law sums to one and matches the closed form at n = m = 6") {
    const PolyaLaw law(6, 6);
    for (double alpha : {0.1, 0.3, 0.5, 0.9}) {
        const int l = static_cast<int>(alpha * 7);  // all four are off-grid for n+1 = 7
        const auto counts = exact_ecdf_count_law(6, 6, l);
        Rational total = 0;
        for (int k = 0; k <= 6; ++k) {
            total += counts[static_cast<std::size_t>(k)];
            CHECK(counts[static_cast<std::size_t>(k)] == ecdf_count_pmf_exact(law, alpha, k));
        }
        CHECK(total == 1);
    }
}

TEST_CASE("analytic tail bound dominates the exact deviation tail") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; n + m <= 8; ++m) {
            const auto law = exact_sup_deviation_law(n, m);
            for (double lam = 0.05; lam < 1.0; lam += 0.05) {
                Rational tail = 0;
                for (const auto& [dev, prob] : law)
                    if (to_double(dev) > lam) tail += prob;
                CHECK(to_double(tail) <= b_dkw(lam, n, m) + 1e-12);
            }
        }
    }
}

TEST_CASE("exact deviation tail matches the urn Monte Carlo") {
    const int n = 3, m = 4, reps = 20000;
    const auto law = exact_sup_deviation_law(n, m);
    const PolyaLaw polya(n, m);
    for (double lam : {0.1, 0.3, 0.5}) {
        Rational exact_tail = 0;
        for (const auto& [dev, prob] : law)
            if (to_double(dev) > lam) exact_tail += prob;
        long over = 0;
        for (const PValueSet& pv : sample_urn(polya, 808, reps))
            if (to_double(sup_deviation(ecdf(pv))) > lam) ++over;
        const double p = to_double(exact_tail);
        CHECK(std::fabs(static_cast<double>(over) / reps - p) <=
              4.0 * std::sqrt(std::max(p, 1e-3) * (1 - std::max(p, 1e-3)) / reps) + 4e-3);
    }
}

TEST_CASE("verification suite passes and the perturbation hook trips it") {
    const auto results = run_oracle_suite(6);
    for (const auto& r : results) {
        INFO(r.name << " " << r.detail);
        CHECK(r.pass);
        CHECK(r.instances > 0);
    }
    const auto perturbed = check_joint_law_equivalence(4, 1e-9);
    CHECK_FALSE(perturbed.pass);
}
