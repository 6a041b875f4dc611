#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tconf/gridmath.hpp"
#include "tconf/polya.hpp"
#include "tconf/templates.hpp"

using namespace tconf;

TEST_CASE("linear template: thresholds and inverses") {
    const Template lin = linear_template(8);
    CHECK(lin.k_set.size() == 8);
    CHECK(lin.threshold(8, 1.0) == 1.0);
    CHECK(lin.inverse(1, 1.0 / 8) == doctest::Approx(1.0));
    CHECK(lin.inverse(3, lin.threshold(3, 0.37)) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK_THROWS_AS(linear_template(4, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(linear_template(4, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(linear_template(4, {5}), std::invalid_argument);
}

TEST_CASE("beta template: uniform case, monotonicity in k, round trips") {
    const Template unit = beta_template(1);
    CHECK(unit.k_set == std::vector<int>{1});
    for (double lam : {0.05, 0.3, 0.9})
        CHECK(unit.threshold(1, lam) == doctest::Approx(lam).epsilon(1e-9));

    const Template tmpl = beta_template(30);
    for (double lam : {0.1, 0.5, 0.9}) {
        double prev = -1.0;
        for (int k = 1; k <= 30; ++k) {
            const double t = tmpl.threshold(k, lam);
            CHECK(t > prev);
            prev = t;
        }
    }
    for (int k : tmpl.k_set) {
        for (double lam = 0.01; lam < 1.0; lam += 0.07) {
            CHECK(tmpl.inverse(k, tmpl.threshold(k, lam)) ==
                  doctest::Approx(lam).epsilon(1e-8));
        }
    }
}

TEST_CASE("default beta index set is log-spaced within {1..m}") {
    CHECK(default_beta_k_set(1) == std::vector<int>{1});
    const auto k50 = default_beta_k_set(50);  // ceil(log 50) = 4
    CHECK(k50.front() == 5);
    for (std::size_t i = 1; i < k50.size(); ++i) CHECK(k50[i] - k50[i - 1] == 4);
    CHECK(k50.back() <= 50);
}

TEST_CASE("calibration on the two-atom law matches the hand computation") {
    const PolyaLaw law(1, 1);
    const Template lin = linear_template(1);
    // p is uniform on {1/2, 1}; the statistic equals p, candidates {1/2, 1}.
    const CalibratedEnvelope loose = calibrate_template(law, lin, 0.6, 5, 20000);
    CHECK(loose.lambda_star == 0.5);
    CHECK_FALSE(loose.vacuous);
    CHECK(loose.thresholds == std::vector<double>{0.5});

    const CalibratedEnvelope tight = calibrate_template(law, lin, 0.01, 5, 20000);
    CHECK(tight.lambda_star == 0.0);
    CHECK(tight.vacuous);

    CHECK_THROWS_AS(calibrate_template(law, lin, 0.6, 5, 100), std::invalid_argument);
}

TEST_CASE("lambda_star is nondecreasing in delta for a fixed sample") {
    const PolyaLaw law(10, 10);
    const Template lin = linear_template(10);
    double prev = -1.0;
    for (double delta : {0.05, 0.1, 0.2, 0.4, 0.6}) {
        const double lam = calibrate_template(law, lin, delta, 42, 20000).lambda_star;
        CHECK(lam >= prev);
        prev = lam;
    }
}

TEST_CASE("calibrated envelopes hold on fresh samples (reduced replicates)") {
    const PolyaLaw law(20, 20);
    const double delta = 0.2;
    const int calib_reps = 20000, fresh_reps = 5000;
    for (const Template& tmpl : {linear_template(20), beta_template(20)}) {
        const CalibratedEnvelope env = calibrate_template(law, tmpl, delta, 7, calib_reps);
        REQUIRE_FALSE(env.vacuous);
        int violations = 0;
        for (const PValueSet& pv : sample_urn(law, 1007, fresh_reps)) {
            const EcdfStep e = ecdf(pv);
            bool bad = false;
            for (std::size_t i = 0; i < tmpl.k_set.size(); ++i) {
                // F(t_k) <= k/m with equal m on both sides: count <= k
                if (e.count_at(grid_floor_index(env.thresholds[i], law.n)) > tmpl.k_set[i]) {
                    bad = true;
                    break;
                }
            }
            violations += bad;
        }
        CHECK(static_cast<double>(violations) / fresh_reps <=
              delta + 4.0 * std::sqrt(delta * (1 - delta) / fresh_reps));
    }
}

TEST_CASE("envelope event equals the order-statistic event; k-form implies it") {
    const PolyaLaw law(6, 8);
    const Template lin = linear_template(8);
    const CalibratedEnvelope env = calibrate_template(law, lin, 0.3, 11, 5000);
    for (const PValueSet& pv : sample_urn(law, 2048, 2000)) {
        std::vector<int> sorted(pv.ranks);
        std::sort(sorted.begin(), sorted.end());
        const EcdfStep e = ecdf(pv);

        bool envelope_event = true;   // all k: F(t_k(lambda*)) <= k/m
        bool order_event = true;      // all k: p_(k+1) > t_k(lambda*)
        bool k_form_event = true;     // all k: p_(k) > t_k(lambda*)
        for (std::size_t i = 0; i < lin.k_set.size(); ++i) {
            const int k = lin.k_set[i];
            // same grid cell on all three sides keeps the identity exact
            const int l = grid_floor_index(env.thresholds[i], law.n);
            if (e.count_at(l) > k) envelope_event = false;
            const int rank_k1 =
                k + 1 <= lin.m ? sorted[static_cast<std::size_t>(k)] : law.n + 2;
            if (!(rank_k1 > l)) order_event = false;
            if (!(sorted[static_cast<std::size_t>(k) - 1] > l)) k_form_event = false;
        }
        CHECK(envelope_event == order_event);
        if (k_form_event) CHECK(envelope_event);
    }
}

TEST_CASE("the k+1 index convention calibrates at least as high as the k form") {
    const PolyaLaw law(12, 12);
    const Template lin = linear_template(12);
    const double k_form =
        calibrate_template(law, lin, 0.2, 3, 20000, CalibrationIndex::kth).lambda_star;
    const double k1_form =
        calibrate_template(law, lin, 0.2, 3, 20000, CalibrationIndex::kth_plus_one).lambda_star;
    CHECK(k1_form >= k_form);
}
