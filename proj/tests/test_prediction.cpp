#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "tconf/oracle.hpp"
#include "tconf/prediction.hpp"

using namespace tconf;

TEST_CASE("band construction: radius is the right order statistic") {
    const std::vector<double> cal{1, 2, 3};
    const PredictionBand b = build_band(cal, {0.0}, 0.5);  // ceil(4*0.5) = 2
    CHECK(b.radius == 2.0);
    CHECK(b.alpha_effective == 0.5);

    CHECK(build_band(cal, {0.0}, 0.2).radius == std::numeric_limits<double>::infinity());
    CHECK(build_band(cal, {0.0}, 0.0).radius == std::numeric_limits<double>::infinity());
    CHECK(build_band(cal, {0.0}, 1.0).radius == -std::numeric_limits<double>::infinity());
    CHECK(build_band(cal, {0.0}, 0.8).radius == 1.0);  // ceil(4*0.2) = 1
    CHECK_THROWS_AS(build_band(cal, {0.0}, 1.2), std::invalid_argument);
}

TEST_CASE("fcp counts outcomes outside the intervals") {
    const std::vector<double> cal{1, 2, 3};
    PredictionBand all = build_band(cal, {0, 0, 0}, 0.1);
    CHECK(fcp(all, {100, -100, 0}) == 0);

    PredictionBand none = build_band(cal, {0, 0, 0}, 1.0);
    CHECK(fcp(none, {0.0, 0.0, 0.0}) == 1);

    PredictionBand mid = build_band(cal, {0, 0, 0}, 0.5);  // radius 2
    CHECK(fcp(mid, {1.0, 2.5, -3.0}) == Rational(2, 3));
    CHECK_THROWS_AS(fcp(mid, {1.0}), std::invalid_argument);
}

TEST_CASE("coverage indicator equals the p-value indicator on every grid level") {
    Rng rng(314);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 7, m = 5;
        std::vector<double> cal_scores, centers, outcomes;
        for (int i = 0; i < n; ++i) cal_scores.push_back(std::fabs(rng.normal()));
        for (int i = 0; i < m; ++i) {
            centers.push_back(rng.normal());
            outcomes.push_back(centers.back() + rng.normal());
        }
        ScoreSet scores;
        scores.calibration = cal_scores;
        for (int i = 0; i < m; ++i)
            scores.test.push_back(std::fabs(outcomes[static_cast<std::size_t>(i)] -
                                            centers[static_cast<std::size_t>(i)]));
        const PValueSet pv = conformal_pvalues(scores);

        for (int l = 0; l <= n + 1; ++l) {
            const double alpha = static_cast<double>(l) / (n + 1);
            const PredictionBand band = build_band(cal_scores, centers, alpha);
            for (int i = 0; i < m; ++i) {
                const bool outside = !band.covers(i, outcomes[static_cast<std::size_t>(i)]);
                const bool small_p = pv.ranks[static_cast<std::size_t>(i)] <= l;
                CHECK(outside == small_p);
            }
        }
    }
}

TEST_CASE("fcp bounds: indicator region and composition with lambda") {
    const DkwParams params(75, 75, 0.2);
    CHECK(fcp_bound_dkw(0.001, params) == 0.0);
    CHECK(fcp_bound_dkw(0.3, params) == doctest::Approx(0.3 + lambda_dkw(params)));
    CHECK(fcp_bound_simes(0.001, 0.2, 75) == 0.0);
    CHECK(fcp_bound_simes(0.2, 0.2, 75) == doctest::Approx(1.0));
    CHECK(fcp_bound_simes(0.02, 0.2, 75) == doctest::Approx(0.1));
}

TEST_CASE("level calibration: two-point law by hand") {
    // n = m = 1: P(p <= 1/2) = 1/2, P(p <= 1) = 1
    CHECK(calibrate_level(PolyaLaw(1, 1), 0.0, 0.5) == 1);
    CHECK(calibrate_level(PolyaLaw(1, 1), 0.0, 0.4) == 0);  // no level qualifies
}

TEST_CASE("level calibration is monotone in delta and target") {
    const PolyaLaw law(20, 10);
    int prev = -1;
    for (double delta : {0.05, 0.1, 0.2, 0.5}) {
        const int l = calibrate_level(law, 0.1, delta);
        CHECK(l >= prev);
        prev = l;
    }
    prev = -1;
    for (double target : {0.0, 0.1, 0.3, 0.6}) {
        const int l = calibrate_level(law, target, 0.1);
        CHECK(l >= prev);
        prev = l;
    }
}

TEST_CASE("explicit zero-target level: single-test closed form and identity") {
    // m = 1 reduces to floor(delta (n+1))/(n+1)
    for (int n : {1, 4, 9}) {
        for (double delta : {0.1, 0.3, 0.5, 0.9}) {
            const int expected = static_cast<int>(std::floor(delta * (n + 1) + 1e-9));
            CHECK(level_zero_explicit(n, 1, delta) == expected);
        }
    }
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 8; ++m)
            for (double delta : {0.1, 0.2, 0.5})
                CHECK(level_zero_explicit(n, m, delta) ==
                      calibrate_level(PolyaLaw(n, m), 0.0, delta));
}

TEST_CASE("tiny delta with a large test sample forces the vacuous band") {
    CHECK(level_zero_explicit(9, 30, 0.05) == 0);
}

TEST_CASE("calibrated levels satisfy their defining constraint against enumeration") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (double delta : {0.1, 0.2, 0.5}) {
                for (double target : {0.0, 0.3, 0.6}) {
                    const int k = static_cast<int>(std::floor(target * m + 1e-9));
                    const int level = calibrate_level(PolyaLaw(n, m), target, delta);
                    const Rational budget = decimal_rational(delta);
                    if (level >= 1)
                        CHECK(exact_order_statistic_cdf(n, m, k + 1, level) <= budget);
                    if (level < n)  // next level up must violate the constraint
                        CHECK(exact_order_statistic_cdf(n, m, k + 1, level + 1) > budget);
                }
            }
        }
    }
}

TEST_CASE("alpha_for_radius counts calibration scores under the cap") {
    const std::vector<double> cal{1, 2, 3};
    CHECK(alpha_for_radius(cal, 0.5) == 0);
    CHECK(alpha_for_radius(cal, 10.0) == 3);
    CHECK(alpha_for_radius(cal, 2.0) == 2);
    CHECK_THROWS_AS(alpha_for_radius(cal, 0.0), std::invalid_argument);
}

TEST_CASE("radius-capped band takes the widest radius within the budget") {
    const std::vector<double> cal{1, 2, 3};
    CHECK(radius_capped_band(cal, {0.0}, 10.0).radius == 3.0);
    CHECK(radius_capped_band(cal, {0.0}, 2.5).radius == 2.0);
    CHECK(radius_capped_band(cal, {0.0}, 1.5).radius == 1.0);
    // no calibration score fits the budget: only the empty band qualifies
    CHECK(radius_capped_band(cal, {0.0}, 0.5).radius ==
          -std::numeric_limits<double>::infinity());
    // the cap is honored on random instances
    Rng rng(1199);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<double> scores;
        for (int i = 0; i < 17; ++i) scores.push_back(std::fabs(rng.normal()));
        const double cap = 0.2 + rng.uniform();
        CHECK(radius_capped_band(scores, {0.0}, cap).radius <= cap);
    }
}

TEST_CASE("synthetic regression honors the configuration") {
    RegressionConfig cfg;
    cfg.n_train = 40;
    cfg.n = 8;
    cfg.m = 6;
    cfg.seed = 5;
    const RegressionData a = synth_regression(cfg);
    const RegressionData b = synth_regression(cfg);
    CHECK(a.train_x == b.train_x);
    CHECK(a.test_y == b.test_y);
    CHECK(a.train_x.size() == 40);
    CHECK(a.cal_x.size() == 8);
    CHECK(a.test_x.size() == 6);

    cfg.sigma = 1e-30;  // noise below double resolution: outcomes hit the mean exactly
    const RegressionData c = synth_regression(cfg);
    for (std::size_t i = 0; i < c.train_x.size(); ++i)
        CHECK(c.train_y[i] == std::cos(c.train_x[i]));  // f1 = identity: train_x is W itself
    for (std::size_t i = 0; i < c.test_x.size(); ++i) {
        const double w = transform_inverse(cfg.test_transform, c.test_x[i]);
        CHECK(c.test_y[i] == doctest::Approx(std::cos(w)).epsilon(1e-12));
    }

    RegressionConfig bad = cfg;
    bad.sigma = 0.0;
    CHECK_THROWS_AS(synth_regression(bad), std::invalid_argument);
}

TEST_CASE("transforms invert on the observed domain") {
    for (double w = 0.0; w <= 5.0; w += 0.25) {
        const double x = transform_value("shifted-quadratic", w);
        CHECK(transform_inverse("shifted-quadratic", x) == doctest::Approx(w).epsilon(1e-12));
    }
    CHECK_THROWS_AS(transform_value("cubic", 1.0), std::invalid_argument);
}

TEST_CASE("pooled knn predictor is invariant under pooled-sample permutation") {
    RegressionConfig cfg;
    cfg.n_train = 200;
    cfg.n = 12;
    cfg.m = 9;
    cfg.seed = 8;
    const RegressionData data = synth_regression(cfg);
    const Predictions base = fit_predict(PredictorKind::pooled_knn, cfg, data);

    // swap blocks between calibration and test covariates: the pooled set is
    // unchanged, so predictions at any fixed point must be unchanged
    RegressionData shuffled = data;
    std::swap(shuffled.cal_x[0], shuffled.test_x[3]);
    std::swap(shuffled.cal_x[5], shuffled.test_x[7]);
    const Predictions perm = fit_predict(PredictorKind::pooled_knn, cfg, shuffled);
    CHECK(perm.cal[0] == base.test[3]);
    CHECK(perm.test[3] == base.cal[0]);
    CHECK(perm.cal[1] == base.cal[1]);
    CHECK(perm.test[0] == base.test[0]);
}

TEST_CASE("fcp curve: identity with the p-value ecdf and monotone dkw bound") {
    RegressionConfig cfg;
    cfg.n_train = 300;
    cfg.n = 15;
    cfg.m = 10;
    cfg.seed = 21;
    const RegressionData data = synth_regression(cfg);
    const Predictions pred = fit_predict(PredictorKind::pooled_knn, cfg, data);

    ScoreSet scores;
    for (std::size_t i = 0; i < data.cal_y.size(); ++i)
        scores.calibration.push_back(std::fabs(data.cal_y[i] - pred.cal[i]));
    for (std::size_t i = 0; i < data.test_y.size(); ++i)
        scores.test.push_back(std::fabs(data.test_y[i] - pred.test[i]));
    const EcdfStep e = ecdf(conformal_pvalues(scores));

    const FcpCurve curve = fcp_curve(scores.calibration, pred.test, data.test_y, 0.2);
    REQUIRE(curve.level.size() == static_cast<std::size_t>(cfg.n + 1));
    double prev_bound = -1.0;
    for (int l = 1; l <= cfg.n + 1; ++l) {
        CHECK(curve.fcp[static_cast<std::size_t>(l) - 1] ==
              Rational(e.count_at(l), cfg.m));
        if (l <= cfg.n) {
            // strictly increasing until the cap at 1, nondecreasing overall
            CHECK(curve.bound_dkw[static_cast<std::size_t>(l) - 1] >= prev_bound);
            prev_bound = curve.bound_dkw[static_cast<std::size_t>(l) - 1];
        }
    }
}

TEST_CASE("oracle-mean coverage simulation stays within the uniform bound (reduced)") {
    RegressionConfig cfg;
    cfg.n_train = 50;  // the oracle-mean predictor ignores the train sample
    cfg.n = 30;
    cfg.m = 30;
    const std::vector<double> alphas{0.1, 0.2};
    const PiCoverage cov = pi_coverage_simulation(cfg, PredictorKind::oracle_mean, 0.2, alphas,
                                                  90, 2000);
    const double viol = static_cast<double>(cov.uniform_violations) / cov.replicates;
    CHECK(viol <= 0.2 + 4.0 * std::sqrt(0.2 * 0.8 / cov.replicates));
    // marginal miscoverage at the grid value below alpha
    const double expect01 = std::floor(0.1 * 31) / 31;
    CHECK(cov.mean_fcp[0] ==
          doctest::Approx(expect01).epsilon(0.15));
    CHECK(cov.mean_fcp[0] <= 0.1 + 1e-12);
}
