#ifndef TCONF_PREDICTION_HPP
#define TCONF_PREDICTION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tconf/bounds.hpp"
#include "tconf/polya.hpp"
#include "tconf/rational.hpp"
#include "tconf/rng.hpp"
#include "tconf/scores.hpp"

namespace tconf {

/**
 * Simultaneous prediction intervals centers +- radius with
 * radius = S_(ceil((n+1)(1-alpha))) over the calibration scores and
 * S_(n+1) = +infinity. The requested alpha snaps down to the (n+1)-grid; a
 * request below 1/(n+1) yields the all-reals band (radius +infinity) and
 * alpha = 1 yields the empty band (radius -infinity).
 */
struct PredictionBand {
    std::vector<double> centers;
    double radius = 0.0;
    double alpha_requested = 0.0;
    double alpha_effective = 0.0;
    int n = 0;

    bool covers(int i, double outcome) const;
};

PredictionBand build_band(const std::vector<double>& calibration_scores,
                          std::vector<double> centers, double alpha);

// False coverage proportion: #{i : outcome_i outside interval i}/m.
Rational fcp(const PredictionBand& band, const std::vector<double>& outcomes);

// Uniform-in-alpha FCP bound (alpha + lambda_dkw) 1{alpha >= 1/(n+1)}: the
// whole curve holds simultaneously with probability >= 1-delta.
double fcp_bound_dkw(double alpha, const DkwParams& params);

// Simes counterpart (alpha/delta) 1{alpha >= 1/(n+1)}.
double fcp_bound_simes(double alpha, double delta, int n);

// Largest grid index l such that P(p_(floor(target_fcp*m)+1) <= l/(n+1))
// <= delta, the level at which the band's FCP stays below target_fcp with
// probability >= 1-delta. Exact-rational evaluation at any size; returns 0
// (all-reals band) when no level qualifies.
int calibrate_level(const PolyaLaw& law, double target_fcp, double delta);

// Closed form of the target_fcp = 0 case:
// max{k : (n-k+1)...(n-k+m) / ((n+1)...(n+m)) >= 1-delta}, 0 if none.
int level_zero_explicit(int n, int m, double delta);

// Count-based level for a radius budget: grid index
// #{i : S_i <= radius_limit}. The uniform FCP bounds certify any data-driven
// level, this one included.
int alpha_for_radius(const std::vector<double>& calibration_scores, double radius_limit);

// The band with the largest radius not exceeding the budget: level
// (n+1-count)/(n+1), whose radius is the count-th smallest calibration score
// (empty band when no score fits the budget). This is the construction the
// radius-indexed experiment rows use; its FCP certificate is the uniform
// bound evaluated at that level.
PredictionBand radius_capped_band(const std::vector<double>& calibration_scores,
                                  std::vector<double> centers, double radius_limit);

// Double inputs such as delta arrive as decimal literals; snap to the decimal
// rational (denominator up to 10^6) so exact comparisons match the intended
// value rather than its binary approximation.
Rational decimal_rational(double x);

// ---------------------------------------------------------------------------
// Synthetic regression experiment: covariate W ~ U(0,5), Y|W ~ N(mu(W),
// sigma^2), observed covariate f1(W) in the train sample and f2(W) in the
// calibration+test samples (a domain shift the predictor must absorb).

struct RegressionConfig {
    int n_train = 5000;
    int n = 75;
    int m = 75;
    double sigma = 0.1;
    std::string mean_fn = "cos";                     // mu
    std::string train_transform = "identity";        // f1
    std::string test_transform = "shifted-quadratic"; // f2(x) = 0.6x + x^2/25
    std::uint64_t seed = 1;

    void validate() const;
};

struct RegressionData {
    std::vector<double> train_x, train_y;
    std::vector<double> cal_x, cal_y;
    std::vector<double> test_x, test_y;
};

RegressionData synth_regression(const RegressionConfig& config);
RegressionData synth_regression(const RegressionConfig& config, Rng& rng);

double mean_fn_value(const std::string& id, double w);
double transform_value(const std::string& id, double w);
double transform_inverse(const std::string& id, double x);

// Built-in predictors. pooled_knn maps the train covariates onto the pooled
// calibration+test covariates by matching empirical quantiles, then runs a
// k-nearest-neighbor regression in the mapped domain; it depends on the
// pooled sample only through its order statistics, hence is invariant under
// permutations of the pooled sample and keeps the residual scores
// exchangeable. naive_knn skips the mapping (no transfer baseline);
// oracle_mean uses the true data-generating mean.
enum class PredictorKind { oracle_mean, pooled_knn, naive_knn };

PredictorKind predictor_from_name(const std::string& name);
std::string predictor_name(PredictorKind kind);

struct Predictions {
    std::vector<double> cal;
    std::vector<double> test;
};

Predictions fit_predict(PredictorKind kind, const RegressionConfig& config,
                        const RegressionData& data, int knn_k = 10);

// Realized FCP and both uniform bounds over the full level grid l = 1..n+1,
// with the interval radius per level.
struct FcpCurve {
    int n = 0;
    int m = 0;
    double delta = 0.0;
    std::vector<double> level;
    std::vector<Rational> fcp;
    std::vector<double> bound_dkw;
    std::vector<double> bound_simes;
    std::vector<double> radius;
};

FcpCurve fcp_curve(const std::vector<double>& calibration_scores,
                   const std::vector<double>& centers, const std::vector<double>& outcomes,
                   double delta, int iterations = 3);

// Replicated coverage simulation used by the CLI summary and the acceptance
// suite: per replicate, fresh synthetic data and predictor fit, then one
// violation event if any grid level breaks the DKW FCP bound.
struct PiCoverage {
    int replicates = 0;
    long uniform_violations = 0;
    // Grand mean of FCP per requested alpha; by exchangeability this is also
    // the per-point marginal miscoverage frequency.
    std::vector<double> mean_fcp;
};

PiCoverage pi_coverage_simulation(const RegressionConfig& base, PredictorKind kind, double delta,
                                  std::span<const double> alphas, std::uint64_t seed,
                                  int replicates, int knn_k = 10, int iterations = 3);

}  // namespace tconf

#endif
