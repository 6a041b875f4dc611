#include "tconf/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tconf/gridmath.hpp"
#include "tconf/parallel.hpp"

namespace tconf {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool PredictionBand::covers(int i, double outcome) const {
    return std::fabs(outcome - centers[static_cast<std::size_t>(i)]) <= radius;
}

PredictionBand build_band(const std::vector<double>& calibration_scores,
                          std::vector<double> centers, double alpha) {
    if (calibration_scores.empty()) throw std::invalid_argument("build_band: need n >= 1");
    if (centers.empty()) throw std::invalid_argument("build_band: need m >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("build_band: alpha outside [0,1]");

    const int n = static_cast<int>(calibration_scores.size());
    const int l = grid_floor_index(alpha, n);
    const int k = n + 1 - l;  // = ceil((n+1)(1-alpha))

    PredictionBand band;
    band.centers = std::move(centers);
    band.alpha_requested = alpha;
    band.alpha_effective = static_cast<double>(l) / (n + 1);
    band.n = n;
    if (k >= n + 1) {
        band.radius = kInf;
    } else if (k <= 0) {
        band.radius = -kInf;  // alpha = 1: the band is empty
    } else {
        std::vector<double> sorted(calibration_scores);
        std::sort(sorted.begin(), sorted.end());
        band.radius = sorted[static_cast<std::size_t>(k) - 1];
    }
    return band;
}

Rational fcp(const PredictionBand& band, const std::vector<double>& outcomes) {
    if (outcomes.size() != band.centers.size())
        throw std::invalid_argument("fcp: outcomes length differs from the band");
    int outside = 0;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (!band.covers(static_cast<int>(i), outcomes[i])) ++outside;
    return Rational(outside, static_cast<long long>(outcomes.size()));
}

double fcp_bound_dkw(double alpha, const DkwParams& params) {
    require_probability(alpha, "alpha");
    if (grid_floor_index(alpha, params.n) < 1) return 0.0;  // all-reals band, FCP = 0
    return alpha + lambda_dkw(params);
}

double fcp_bound_simes(double alpha, double delta, int n) {
    require_probability(alpha, "alpha");
    require_probability(delta, "delta");
    if (grid_floor_index(alpha, n) < 1) return 0.0;
    return alpha / delta;
}

Rational decimal_rational(double x) {
    const double scaled = x * 1e6;
    const double r = std::nearbyint(scaled);
    if (std::fabs(scaled - r) <= 1e-6 * std::fmax(1.0, std::fabs(scaled)))
        return Rational(static_cast<long long>(r), 1000000LL);
    return Rational(x);
}

int calibrate_level(const PolyaLaw& law, double target_fcp, double delta) {
    if (!(target_fcp >= 0.0 && target_fcp < 1.0))
        throw std::invalid_argument("calibrate_level: target FCP outside [0,1)");
    require_probability(delta, "delta");
    const int k = static_cast<int>(floor_snapped(target_fcp * law.m));
    const Rational budget = decimal_rational(delta);

    // P(p_(k+1) <= l/(n+1)) = P(m F_m(l/(n+1)) >= k+1), summed exactly.
    for (int l = law.n + 1; l >= 1; --l) {
        const double t = static_cast<double>(l) / (law.n + 1);
        if (!(t < 1.0)) continue;  // the level grid for bands stops below 1
        Rational tail = 0;
        for (int j = k + 1; j <= law.m; ++j) tail += ecdf_count_pmf_exact(law, t, j);
        if (tail <= budget) return l;
    }
    return 0;
}

int level_zero_explicit(int n, int m, double delta) {
    if (n < 1 || m < 1) throw std::invalid_argument("level_zero_explicit: need n,m >= 1");
    require_probability(delta, "delta");
    const Rational keep = Rational(1) - decimal_rational(delta);
    for (int k = n + 1; k >= 1; --k) {
        Rational prob = 1;
        for (int i = 1; i <= m; ++i) {
            prob *= n - k + i;
            prob /= n + i;
        }
        if (prob >= keep) return k;
    }
    return 0;
}

int alpha_for_radius(const std::vector<double>& calibration_scores, double radius_limit) {
    if (calibration_scores.empty()) throw std::invalid_argument("alpha_for_radius: need n >= 1");
    if (!(radius_limit > 0.0)) throw std::invalid_argument("alpha_for_radius: need L > 0");
    return static_cast<int>(std::count_if(calibration_scores.begin(), calibration_scores.end(),
                                          [&](double s) { return s <= radius_limit; }));
}

PredictionBand radius_capped_band(const std::vector<double>& calibration_scores,
                                  std::vector<double> centers, double radius_limit) {
    const int n = static_cast<int>(calibration_scores.size());
    const int count = alpha_for_radius(calibration_scores, radius_limit);
    const double level = static_cast<double>(n + 1 - count) / (n + 1);
    return build_band(calibration_scores, std::move(centers), level);
}

// --------------------------------------------------------------------------
// Synthetic regression experiment

void RegressionConfig::validate() const {
    if (n_train < 1 || n < 1 || m < 1)
        throw std::invalid_argument("RegressionConfig: all sizes must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("RegressionConfig: sigma must be > 0");
    mean_fn_value(mean_fn, 0.0);
    transform_value(train_transform, 0.0);
    transform_value(test_transform, 0.0);
}

double mean_fn_value(const std::string& id, double w) {
    if (id == "cos") return std::cos(w);
    if (id == "sin") return std::sin(w);
    if (id == "identity") return w;
    throw std::invalid_argument("unknown mean function: " + id);
}

double transform_value(const std::string& id, double w) {
    if (id == "identity") return w;
    if (id == "shifted-quadratic") return 0.6 * w + w * w / 25.0;
    throw std::invalid_argument("unknown transform: " + id);
}

double transform_inverse(const std::string& id, double x) {
    if (id == "identity") return x;
    // 0.6 w + w^2/25 = x  <=>  w^2 + 15 w - 25 x = 0, increasing branch on w >= 0
    if (id == "shifted-quadratic") return 0.5 * (-15.0 + std::sqrt(225.0 + 100.0 * x));
    throw std::invalid_argument("unknown transform: " + id);
}

RegressionData synth_regression(const RegressionConfig& config, Rng& rng) {
    config.validate();
    RegressionData data;
    auto draw = [&](int count, const std::string& transform, std::vector<double>& xs,
                    std::vector<double>& ys) {
        xs.resize(static_cast<std::size_t>(count));
        ys.resize(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) {
            const double w = rng.uniform(0.0, 5.0);
            xs[static_cast<std::size_t>(i)] = transform_value(transform, w);
            ys[static_cast<std::size_t>(i)] =
                rng.normal(mean_fn_value(config.mean_fn, w), config.sigma);
        }
    };
    draw(config.n_train, config.train_transform, data.train_x, data.train_y);
    draw(config.n, config.test_transform, data.cal_x, data.cal_y);
    draw(config.m, config.test_transform, data.test_x, data.test_y);
    return data;
}

RegressionData synth_regression(const RegressionConfig& config) {
    Rng rng = Rng::stream(config.seed, 0);
    return synth_regression(config, rng);
}

PredictorKind predictor_from_name(const std::string& name) {
    if (name == "oracle-mean") return PredictorKind::oracle_mean;
    if (name == "pooled-knn") return PredictorKind::pooled_knn;
    if (name == "naive-knn") return PredictorKind::naive_knn;
    throw std::invalid_argument("unknown predictor: " + name);
}

std::string predictor_name(PredictorKind kind) {
    switch (kind) {
        case PredictorKind::oracle_mean: return "oracle-mean";
        case PredictorKind::pooled_knn: return "pooled-knn";
        case PredictorKind::naive_knn: return "naive-knn";
    }
    return "?";
}

namespace {

struct SortedFit {
    std::vector<double> x;  // ascending
    std::vector<double> y;  // matched
};

SortedFit sort_fit(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    SortedFit fit;
    fit.x.reserve(x.size());
    fit.y.reserve(x.size());
    for (std::size_t i : order) {
        fit.x.push_back(x[i]);
        fit.y.push_back(y[i]);
    }
    return fit;
}

double knn_mean(const SortedFit& fit, double x0, int k) {
    const int size = static_cast<int>(fit.x.size());
    if (k > size) k = size;
    int hi = static_cast<int>(std::lower_bound(fit.x.begin(), fit.x.end(), x0) - fit.x.begin());
    int lo = hi - 1;
    double sum = 0.0;
    for (int picked = 0; picked < k; ++picked) {
        const double dlo = lo >= 0 ? x0 - fit.x[static_cast<std::size_t>(lo)] : kInf;
        const double dhi = hi < size ? fit.x[static_cast<std::size_t>(hi)] - x0 : kInf;
        if (dlo <= dhi) {
            sum += fit.y[static_cast<std::size_t>(lo--)];
        } else {
            sum += fit.y[static_cast<std::size_t>(hi++)];
        }
    }
    return sum / k;
}

// Empirical-quantile interpolation into a sorted sample.
double quantile_at(const std::vector<double>& sorted, double q) {
    const std::size_t size = sorted.size();
    if (size == 1) return sorted[0];
    const double pos = q * static_cast<double>(size - 1);
    const auto lo = static_cast<std::size_t>(std::clamp(std::floor(pos), 0.0,
                                                        static_cast<double>(size - 2)));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

Predictions fit_predict(PredictorKind kind, const RegressionConfig& config,
                        const RegressionData& data, int knn_k) {
    Predictions out;
    auto predict_all = [&](auto&& predictor) {
        out.cal.reserve(data.cal_x.size());
        out.test.reserve(data.test_x.size());
        for (double x : data.cal_x) out.cal.push_back(predictor(x));
        for (double x : data.test_x) out.test.push_back(predictor(x));
    };

    switch (kind) {
        case PredictorKind::oracle_mean: {
            predict_all([&](double x) {
                return mean_fn_value(config.mean_fn,
                                     transform_inverse(config.test_transform, x));
            });
            break;
        }
        case PredictorKind::naive_knn: {
            const SortedFit fit = sort_fit(data.train_x, data.train_y);
            predict_all([&](double x) { return knn_mean(fit, x, knn_k); });
            break;
        }
        case PredictorKind::pooled_knn: {
            // Transfer step: move each train covariate to the pooled
            // calibration+test domain by matching empirical quantiles, then
            // regress in the mapped domain.
            std::vector<double> pooled(data.cal_x);
            pooled.insert(pooled.end(), data.test_x.begin(), data.test_x.end());
            std::sort(pooled.begin(), pooled.end());

            SortedFit fit = sort_fit(data.train_x, data.train_y);
            const auto size = static_cast<double>(fit.x.size());
            for (std::size_t i = 0; i < fit.x.size(); ++i)
                fit.x[i] = quantile_at(pooled, (static_cast<double>(i) + 0.5) / size);
            predict_all([&](double x) { return knn_mean(fit, x, knn_k); });
            break;
        }
    }
    return out;
}

FcpCurve fcp_curve(const std::vector<double>& calibration_scores,
                   const std::vector<double>& centers, const std::vector<double>& outcomes,
                   double delta, int iterations) {
    if (centers.size() != outcomes.size())
        throw std::invalid_argument("fcp_curve: centers/outcomes length mismatch");
    const int n = static_cast<int>(calibration_scores.size());
    const int m = static_cast<int>(centers.size());
    const DkwParams params(n, m, delta, iterations);
    const double lambda = lambda_dkw(params);

    std::vector<double> sorted_cal(calibration_scores);
    std::sort(sorted_cal.begin(), sorted_cal.end());
    std::vector<double> residuals(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i)
        residuals[i] = std::fabs(outcomes[i] - centers[i]);
    std::sort(residuals.begin(), residuals.end());

    FcpCurve curve;
    curve.n = n;
    curve.m = m;
    curve.delta = delta;
    for (int l = 1; l <= n + 1; ++l) {
        const double alpha = static_cast<double>(l) / (n + 1);
        const int k = n + 1 - l;
        const double radius = k >= n + 1 ? kInf
                              : k <= 0  ? -kInf
                                        : sorted_cal[static_cast<std::size_t>(k) - 1];
        const auto outside = residuals.end() -
                             std::upper_bound(residuals.begin(), residuals.end(), radius);
        curve.level.push_back(alpha);
        curve.fcp.emplace_back(static_cast<long long>(outside), static_cast<long long>(m));
        // a proportion bound above 1 is vacuous; the report caps it there
        curve.bound_dkw.push_back(l <= n ? std::min(1.0, alpha + lambda) : 1.0);
        curve.bound_simes.push_back(l <= n ? std::min(1.0, alpha / delta) : 1.0);
        curve.radius.push_back(radius);
    }
    return curve;
}

PiCoverage pi_coverage_simulation(const RegressionConfig& base, PredictorKind kind, double delta,
                                  std::span<const double> alphas, std::uint64_t seed,
                                  int replicates, int knn_k, int iterations) {
    base.validate();
    require_probability(delta, "delta");
    const DkwParams params(base.n, base.m, delta, iterations);
    const double lambda = lambda_dkw(params);

    std::vector<int> alpha_index;
    for (double a : alphas) alpha_index.push_back(grid_floor_index(a, base.n));

    std::vector<unsigned char> violated(static_cast<std::size_t>(replicates), 0);
    std::vector<std::vector<int>> hits(alphas.size(),
                                       std::vector<int>(static_cast<std::size_t>(replicates), 0));

    parallel_for(replicates, [&](std::int64_t rep) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(rep));
        const RegressionData data = synth_regression(base, rng);
        const Predictions pred = fit_predict(kind, base, data, knn_k);

        ScoreSet scores;
        scores.calibration.reserve(data.cal_y.size());
        for (std::size_t i = 0; i < data.cal_y.size(); ++i)
            scores.calibration.push_back(std::fabs(data.cal_y[i] - pred.cal[i]));
        scores.test.reserve(data.test_y.size());
        for (std::size_t i = 0; i < data.test_y.size(); ++i)
            scores.test.push_back(std::fabs(data.test_y[i] - pred.test[i]));
        if (scores.has_ties()) scores = break_ties(scores, splitmix64(seed) + rep);

        const EcdfStep e = ecdf(conformal_pvalues(scores));
        // FCP(alpha) = F_m(alpha) on the grid; one violation event per
        // replicate across the whole level grid.
        for (int l = 1; l <= base.n; ++l) {
            const double bound = static_cast<double>(l) / (base.n + 1) + lambda;
            if (e.value_at(l) > bound) {
                violated[static_cast<std::size_t>(rep)] = 1;
                break;
            }
        }
        for (std::size_t a = 0; a < alpha_index.size(); ++a)
            hits[a][static_cast<std::size_t>(rep)] = e.count_at(alpha_index[a]);
    });

    PiCoverage cov;
    cov.replicates = replicates;
    cov.uniform_violations =
        std::count(violated.begin(), violated.end(), static_cast<unsigned char>(1));
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        const long long total = std::accumulate(hits[a].begin(), hits[a].end(), 0LL);
        cov.mean_fcp.push_back(static_cast<double>(total) / replicates / base.m);
    }
    return cov;
}

}  // namespace tconf
