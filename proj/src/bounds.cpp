#include "tconf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tconf/gridmath.hpp"
#include "tconf/mathfn.hpp"
#include "tconf/parallel.hpp"

namespace tconf {

namespace {
constexpr double kSqrt2Pi = 2.5066282746310005024;
}

DkwParams::DkwParams(int n_, int m_, double delta_, int iterations_)
    : n(n_), m(m_), delta(delta_), iterations(iterations_) {
    if (n < 1 || m < 1) throw std::invalid_argument("DkwParams: need n >= 1 and m >= 1");
    require_probability(delta, "delta");
    if (iterations < 1) throw std::invalid_argument("DkwParams: need iterations >= 1");
}

double b_dkw(double lambda, int n, int m) {
    if (lambda < 0.0) throw std::invalid_argument("b_dkw: lambda must be >= 0");
    if (lambda >= 1.0) return 0.0;
    const double tau = static_cast<double>(n) * m / (n + m);
    return (1.0 + 2.0 * kSqrt2Pi * lambda * tau / std::sqrt(static_cast<double>(n + m))) *
           std::exp(-2.0 * tau * lambda * lambda);
}

double b_dkw_full(double lambda, int n, int m, bool c_equals_one) {
    if (lambda < 0.0) throw std::invalid_argument("b_dkw_full: lambda must be >= 0");
    if (lambda >= 1.0) return 0.0;
    const double nm = n + m;
    const double tau = static_cast<double>(n) * m / nm;
    const double mu = n / nm;
    const double sigma = 1.0 / (2.0 * std::sqrt(nm));
    double c = 1.0;
    if (!c_equals_one)
        c = normal_cdf(lambda * (1.0 - mu) / sigma) - normal_cdf(-lambda * mu / sigma);
    return n / nm * std::exp(-2.0 * m * lambda * lambda) +
           m / nm * std::exp(-2.0 * n * lambda * lambda) +
           c * 2.0 * kSqrt2Pi * lambda * (static_cast<double>(n) * m) / (nm * std::sqrt(nm)) *
               std::exp(-2.0 * tau * lambda * lambda);
}

double lambda_dkw(const DkwParams& params) {
    const double tau = params.tau();
    const double root = std::sqrt(static_cast<double>(params.n + params.m));
    const double log_inv_delta = std::log(1.0 / params.delta);
    double x = 1.0;
    for (int r = 0; r < params.iterations; ++r) {
        x = std::min(1.0, std::sqrt((log_inv_delta +
                                     std::log1p(2.0 * kSqrt2Pi * tau * x / root)) /
                                    (2.0 * tau)));
    }
    return x;
}

double lambda_numerical(const PolyaLaw& law, double delta, std::uint64_t seed, int reps) {
    require_probability(delta, "delta");
    if (reps < 1000) throw std::invalid_argument("lambda_numerical: need reps >= 1000");

    std::vector<long long> devs(static_cast<std::size_t>(reps));
    parallel_for(reps, [&](std::int64_t r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        const PValueSet pv = sample_urn_one(law, rng);
        devs[static_cast<std::size_t>(r)] = sup_deviation_numerator(ecdf(pv));
    });

    const auto k = static_cast<std::size_t>(ceil_snapped((1.0 - delta) * reps));
    std::nth_element(devs.begin(), devs.begin() + (k - 1), devs.end());
    return static_cast<double>(devs[k - 1]) /
           (static_cast<double>(law.m) * (law.n + 1));
}

double simes_statistic(const PValueSet& pvals) {
    pvals.validate();
    std::vector<int> sorted(pvals.ranks);
    std::sort(sorted.begin(), sorted.end());
    const int m = pvals.m();
    double best = 0.0;
    for (int i = 1; i <= m; ++i) {
        const double v = static_cast<double>(i) * (pvals.n + 1) /
                         (static_cast<double>(m) * sorted[static_cast<std::size_t>(i) - 1]);
        best = std::max(best, v);
    }
    return best;
}

double simes_tail_bound(double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("simes_tail_bound: lambda must be > 0");
    return 1.0 / lambda;
}

Envelope analytic_dkw_envelope(const DkwParams& params) {
    return Envelope{Envelope::Kind::analytic_dkw, lambda_dkw(params), {}};
}

Envelope numerical_dkw_envelope(const PolyaLaw& law, double delta, std::uint64_t seed,
                                int reps) {
    return Envelope{Envelope::Kind::numerical_dkw, lambda_numerical(law, delta, seed, reps), {}};
}

}  // namespace tconf
