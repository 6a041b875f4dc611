#ifndef TCONF_BOUNDS_HPP
#define TCONF_BOUNDS_HPP

#include <cstdint>
#include <vector>

#include "tconf/polya.hpp"
#include "tconf/scores.hpp"

namespace tconf {

struct DkwParams {
    int n;
    int m;
    double delta;
    int iterations = 3;  // fixed-point iterations for lambda_dkw; nonincreasing in r

    DkwParams(int n_, int m_, double delta_, int iterations_ = 3);

    // Effective sample size n m/(n+m), always in [min(n,m)/2, min(n,m)].
    double tau() const { return static_cast<double>(n) * m / (n + m); }
};

// Tail bound for sup_t(F_m(t) - I_n(t)):
//   1{lambda<1} [1 + 2 sqrt(2 pi) lambda tau / sqrt(n+m)] exp(-2 tau lambda^2).
double b_dkw(double lambda, int n, int m);

// Sharper variant: convex combination of the one-sample bounds plus a crossed
// term weighted by C = P(N(lambda mu, sigma^2) in [0, lambda]) with
// mu = n/(n+m), sigma^2 = 1/(4(n+m)). C is evaluated with an erfc-based
// normal c.d.f. (absolute error far below 1.5e-7); c_equals_one replaces it
// by the coarser certified value 1. Both variants vanish for lambda >= 1
// since the deviation statistic never exceeds 1.
double b_dkw_full(double lambda, int n, int m, bool c_equals_one = false);

// Smallest-practical lambda with b_dkw(lambda, n, m) <= delta, obtained by
// iterating x -> min(1, sqrt((log(1/delta) + log(1 + 2 sqrt(2 pi) tau x /
// sqrt(n+m)))/(2 tau))) from x = 1. Always in (0, 1].
double lambda_dkw(const DkwParams& params);

// Monte-Carlo quantile of the sup-deviation statistic under P_{n,m}: the
// ceil((1-delta) reps)-th order statistic (1-based, conservative upper side)
// of reps urn draws. Requires reps >= 1000; deterministic given the seed.
double lambda_numerical(const PolyaLaw& law, double delta, std::uint64_t seed, int reps);

// sup_{t in (0,1]} F_m(t)/t, attained at the ordered p-values:
// max_i (i/m)/p_(i).
double simes_statistic(const PValueSet& pvals);

// Tail bound 1/lambda for P(simes_statistic >= lambda), valid by the positive
// dependence of conformal p-values.
double simes_tail_bound(double lambda);

struct Envelope {
    enum class Kind { analytic_dkw, numerical_dkw, simes, calibrated_template };
    Kind kind;
    double lambda = 0.0;
    std::vector<double> thresholds;  // populated for template envelopes
};

// lambda selected so that b_dkw(lambda, n, m) <= delta.
Envelope analytic_dkw_envelope(const DkwParams& params);

// lambda from the Monte-Carlo quantile of the sup-deviation statistic.
Envelope numerical_dkw_envelope(const PolyaLaw& law, double delta, std::uint64_t seed,
                                int reps);

}  // namespace tconf

#endif
