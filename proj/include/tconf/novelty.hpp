#ifndef TCONF_NOVELTY_HPP
#define TCONF_NOVELTY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tconf/rational.hpp"
#include "tconf/rng.hpp"
#include "tconf/scores.hpp"

namespace tconf {

// Thresholding procedure {i : p_i <= t}; indices are 0-based test positions.
// The comparison is an integer rank comparison against floor((n+1)t).
std::vector<int> reject(const PValueSet& pvals, double t);

struct FdpTdp {
    Rational fdp;
    Rational tdp;
};

// FDP = |R ∩ H0| / (|R| v 1), TDP = |R ∩ H1| / (|H1| v 1) where H1 is the
// complement of h0 in {0..m-1}.
FdpTdp fdp_tdp(const std::vector<int>& rejected, const std::vector<int>& h0, int m);

struct M0Estimate {
    enum class Method { dkw, simes, none };
    int value = 0;  // in [1, m]
    Method method = Method::none;
};

// Largest r such that inf over the level grid of
// (#{p_i > t} + r lambda_dkw(delta, n, r)) / (1 - I_n(t)) >= r; m if no r
// qualifies. With probability >= 1-delta this does not underestimate the
// number of nulls.
M0Estimate m0_hat_dkw(const PValueSet& pvals, double delta, int iterations = 3);

// Simes counterpart: m ∧ ceil(inf over grid t in (0, delta) of
// #{p_i > t} / (1 - t/delta)); m when no grid point lies in (0, delta).
M0Estimate m0_hat_simes(const PValueSet& pvals, double delta);

// Uniform-in-t FDP bounds; each curve holds simultaneously over the whole
// grid with probability >= 1-delta.
double fdp_bound_dkw(const PValueSet& pvals, double t, double delta, int iterations = 3);
double fdp_bound_simes(const PValueSet& pvals, double t, double delta);

// Benjamini-Hochberg step-up on the conformal p-values:
// k_hat = max{k : #{p_i <= alpha k/m} >= k}, rejection at threshold
// alpha k_hat/m. Controls FDR at alpha m0/m.
struct BhResult {
    int k_hat = 0;
    double threshold = 0.0;
    std::vector<int> rejected;
};

BhResult bh_threshold(const PValueSet& pvals, double alpha);

// FDP bounds for the BH rejection set at level alpha: the DKW form
// (alpha m0_dkw/m + m0_dkw lambda/(k_hat v 1)) 1{k_hat > 0} and the Simes
// form (m0_simes alpha/(m delta)) 1{k_hat > 0}, each uniform in alpha.
std::pair<double, double> adadetect_fdp_bounds(const PValueSet& pvals, double alpha,
                                               double delta, int iterations = 3);

// Synthetic novelty-detection data: calibration and null test scores are
// N(0,1), novelty scores N(shift,1); h0 lists the null test indices.
struct NdData {
    std::vector<double> calibration;
    std::vector<double> test;
    std::vector<int> h0;
};

NdData synth_nd(int n, int m0, int m1, double shift, std::uint64_t seed);
NdData synth_nd(int n, int m0, int m1, double shift, Rng& rng);

// FDP/TDP and both uniform bounds over the threshold grid l = 1..n
// (thresholds strictly inside (0,1)). Ground truth h0 may be empty, in which
// case the fdp/tdp columns are omitted.
struct RejectionCurve {
    int n = 0;
    int m = 0;
    double delta = 0.0;
    int m0_dkw = 0;
    int m0_simes = 0;
    std::vector<double> threshold;
    std::vector<int> reject_count;
    std::vector<int> null_reject_count;  // empty without ground truth
    std::vector<Rational> fdp;
    std::vector<Rational> tdp;
    std::vector<double> bound_dkw;
    std::vector<double> bound_simes;
};

RejectionCurve rejection_curve(const PValueSet& pvals, const std::vector<int>& h0, double delta,
                               int iterations = 3);

// Replicated simulation backing the uniform-FDP and m0-conservativeness
// checks plus the BH FDR summary.
struct NdCoverage {
    int replicates = 0;
    long dkw_curve_violations = 0;    // some grid t with FDP > DKW bound
    long simes_curve_violations = 0;  // same for the Simes curve
    long m0_dkw_underestimates = 0;   // m0_hat_dkw < true m0
    long m0_simes_underestimates = 0;
    double bh_mean_fdp = 0.0;  // at bh_alpha
    double bh_mean_tdp = 0.0;
};

NdCoverage nd_coverage_simulation(int n, int m0, int m1, double shift, double delta,
                                  double bh_alpha, std::uint64_t seed, int replicates,
                                  int iterations = 3);

}  // namespace tconf

#endif
