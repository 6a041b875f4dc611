#ifndef TCONF_POLYA_HPP
#define TCONF_POLYA_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tconf/rational.hpp"
#include "tconf/rng.hpp"
#include "tconf/scores.hpp"

namespace tconf {

/**
 * Joint law of the m conformal p-values built from n calibration scores,
 * valid for any exchangeable tie-free score distribution: the colors of m
 * successive draws from a Polya urn with n+1 colors, one initial ball each.
 * Trajectories are vectors of ranks in [1, n+1]; p-values are rank/(n+1).
 */
struct PolyaLaw {
    int n;
    int m;
    PolyaLaw(int n_, int m_);
};

// One replicate via the urn dynamics: each drawn color goes back with one
// extra ball of the same color.
PValueSet sample_urn_one(const PolyaLaw& law, Rng& rng);

// One replicate via the representation U ~ Unif[0,1]^n, then m i.i.d. draws
// of the cell a fresh uniform falls into among the order statistics of U.
// Same distribution as sample_urn_one.
PValueSet sample_representation_one(const PolyaLaw& law, Rng& rng);

// Materialized replicates, one RNG stream per replicate index.
std::vector<PValueSet> sample_urn(const PolyaLaw& law, std::uint64_t seed, int reps);
std::vector<PValueSet> sample_representation(const PolyaLaw& law, std::uint64_t seed, int reps);

// Exact arithmetic is reserved for instances small enough to be oracle
// material; everything larger goes through log-space.
inline constexpr int kExactArithmeticLimit = 20;

// P(p = traj/(n+1)) = M(traj)! n!/(n+m)! where M(traj)! is the product of
// factorials of the color multiplicities. Requires n+m <= 20.
Rational joint_pmf_exact(const PolyaLaw& law, std::span<const int> traj);

double joint_log_pmf(const PolyaLaw& law, std::span<const int> traj);

// Exact value converted to double when n+m <= 20, exp(log pmf) otherwise.
double joint_pmf(const PolyaLaw& law, std::span<const int> traj);

// P(p_{i+1} = next/(n+1) | first i draws) = (1 + #{history == next})/(n+1+i).
Rational sequential_pmf(const PolyaLaw& law, std::span<const int> history, int next);

struct Histogram {
    std::vector<int> bins;  // length n+1, nonnegative, summing to m
};

Histogram trajectory_histogram(const PolyaLaw& law, std::span<const int> traj);

// Uniform over histograms: 1/binom(n+m, m) for every valid histogram.
Rational histogram_pmf(const PolyaLaw& law, const Histogram& h);

// P(p = traj/(n+1) | histogram) = M(traj)!/m!.
Rational trajectory_conditional_pmf(const PolyaLaw& law, std::span<const int> traj);

// P(m F_m(alpha) = k): closed form with k0 = ceil(alpha (n+1)),
//   binom(m,k) (n-k0+1)...(n-k0+m-k) * k0...(k0+k-1) / [(n+1)...(n+m)].
// The exact form is available at any size (it is a single product); the
// double-valued entry point uses it for n+m <= 20 and log-space otherwise.
Rational ecdf_count_pmf_exact(const PolyaLaw& law, double alpha, int k);
double ecdf_count_log_pmf(const PolyaLaw& law, double alpha, int k);
double ecdf_count_pmf(const PolyaLaw& law, double alpha, int k);

// Two-color reduction of the urn: Z_i = 1{p_i > alpha}. Given a 0/1 history
// of length i, the next indicator is 0 with probability
// (floor(alpha(n+1)) + #zeros)/(n+1+i) and 1 with the complement
// (ceil((1-alpha)(n+1)) + #ones)/(n+1+i).
struct TwoColorStep {
    Rational p_below;  // P(Z = 0), i.e. p <= alpha
    Rational p_above;  // P(Z = 1)
};

TwoColorStep two_color_sequential(const PolyaLaw& law, double alpha,
                                  std::span<const int> history01);

}  // namespace tconf

#endif
