#ifndef TCONF_SCORES_HPP
#define TCONF_SCORES_HPP

#include <cstdint>
#include <vector>

#include "tconf/rational.hpp"

namespace tconf {

/**
 * Nonconformity scores: n calibration scores and m test scores.
 * All values must be finite; the p-value machinery additionally requires the
 * pooled n+m values to be pairwise distinct (see break_ties).
 */
struct ScoreSet {
    std::vector<double> calibration;
    std::vector<double> test;

    int n() const { return static_cast<int>(calibration.size()); }
    int m() const { return static_cast<int>(test.size()); }

    // n >= 1, m >= 1, all entries finite. Throws std::invalid_argument.
    void validate() const;

    bool has_ties() const;
};

struct TieBreakConfig {
    // Noise half-width when every pooled score coincides; 0 disables the
    // fallback and makes that case an error.
    double absolute_floor = 1e-12;
};

// Adds i.i.d. uniform noise on (-g/2, g/2) with g = (min nonzero gap)/4, or
// g = absolute_floor when all values coincide. Order-preserving on inputs
// that were already tie-free; deterministic given the seed.
ScoreSet break_ties(const ScoreSet& scores, std::uint64_t seed,
                    const TieBreakConfig& config = {});

/**
 * Split conformal p-values stored as integer ranks: p_i = ranks[i]/(n+1)
 * with ranks[i] = 1 + #{j <= n : S_j >= S_{n+i}}. Keeping the integer rank
 * makes every comparison against a grid threshold l/(n+1) exact.
 */
struct PValueSet {
    int n = 0;
    std::vector<int> ranks;  // each in [1, n+1]

    int m() const { return static_cast<int>(ranks.size()); }
    double value(int i) const { return static_cast<double>(ranks[i]) / (n + 1); }

    void validate() const;
};

// Requires pairwise distinct pooled scores; throws otherwise with a hint to
// run break_ties first.
PValueSet conformal_pvalues(const ScoreSet& scores);

/**
 * Empirical distribution function of the p-values on the (n+1)-grid.
 * counts[l-1] = #{i : ranks[i] <= l} for l = 1..n+1, so
 * F_m(t) = count_at(floor((n+1)t)) / m.
 */
struct EcdfStep {
    int n = 0;
    int m = 0;
    std::vector<int> counts;

    // l in [0, n+1]; count_at(0) = 0 and count_at(n+1) = m.
    int count_at(int l) const { return l <= 0 ? 0 : counts[static_cast<std::size_t>(l) - 1]; }
    double value_at(int l) const { return static_cast<double>(count_at(l)) / m; }
};

EcdfStep ecdf(const PValueSet& pvals);

// sup over t in [0,1] of (F_m(t) - floor((n+1)t)/(n+1)), computed exactly as
// the max over the grid l = 0..n+1 (both step functions are constant between
// grid points). Always in [0,1].
Rational sup_deviation(const EcdfStep& e);

// Same statistic as an integer numerator over the fixed denominator m*(n+1);
// the cheap form used inside Monte-Carlo loops.
long long sup_deviation_numerator(const EcdfStep& e);

}  // namespace tconf

#endif
