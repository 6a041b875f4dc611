#include "tconf/scores.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tconf/rng.hpp"

namespace tconf {

namespace {

std::vector<double> pooled(const ScoreSet& s) {
    std::vector<double> all(s.calibration);
    all.insert(all.end(), s.test.begin(), s.test.end());
    return all;
}

}  // namespace

void ScoreSet::validate() const {
    if (calibration.empty()) throw std::invalid_argument("ScoreSet: need n >= 1 calibration scores");
    if (test.empty()) throw std::invalid_argument("ScoreSet: need m >= 1 test scores");
    for (double v : calibration)
        if (!std::isfinite(v)) throw std::invalid_argument("ScoreSet: non-finite calibration score");
    for (double v : test)
        if (!std::isfinite(v)) throw std::invalid_argument("ScoreSet: non-finite test score");
}

bool ScoreSet::has_ties() const {
    std::vector<double> all = pooled(*this);
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) != all.end();
}

ScoreSet break_ties(const ScoreSet& scores, std::uint64_t seed, const TieBreakConfig& config) {
    scores.validate();

    std::vector<double> all = pooled(scores);
    std::sort(all.begin(), all.end());
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < all.size(); ++i) {
        const double gap = all[i] - all[i - 1];
        if (gap > 0.0 && gap < min_gap) min_gap = gap;
    }

    double g;
    if (std::isfinite(min_gap)) {
        g = min_gap / 4.0;
    } else if (all.size() == 1) {
        return scores;  // a single score cannot tie
    } else if (config.absolute_floor > 0.0) {
        g = config.absolute_floor;
    } else {
        throw std::runtime_error("break_ties: all scores identical and noise floor disabled");
    }

    const int total = scores.n() + scores.m();
    ScoreSet out = scores;
    // Noise magnitude < g/2 <= (min gap)/8, so originally distinct values keep
    // their strict order. In the astronomically unlikely event the perturbed
    // values still collide, redraw from the next stream.
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        Rng rng = Rng::stream(seed, attempt);
        for (int i = 0; i < scores.n(); ++i)
            out.calibration[i] = scores.calibration[i] + rng.uniform(-g / 2.0, g / 2.0);
        for (int i = 0; i < scores.m(); ++i)
            out.test[i] = scores.test[i] + rng.uniform(-g / 2.0, g / 2.0);
        if (!out.has_ties()) return out;
        (void)total;
    }
    throw std::runtime_error("break_ties: could not produce distinct scores");
}

void PValueSet::validate() const {
    if (n < 1) throw std::invalid_argument("PValueSet: n must be >= 1");
    if (ranks.empty()) throw std::invalid_argument("PValueSet: need m >= 1 ranks");
    for (int r : ranks)
        if (r < 1 || r > n + 1) throw std::invalid_argument("PValueSet: rank outside [1, n+1]");
}

PValueSet conformal_pvalues(const ScoreSet& scores) {
    scores.validate();
    if (scores.has_ties())
        throw std::invalid_argument(
            "conformal_pvalues: tied scores; apply break_ties before computing p-values");

    const int n = scores.n();
    std::vector<double> sorted_cal(scores.calibration);
    std::sort(sorted_cal.begin(), sorted_cal.end());

    PValueSet out;
    out.n = n;
    out.ranks.reserve(scores.test.size());
    for (double s : scores.test) {
        // #{j : S_j >= s} = n - #{j : S_j < s}; no calibration score equals s.
        const auto below =
            std::lower_bound(sorted_cal.begin(), sorted_cal.end(), s) - sorted_cal.begin();
        out.ranks.push_back(1 + n - static_cast<int>(below));
    }
    return out;
}

EcdfStep ecdf(const PValueSet& pvals) {
    pvals.validate();
    EcdfStep e;
    e.n = pvals.n;
    e.m = pvals.m();
    e.counts.assign(static_cast<std::size_t>(pvals.n) + 1, 0);
    for (int r : pvals.ranks) e.counts[static_cast<std::size_t>(r) - 1] += 1;
    for (std::size_t l = 1; l < e.counts.size(); ++l) e.counts[l] += e.counts[l - 1];
    return e;
}

long long sup_deviation_numerator(const EcdfStep& e) {
    // max over l of counts[l]*(n+1) - l*m, all over the denominator m*(n+1);
    // l = 0 contributes 0, so the max is never negative.
    long long best = 0;
    for (int l = 1; l <= e.n + 1; ++l) {
        const long long num = static_cast<long long>(e.count_at(l)) * (e.n + 1) -
                              static_cast<long long>(l) * e.m;
        if (num > best) best = num;
    }
    return best;
}

Rational sup_deviation(const EcdfStep& e) {
    return Rational(sup_deviation_numerator(e),
                    static_cast<long long>(e.m) * (e.n + 1));
}

}  // namespace tconf
