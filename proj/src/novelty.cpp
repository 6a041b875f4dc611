#include "tconf/novelty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tconf/bounds.hpp"
#include "tconf/gridmath.hpp"
#include "tconf/parallel.hpp"

namespace tconf {

std::vector<int> reject(const PValueSet& pvals, double t) {
    pvals.validate();
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("reject: t outside [0,1]");
    const int cutoff = grid_floor_index(t, pvals.n);
    std::vector<int> out;
    for (int i = 0; i < pvals.m(); ++i)
        if (pvals.ranks[static_cast<std::size_t>(i)] <= cutoff) out.push_back(i);
    return out;
}

FdpTdp fdp_tdp(const std::vector<int>& rejected, const std::vector<int>& h0, int m) {
    std::vector<char> is_null(static_cast<std::size_t>(m), 0);
    long long n_null = 0;
    for (int i : h0) {
        if (i < 0 || i >= m) throw std::invalid_argument("fdp_tdp: h0 index outside [0, m)");
        if (!is_null[static_cast<std::size_t>(i)]) ++n_null;
        is_null[static_cast<std::size_t>(i)] = 1;
    }
    long long false_disc = 0, true_disc = 0;
    for (int i : rejected) {
        if (i < 0 || i >= m) throw std::invalid_argument("fdp_tdp: rejected index outside [0, m)");
        if (is_null[static_cast<std::size_t>(i)])
            ++false_disc;
        else
            ++true_disc;
    }
    const long long n_rej = static_cast<long long>(rejected.size());
    return FdpTdp{Rational(false_disc, std::max(1LL, n_rej)),
                  Rational(true_disc, std::max(1LL, m - n_null))};
}

M0Estimate m0_hat_dkw(const PValueSet& pvals, double delta, int iterations) {
    pvals.validate();
    require_probability(delta, "delta");
    const int n = pvals.n;
    const int m = pvals.m();
    const EcdfStep e = ecdf(pvals);

    // Scan r downward; lambda depends on r, so each candidate is checked
    // against its own envelope. The first r that passes is the maximum.
    for (int r = m; r >= 1; --r) {
        const double lam = lambda_dkw(DkwParams(n, r, delta, iterations));
        bool ok = true;
        for (int l = 0; l <= n; ++l) {
            const double lhs = (static_cast<double>(m - e.count_at(l)) + r * lam) * (n + 1);
            const double rhs = static_cast<double>(r) * (n + 1 - l);
            if (lhs < rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return M0Estimate{r, M0Estimate::Method::dkw};
    }
    return M0Estimate{m, M0Estimate::Method::dkw};  // empty set: fall back to m
}

M0Estimate m0_hat_simes(const PValueSet& pvals, double delta) {
    pvals.validate();
    require_probability(delta, "delta");
    const int n = pvals.n;
    const int m = pvals.m();
    const EcdfStep e = ecdf(pvals);

    double best = std::numeric_limits<double>::infinity();
    for (int l = 1; l <= n; ++l) {
        const double t = static_cast<double>(l) / (n + 1);
        if (!(t < delta)) break;
        best = std::min(best, static_cast<double>(m - e.count_at(l)) / (1.0 - t / delta));
    }
    if (!std::isfinite(best)) return M0Estimate{m, M0Estimate::Method::simes};
    const int value = static_cast<int>(std::min<long long>(m, ceil_snapped(best)));
    return M0Estimate{std::max(1, value), M0Estimate::Method::simes};
}

double fdp_bound_dkw(const PValueSet& pvals, double t, double delta, int iterations) {
    require_probability(t, "t");
    const M0Estimate m0 = m0_hat_dkw(pvals, delta, iterations);
    const double lam = lambda_dkw(DkwParams(pvals.n, m0.value, delta, iterations));
    const EcdfStep e = ecdf(pvals);
    const int l = grid_floor_index(t, pvals.n);
    const double identity = static_cast<double>(l) / (pvals.n + 1);
    return (m0.value * identity + m0.value * lam) / std::max(1, e.count_at(l));
}

double fdp_bound_simes(const PValueSet& pvals, double t, double delta) {
    require_probability(t, "t");
    require_probability(delta, "delta");
    const M0Estimate m0 = m0_hat_simes(pvals, delta);
    const EcdfStep e = ecdf(pvals);
    const int l = grid_floor_index(t, pvals.n);
    return (m0.value * t / delta) / std::max(1, e.count_at(l));
}

BhResult bh_threshold(const PValueSet& pvals, double alpha) {
    pvals.validate();
    require_probability(alpha, "alpha");
    const int m = pvals.m();
    std::vector<int> sorted(pvals.ranks);
    std::sort(sorted.begin(), sorted.end());

    BhResult out;
    for (int k = m; k >= 1; --k) {
        // step-up: p_(k) <= alpha k/m
        const double p = static_cast<double>(sorted[static_cast<std::size_t>(k) - 1]) /
                         (pvals.n + 1);
        if (p <= alpha * k / m) {
            out.k_hat = k;
            break;
        }
    }
    out.threshold = out.k_hat > 0 ? alpha * out.k_hat / m : 0.0;
    if (out.k_hat > 0) {
        for (int i = 0; i < m; ++i) {
            const double p = static_cast<double>(pvals.ranks[static_cast<std::size_t>(i)]) /
                             (pvals.n + 1);
            if (p <= out.threshold) out.rejected.push_back(i);
        }
    }
    return out;
}

std::pair<double, double> adadetect_fdp_bounds(const PValueSet& pvals, double alpha,
                                               double delta, int iterations) {
    require_probability(alpha, "alpha");
    require_probability(delta, "delta");
    const BhResult bh = bh_threshold(pvals, alpha);
    if (bh.k_hat == 0) return {0.0, 0.0};
    const int m = pvals.m();
    const M0Estimate m0d = m0_hat_dkw(pvals, delta, iterations);
    const double lam = lambda_dkw(DkwParams(pvals.n, m0d.value, delta, iterations));
    const double bound_dkw =
        alpha * m0d.value / m + m0d.value * lam / std::max(1, bh.k_hat);
    const M0Estimate m0s = m0_hat_simes(pvals, delta);
    const double bound_simes = m0s.value * alpha / (m * delta);
    return {bound_dkw, bound_simes};
}

NdData synth_nd(int n, int m0, int m1, double shift, Rng& rng) {
    if (n < 1) throw std::invalid_argument("synth_nd: need n >= 1");
    if (m0 < 0 || m1 < 0 || m0 + m1 < 1)
        throw std::invalid_argument("synth_nd: need m0, m1 >= 0 and m0+m1 >= 1");
    NdData data;
    data.calibration.resize(static_cast<std::size_t>(n));
    for (auto& s : data.calibration) s = rng.normal();
    data.test.reserve(static_cast<std::size_t>(m0 + m1));
    for (int i = 0; i < m0; ++i) {
        data.test.push_back(rng.normal());
        data.h0.push_back(i);
    }
    for (int i = 0; i < m1; ++i) data.test.push_back(rng.normal(shift, 1.0));
    return data;
}

NdData synth_nd(int n, int m0, int m1, double shift, std::uint64_t seed) {
    Rng rng = Rng::stream(seed, 0);
    return synth_nd(n, m0, m1, shift, rng);
}

RejectionCurve rejection_curve(const PValueSet& pvals, const std::vector<int>& h0, double delta,
                               int iterations) {
    pvals.validate();
    require_probability(delta, "delta");
    const int n = pvals.n;
    const int m = pvals.m();
    const EcdfStep e = ecdf(pvals);

    EcdfStep null_e;
    const bool with_truth = !h0.empty();
    if (with_truth) {
        PValueSet null_pv;
        null_pv.n = n;
        for (int i : h0) null_pv.ranks.push_back(pvals.ranks[static_cast<std::size_t>(i)]);
        null_e = ecdf(null_pv);
    }

    RejectionCurve curve;
    curve.n = n;
    curve.m = m;
    curve.delta = delta;
    const M0Estimate m0d = m0_hat_dkw(pvals, delta, iterations);
    const M0Estimate m0s = m0_hat_simes(pvals, delta);
    curve.m0_dkw = m0d.value;
    curve.m0_simes = m0s.value;
    const double lam = lambda_dkw(DkwParams(n, m0d.value, delta, iterations));
    const int h1 = m - static_cast<int>(h0.size());

    for (int l = 1; l <= n; ++l) {
        const double t = static_cast<double>(l) / (n + 1);
        const int rej = e.count_at(l);
        curve.threshold.push_back(t);
        curve.reject_count.push_back(rej);
        curve.bound_dkw.push_back((m0d.value * t + m0d.value * lam) / std::max(1, rej));
        curve.bound_simes.push_back((m0s.value * t / delta) / std::max(1, rej));
        if (with_truth) {
            const int null_rej = null_e.count_at(l);
            curve.null_reject_count.push_back(null_rej);
            curve.fdp.emplace_back(null_rej, std::max(1, rej));
            curve.tdp.emplace_back(rej - null_rej, std::max(1, h1));
        }
    }
    return curve;
}

NdCoverage nd_coverage_simulation(int n, int m0, int m1, double shift, double delta,
                                  double bh_alpha, std::uint64_t seed, int replicates,
                                  int iterations) {
    require_probability(delta, "delta");
    require_probability(bh_alpha, "alpha");
    const int m = m0 + m1;

    std::vector<unsigned char> dkw_bad(static_cast<std::size_t>(replicates), 0);
    std::vector<unsigned char> simes_bad(static_cast<std::size_t>(replicates), 0);
    std::vector<unsigned char> m0d_under(static_cast<std::size_t>(replicates), 0);
    std::vector<unsigned char> m0s_under(static_cast<std::size_t>(replicates), 0);
    std::vector<double> bh_fdp(static_cast<std::size_t>(replicates), 0.0);
    std::vector<double> bh_tdp(static_cast<std::size_t>(replicates), 0.0);

    parallel_for(replicates, [&](std::int64_t rep) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(rep));
        const NdData data = synth_nd(n, m0, m1, shift, rng);
        ScoreSet scores{data.calibration, data.test};
        if (scores.has_ties()) scores = break_ties(scores, splitmix64(seed) + rep);
        const PValueSet pv = conformal_pvalues(scores);

        const RejectionCurve curve = rejection_curve(pv, data.h0, delta, iterations);
        for (std::size_t i = 0; i < curve.threshold.size(); ++i) {
            if (to_double(curve.fdp[i]) > curve.bound_dkw[i])
                dkw_bad[static_cast<std::size_t>(rep)] = 1;
            if (to_double(curve.fdp[i]) > curve.bound_simes[i])
                simes_bad[static_cast<std::size_t>(rep)] = 1;
        }
        if (curve.m0_dkw < m0) m0d_under[static_cast<std::size_t>(rep)] = 1;
        if (curve.m0_simes < m0) m0s_under[static_cast<std::size_t>(rep)] = 1;

        const BhResult bh = bh_threshold(pv, bh_alpha);
        const FdpTdp rates = fdp_tdp(bh.rejected, data.h0, m);
        bh_fdp[static_cast<std::size_t>(rep)] = to_double(rates.fdp);
        bh_tdp[static_cast<std::size_t>(rep)] = to_double(rates.tdp);
    });

    NdCoverage cov;
    cov.replicates = replicates;
    for (int rep = 0; rep < replicates; ++rep) {
        cov.dkw_curve_violations += dkw_bad[static_cast<std::size_t>(rep)];
        cov.simes_curve_violations += simes_bad[static_cast<std::size_t>(rep)];
        cov.m0_dkw_underestimates += m0d_under[static_cast<std::size_t>(rep)];
        cov.m0_simes_underestimates += m0s_under[static_cast<std::size_t>(rep)];
        cov.bh_mean_fdp += bh_fdp[static_cast<std::size_t>(rep)];
        cov.bh_mean_tdp += bh_tdp[static_cast<std::size_t>(rep)];
    }
    cov.bh_mean_fdp /= replicates;
    cov.bh_mean_tdp /= replicates;
    return cov;
}

}  // namespace tconf
