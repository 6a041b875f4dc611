#ifndef TCONF_TEMPLATES_HPP
#define TCONF_TEMPLATES_HPP

#include <cstdint>
#include <vector>

#include "tconf/polya.hpp"

namespace tconf {

/**
 * One-parameter threshold family t_k(lambda), k in a set K of order-statistic
 * indices, with t_k(0) = 0 and t_k strictly increasing in lambda. Calibrating
 * lambda over P_{n,m} turns the family into a simultaneous confidence
 * envelope for the p-value ecdf: F_m(t_k(lambda*)) <= k/m for all k in K.
 */
struct Template {
    enum class Kind { linear, beta };

    Kind kind;
    int m;
    std::vector<int> k_set;  // strictly increasing, subset of {1..m}

    // t_k(lambda). Linear: k lambda / m. Beta: lambda-quantile of
    // Beta(k, m+1-k), i.e. the null distribution of the k-th order statistic
    // of m uniforms.
    double threshold(int k, double lambda) const;

    // t_k^{-1}(p). Linear: m p / k (may exceed 1). Beta: Beta(k, m+1-k)
    // c.d.f. at p.
    double inverse(int k, double p) const;
};

Template linear_template(int m, std::vector<int> k_set = {});  // default K = {1..m}
Template beta_template(int m, std::vector<int> k_set = {});    // default log-spaced K

// {1 + j ceil(log m) : j >= 1} intersected with {1..m} ({1} when m = 1).
std::vector<int> default_beta_k_set(int m);

// Which order statistic enters the calibration probability. The kth form is
// the calibration as displayed in the source formula; the envelope statement
// itself involves p_(k+1), and p_(k) <= p_(k+1) makes the kth form the
// conservative default. Both are exposed.
enum class CalibrationIndex { kth, kth_plus_one };

struct CalibratedEnvelope {
    Template tmpl;
    double lambda_star = 0.0;
    std::vector<double> thresholds;  // t_k(lambda_star), k in K
    bool vacuous = false;            // no feasible candidate; lambda_star = 0
};

// Monte-Carlo calibration over P_{n,m}: evaluates the coverage statistic
// W = min_{k in K} t_k^{-1}(p_(k)) once per urn replicate and snaps down to
// the largest candidate in Lambda = {t_k^{-1}(l/(n+1))} (restricted to [0,1],
// the template's parameter range) that keeps the empirical coverage
// P(W > lambda) >= 1 - delta. Requires reps >= 1000.
CalibratedEnvelope calibrate_template(const PolyaLaw& law, const Template& tmpl, double delta,
                                      std::uint64_t seed, int reps,
                                      CalibrationIndex index = CalibrationIndex::kth);

}  // namespace tconf

#endif
