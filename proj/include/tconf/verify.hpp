#ifndef TCONF_VERIFY_HPP
#define TCONF_VERIFY_HPP

#include <span>
#include <string>
#include <vector>

namespace tconf {

// Exact-equality checks pitting the closed-form laws against the enumeration
// oracles. Every comparison is in rational arithmetic with zero tolerance.

struct CheckResult {
    std::string name;
    bool pass = false;
    long long instances = 0;  // number of exact comparisons performed
    std::string detail;       // first failure, when any
};

// enumerate_law == joint pmf trajectory-by-trajectory, all n+m <= size_cap.
// perturb (test hook) offsets one compared value to force a failure.
CheckResult check_joint_law_equivalence(int size_cap, double perturb = 0.0);

// Pushforward of the exact law to histograms equals 1/binom(n+m, m).
CheckResult check_histogram_uniformity(int size_cap);

// Product of sequential conditionals equals the joint pmf on every
// trajectory, all n+m <= size_cap.
CheckResult check_chain_rule(int size_cap);

// Joint pmf equals conditional-given-histogram times histogram pmf.
CheckResult check_trajectory_conditional(int size_cap);

// Closed-form count law equals the enumerated law of m*F_m(alpha), with the
// per-alpha normalization Sum_k P(k) = 1.
CheckResult check_ecdf_count_law(int nm_cap, std::span<const double> alphas);

// Exact order-statistic c.d.f. equals the tail sum of the count law on the
// whole grid.
CheckResult check_order_statistic_identity(int nm_cap);

// Two-color conditional probabilities match the pushforward of the exact law
// through 1{p > alpha} for every history.
CheckResult check_two_color_reduction(int n_cap, int m_cap, std::span<const double> alphas);

// The full battery, sized for a CLI run; size_cap bounds the factorial
// enumerations.
std::vector<CheckResult> run_oracle_suite(int size_cap, double perturb = 0.0);

}  // namespace tconf

#endif
