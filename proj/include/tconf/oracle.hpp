#ifndef TCONF_ORACLE_HPP
#define TCONF_ORACLE_HPP

#include <map>
#include <vector>

#include "tconf/rational.hpp"

namespace tconf {

// Brute-force ground truth for small instances. A tie-free exchangeable score
// vector has ranks uniform over the (n+m)! permutations; enumerating them and
// applying the rank definition of the p-values gives the exact joint law with
// no appeal to the urn formulas, which is what makes it an oracle for them.

struct ExactLaw {
    int n = 0;
    int m = 0;
    std::map<std::vector<int>, Rational> pmf;  // trajectory of ranks -> probability
};

inline constexpr int kOracleDefaultCap = 9;
inline constexpr int kOracleHardCap = 11;  // 12! permutations is no longer desk scale

ExactLaw enumerate_law(int n, int m, int size_cap = kOracleDefaultCap);

// Pushforward of the exact law through the sup-deviation statistic.
std::map<Rational, Rational> exact_sup_deviation_law(int n, int m,
                                                     int size_cap = kOracleDefaultCap);

// Statistics that depend on the ranks only through the calibration/test
// interleaving pattern are enumerated over the binom(n+m, m) equally likely
// patterns instead of the (n+m)! permutations, which keeps instances like
// n = m = 6 exact without the factorial blow-up.
inline constexpr int kPatternCap = 24;

// P(p_(k) <= l/(n+1)) by exhaustive pattern enumeration, k in [1, m],
// l in [0, n+1].
Rational exact_order_statistic_cdf(int n, int m, int k, int grid_index,
                                   int size_cap = kPatternCap);

// Law of m F_m(l/(n+1)): exact probabilities of counts 0..m.
std::vector<Rational> exact_ecdf_count_law(int n, int m, int grid_index,
                                           int size_cap = kPatternCap);

}  // namespace tconf

#endif
