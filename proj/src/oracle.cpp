#include "tconf/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "tconf/parallel.hpp"
#include "tconf/scores.hpp"

namespace tconf {

namespace {

void check_size(int n, int m, int size_cap) {
    if (n < 1 || m < 1) throw std::invalid_argument("oracle: need n >= 1 and m >= 1");
    if (size_cap > kOracleHardCap)
        throw std::invalid_argument("oracle: size cap above the hard limit");
    if (n + m > size_cap)
        throw std::invalid_argument("oracle: n+m exceeds the enumeration size cap");
}

// Enumerates all permutations of ranks 1..n+m assigned to the scores and
// accumulates trajectory counts in a flat base-(n+1) table. Parallel over the
// choice of the first position's rank; each worker owns a private table.
std::vector<long long> trajectory_counts(int n, int m) {
    const int total = n + m;
    std::size_t cells = 1;
    for (int i = 0; i < m; ++i) cells *= static_cast<std::size_t>(n + 1);

    std::vector<long long> counts(cells, 0);
    std::mutex merge_mutex;

    parallel_for(total, [&](std::int64_t first) {
        std::vector<long long> local(cells, 0);
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(total) - 1);
        for (int v = 1; v <= total; ++v)
            if (v != static_cast<int>(first) + 1) rest.push_back(v);

        std::vector<int> ranks(static_cast<std::size_t>(total));
        do {
            ranks[0] = static_cast<int>(first) + 1;
            std::copy(rest.begin(), rest.end(), ranks.begin() + 1);
            // p-value rank of test i: 1 + #{j <= n : score_j >= score_{n+i}},
            // which for distinct scores is a pure rank comparison.
            std::size_t code = 0;
            std::size_t base = 1;
            for (int i = 0; i < m; ++i) {
                int above = 0;
                for (int j = 0; j < n; ++j)
                    if (ranks[static_cast<std::size_t>(j)] >
                        ranks[static_cast<std::size_t>(n + i)])
                        ++above;
                code += static_cast<std::size_t>(above) * base;
                base *= static_cast<std::size_t>(n + 1);
            }
            local[code] += 1;
        } while (std::next_permutation(rest.begin(), rest.end()));

        std::lock_guard<std::mutex> lock(merge_mutex);
        for (std::size_t c = 0; c < cells; ++c) counts[c] += local[c];
    });
    return counts;
}

std::vector<int> decode_trajectory(std::size_t code, int n, int m) {
    std::vector<int> traj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        traj[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(n + 1)) + 1;
        code /= static_cast<std::size_t>(n + 1);
    }
    return traj;
}

}  // namespace

ExactLaw enumerate_law(int n, int m, int size_cap) {
    check_size(n, m, size_cap);
    const std::vector<long long> counts = trajectory_counts(n, m);
    const BigInt total = factorial_big(n + m);

    ExactLaw law;
    law.n = n;
    law.m = m;
    for (std::size_t code = 0; code < counts.size(); ++code) {
        if (counts[code] == 0) continue;
        law.pmf.emplace(decode_trajectory(code, n, m), Rational(counts[code], total));
    }
    return law;
}

std::map<Rational, Rational> exact_sup_deviation_law(int n, int m, int size_cap) {
    const ExactLaw law = enumerate_law(n, m, size_cap);
    std::map<Rational, Rational> out;
    for (const auto& [traj, prob] : law.pmf) {
        PValueSet pv;
        pv.n = n;
        pv.ranks = traj;
        out[sup_deviation(ecdf(pv))] += prob;
    }
    return out;
}

namespace {

// Visits every arrangement of the n calibration and m test scores in the
// pooled decreasing order (each equally likely under exchangeability) and
// hands the visitor the multiset of test ranks 1 + #{cal scores above}.
template <typename Fn>
void for_each_interleaving(int n, int m, int size_cap, Fn&& fn) {
    if (n < 1 || m < 1) throw std::invalid_argument("oracle: need n >= 1 and m >= 1");
    if (n + m > size_cap || size_cap > kPatternCap)
        throw std::invalid_argument("oracle: n+m exceeds the pattern enumeration cap");
    std::vector<char> pattern(static_cast<std::size_t>(n + m), 0);
    std::fill(pattern.end() - m, pattern.end(), char{1});
    std::vector<int> ranks(static_cast<std::size_t>(m));
    do {
        int cal_above = 0;
        int next = 0;
        for (char c : pattern) {
            if (c == 0)
                ++cal_above;
            else
                ranks[static_cast<std::size_t>(next++)] = 1 + cal_above;
        }
        fn(ranks);
    } while (std::next_permutation(pattern.begin(), pattern.end()));
}

}  // namespace

Rational exact_order_statistic_cdf(int n, int m, int k, int grid_index, int size_cap) {
    if (k < 1 || k > m) throw std::invalid_argument("exact_order_statistic_cdf: k outside [1, m]");
    if (grid_index < 0 || grid_index > n + 1)
        throw std::invalid_argument("exact_order_statistic_cdf: grid index outside [0, n+1]");
    long long favorable = 0;
    for_each_interleaving(n, m, size_cap, [&](const std::vector<int>& ranks) {
        // p_(k) <= l/(n+1)  <=>  at least k ranks are <= l
        const auto small = std::count_if(ranks.begin(), ranks.end(),
                                         [&](int r) { return r <= grid_index; });
        if (small >= k) ++favorable;
    });
    return Rational(favorable, binomial_big(n + m, m));
}

std::vector<Rational> exact_ecdf_count_law(int n, int m, int grid_index, int size_cap) {
    if (grid_index < 0 || grid_index > n + 1)
        throw std::invalid_argument("exact_ecdf_count_law: grid index outside [0, n+1]");
    std::vector<long long> counts(static_cast<std::size_t>(m) + 1, 0);
    for_each_interleaving(n, m, size_cap, [&](const std::vector<int>& ranks) {
        const auto small = std::count_if(ranks.begin(), ranks.end(),
                                         [&](int r) { return r <= grid_index; });
        counts[static_cast<std::size_t>(small)] += 1;
    });
    const BigInt total = binomial_big(n + m, m);
    std::vector<Rational> law;
    law.reserve(counts.size());
    for (long long c : counts) law.emplace_back(c, total);
    return law;
}

}  // namespace tconf
