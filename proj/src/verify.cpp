#include "tconf/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <vector>

#include "tconf/gridmath.hpp"
#include "tconf/oracle.hpp"
#include "tconf/polya.hpp"

namespace tconf {

namespace {

std::string instance_tag(int n, int m) {
    std::ostringstream os;
    os << "n=" << n << " m=" << m;
    return os.str();
}

// Odometer over all trajectories in [1, n+1]^m.
template <typename Fn>
void for_each_trajectory(int n, int m, Fn&& fn) {
    std::vector<int> traj(static_cast<std::size_t>(m), 1);
    for (;;) {
        fn(traj);
        int pos = 0;
        while (pos < m && ++traj[static_cast<std::size_t>(pos)] > n + 1) {
            traj[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == m) break;
    }
}

}  // namespace

CheckResult check_joint_law_equivalence(int size_cap, double perturb) {
    CheckResult res{"joint law: enumeration vs closed form", true, 0, ""};
    for (int n = 1; n < size_cap; ++n) {
        for (int m = 1; n + m <= size_cap; ++m) {
            const PolyaLaw law(n, m);
            const ExactLaw exact = enumerate_law(n, m, size_cap);
            std::size_t cells = 1;
            for (int i = 0; i < m; ++i) cells *= static_cast<std::size_t>(n + 1);
            if (exact.pmf.size() != cells) {
                res.pass = false;
                res.detail = instance_tag(n, m) + ": enumeration missed trajectories";
                return res;
            }
            Rational total = 0;
            for (const auto& [traj, prob] : exact.pmf) {
                Rational formula = joint_pmf_exact(law, traj);
                if (perturb != 0.0 && res.instances == 0) formula += Rational(perturb);
                ++res.instances;
                total += prob;
                if (formula != prob) {
                    res.pass = false;
                    res.detail = instance_tag(n, m) + ": pmf mismatch on a trajectory";
                    return res;
                }
            }
            if (total != 1) {
                res.pass = false;
                res.detail = instance_tag(n, m) + ": enumerated mass != 1";
                return res;
            }
        }
    }
    return res;
}

CheckResult check_histogram_uniformity(int size_cap) {
    CheckResult res{"histogram pushforward: uniform over compositions", true, 0, ""};
    for (int n = 1; n < size_cap; ++n) {
        for (int m = 1; n + m <= size_cap; ++m) {
            const PolyaLaw law(n, m);
            const ExactLaw exact = enumerate_law(n, m, size_cap);
            std::map<std::vector<int>, Rational> mass;
            for (const auto& [traj, prob] : exact.pmf)
                mass[trajectory_histogram(law, traj).bins] += prob;
            const Rational expected(1, binomial_big(n + m, m));
            if (mass.size() != static_cast<std::size_t>(binomial_big(n + m, m))) {
                res.pass = false;
                res.detail = instance_tag(n, m) + ": wrong number of histograms";
                return res;
            }
            for (const auto& [bins, prob] : mass) {
                ++res.instances;
                if (prob != expected || prob != histogram_pmf(law, Histogram{bins})) {
                    res.pass = false;
                    res.detail = instance_tag(n, m) + ": histogram mass not uniform";
                    return res;
                }
            }
        }
    }
    return res;
}

CheckResult check_chain_rule(int size_cap) {
    CheckResult res{"chain rule: sequential product vs joint", true, 0, ""};
    for (int n = 1; n < size_cap; ++n) {
        for (int m = 1; n + m <= size_cap; ++m) {
            const PolyaLaw law(n, m);
            bool bad = false;
            for_each_trajectory(n, m, [&](const std::vector<int>& traj) {
                if (bad) return;
                Rational prod = 1;
                for (int i = 0; i < m; ++i)
                    prod *= sequential_pmf(
                        law, std::span<const int>(traj.data(), static_cast<std::size_t>(i)),
                        traj[static_cast<std::size_t>(i)]);
                ++res.instances;
                if (prod != joint_pmf_exact(law, traj)) bad = true;
            });
            if (bad) {
                res.pass = false;
                res.detail = instance_tag(n, m) + ": chain-rule product differs";
                return res;
            }
        }
    }
    return res;
}

CheckResult check_trajectory_conditional(int size_cap) {
    CheckResult res{"conditional-given-histogram times histogram vs joint", true, 0, ""};
    for (int n = 1; n < size_cap; ++n) {
        for (int m = 1; n + m <= size_cap; ++m) {
            const PolyaLaw law(n, m);
            bool bad = false;
            for_each_trajectory(n, m, [&](const std::vector<int>& traj) {
                if (bad) return;
                const Rational lhs = trajectory_conditional_pmf(law, traj) *
                                     histogram_pmf(law, trajectory_histogram(law, traj));
                ++res.instances;
                if (lhs != joint_pmf_exact(law, traj)) bad = true;
            });
            if (bad) {
                res.pass = false;
                res.detail = instance_tag(n, m) + ": factorization fails";
                return res;
            }
        }
    }
    return res;
}

CheckResult check_ecdf_count_law(int nm_cap, std::span<const double> alphas) {
    CheckResult res{"ecdf count law: closed form vs enumeration", true, 0, ""};
    for (int n = 1; n <= nm_cap; ++n) {
        for (int m = 1; m <= nm_cap; ++m) {
            const PolyaLaw law(n, m);
            for (double alpha : alphas) {
                const std::vector<Rational> enumerated =
                    exact_ecdf_count_law(n, m, grid_floor_index(alpha, n));
                Rational total = 0;
                for (int k = 0; k <= m; ++k) {
                    const Rational formula = ecdf_count_pmf_exact(law, alpha, k);
                    total += formula;
                    ++res.instances;
                    if (formula != enumerated[static_cast<std::size_t>(k)]) {
                        res.pass = false;
                        res.detail = instance_tag(n, m) + ": count pmf mismatch";
                        return res;
                    }
                }
                if (total != 1) {
                    res.pass = false;
                    res.detail = instance_tag(n, m) + ": count pmf does not normalize";
                    return res;
                }
            }
        }
    }
    return res;
}

CheckResult check_order_statistic_identity(int nm_cap) {
    CheckResult res{"order-statistic cdf vs count-law tail", true, 0, ""};
    for (int n = 1; n <= nm_cap; ++n) {
        for (int m = 1; m <= nm_cap; ++m) {
            const PolyaLaw law(n, m);
            for (int l = 1; l <= n; ++l) {
                const double t = static_cast<double>(l) / (n + 1);
                for (int k = 1; k <= m; ++k) {
                    Rational tail = 0;
                    for (int j = k; j <= m; ++j) tail += ecdf_count_pmf_exact(law, t, j);
                    ++res.instances;
                    if (tail != exact_order_statistic_cdf(n, m, k, l)) {
                        res.pass = false;
                        res.detail = instance_tag(n, m) + ": order-statistic identity fails";
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

CheckResult check_two_color_reduction(int n_cap, int m_cap, std::span<const double> alphas) {
    CheckResult res{"two-color conditionals vs exact pushforward", true, 0, ""};
    for (int n = 1; n <= n_cap; ++n) {
        for (int m = 1; m <= m_cap; ++m) {
            const PolyaLaw law(n, m);
            const ExactLaw exact = enumerate_law(n, m, kOracleDefaultCap);
            for (double alpha : alphas) {
                const int cut = grid_floor_index(alpha, n);
                // Joint law of the indicator vector (1{p_i > alpha}).
                std::map<std::vector<int>, Rational> zlaw;
                for (const auto& [traj, prob] : exact.pmf) {
                    std::vector<int> z(traj.size());
                    for (std::size_t i = 0; i < traj.size(); ++i) z[i] = traj[i] > cut ? 1 : 0;
                    zlaw[z] += prob;
                }
                // Conditional of each next indicator given each history.
                for (int i = 0; i < m; ++i) {
                    std::map<std::vector<int>, std::array<Rational, 2>> next_mass;
                    std::map<std::vector<int>, Rational> hist_mass;
                    for (const auto& [z, prob] : zlaw) {
                        std::vector<int> head(z.begin(), z.begin() + i);
                        next_mass[head][static_cast<std::size_t>(z[static_cast<std::size_t>(i)])] +=
                            prob;
                        hist_mass[head] += prob;
                    }
                    for (const auto& [head, mass] : next_mass) {
                        const TwoColorStep step = two_color_sequential(
                            law, alpha, std::span<const int>(head.data(), head.size()));
                        ++res.instances;
                        if (step.p_below * hist_mass[head] != mass[0] ||
                            step.p_above * hist_mass[head] != mass[1]) {
                            res.pass = false;
                            res.detail = instance_tag(n, m) + ": two-color conditional differs";
                            return res;
                        }
                        if (step.p_below + step.p_above != 1) {
                            res.pass = false;
                            res.detail = instance_tag(n, m) + ": two-color mass not 1";
                            return res;
                        }
                    }
                }
            }
        }
    }
    return res;
}

std::vector<CheckResult> run_oracle_suite(int size_cap, double perturb) {
    const std::array<double, 4> alphas{0.1, 0.3, 0.5, 0.9};
    std::vector<CheckResult> results;
    results.push_back(check_joint_law_equivalence(size_cap, perturb));
    results.push_back(check_histogram_uniformity(size_cap));
    results.push_back(check_chain_rule(std::min(size_cap, 8)));
    results.push_back(check_trajectory_conditional(std::min(size_cap, 8)));
    results.push_back(check_ecdf_count_law(6, alphas));
    results.push_back(check_order_statistic_identity(6));
    results.push_back(check_two_color_reduction(3, 3, alphas));
    return results;
}

}  // namespace tconf
