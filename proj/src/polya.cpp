#include "tconf/polya.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tconf/gridmath.hpp"

namespace tconf {

PolyaLaw::PolyaLaw(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < 1) throw std::invalid_argument("PolyaLaw: need n >= 1 and m >= 1");
}

namespace {

void check_trajectory(const PolyaLaw& law, std::span<const int> traj, bool full_length) {
    if (full_length && static_cast<int>(traj.size()) != law.m)
        throw std::invalid_argument("trajectory length must equal m");
    for (int j : traj)
        if (j < 1 || j > law.n + 1)
            throw std::invalid_argument("trajectory entry outside [1, n+1]");
}

std::vector<int> multiplicities(const PolyaLaw& law, std::span<const int> traj) {
    std::vector<int> mult(static_cast<std::size_t>(law.n) + 1, 0);
    for (int j : traj) mult[static_cast<std::size_t>(j) - 1] += 1;
    return mult;
}

}  // namespace

PValueSet sample_urn_one(const PolyaLaw& law, Rng& rng) {
    PValueSet out;
    out.n = law.n;
    out.ranks.reserve(law.m);
    for (int i = 0; i < law.m; ++i) {
        // n+1+i balls in the urn: n+1 initial ones plus one copy per past
        // draw. Drawing a copy reuses that draw's color.
        const auto t = rng.uniform_below(static_cast<std::uint64_t>(law.n + 1 + i));
        if (t < static_cast<std::uint64_t>(law.n + 1))
            out.ranks.push_back(static_cast<int>(t) + 1);
        else
            out.ranks.push_back(out.ranks[t - (law.n + 1)]);
    }
    return out;
}

PValueSet sample_representation_one(const PolyaLaw& law, Rng& rng) {
    std::vector<double> u(static_cast<std::size_t>(law.n));
    for (auto& v : u) v = rng.uniform();
    std::sort(u.begin(), u.end());

    PValueSet out;
    out.n = law.n;
    out.ranks.reserve(law.m);
    for (int i = 0; i < law.m; ++i) {
        const double v = rng.uniform();
        const auto cell = std::upper_bound(u.begin(), u.end(), v) - u.begin();
        out.ranks.push_back(static_cast<int>(cell) + 1);
    }
    return out;
}

std::vector<PValueSet> sample_urn(const PolyaLaw& law, std::uint64_t seed, int reps) {
    std::vector<PValueSet> out(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        out[static_cast<std::size_t>(r)] = sample_urn_one(law, rng);
    }
    return out;
}

std::vector<PValueSet> sample_representation(const PolyaLaw& law, std::uint64_t seed, int reps) {
    std::vector<PValueSet> out(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        out[static_cast<std::size_t>(r)] = sample_representation_one(law, rng);
    }
    return out;
}

Rational joint_pmf_exact(const PolyaLaw& law, std::span<const int> traj) {
    if (law.n + law.m > kExactArithmeticLimit)
        throw std::invalid_argument("joint_pmf_exact: n+m exceeds the exact-arithmetic limit");
    check_trajectory(law, traj, true);
    BigInt num = factorial_big(law.n);
    for (int mult : multiplicities(law, traj)) num *= factorial_big(mult);
    return Rational(num, factorial_big(law.n + law.m));
}

double joint_log_pmf(const PolyaLaw& law, std::span<const int> traj) {
    check_trajectory(law, traj, true);
    double lp = std::lgamma(law.n + 1.0) - std::lgamma(law.n + law.m + 1.0);
    for (int mult : multiplicities(law, traj)) lp += std::lgamma(mult + 1.0);
    return lp;
}

double joint_pmf(const PolyaLaw& law, std::span<const int> traj) {
    if (law.n + law.m <= kExactArithmeticLimit) return to_double(joint_pmf_exact(law, traj));
    return std::exp(joint_log_pmf(law, traj));
}

Rational sequential_pmf(const PolyaLaw& law, std::span<const int> history, int next) {
    if (static_cast<int>(history.size()) >= law.m)
        throw std::invalid_argument("sequential_pmf: history length must be < m");
    check_trajectory(law, history, false);
    if (next < 1 || next > law.n + 1)
        throw std::invalid_argument("sequential_pmf: next color outside [1, n+1]");
    const long long hits = std::count(history.begin(), history.end(), next);
    return Rational(1 + hits, law.n + 1 + static_cast<long long>(history.size()));
}

Histogram trajectory_histogram(const PolyaLaw& law, std::span<const int> traj) {
    check_trajectory(law, traj, true);
    return Histogram{multiplicities(law, traj)};
}

Rational histogram_pmf(const PolyaLaw& law, const Histogram& h) {
    if (static_cast<int>(h.bins.size()) != law.n + 1)
        throw std::invalid_argument("histogram_pmf: need n+1 bins");
    long long total = 0;
    for (int b : h.bins) {
        if (b < 0) throw std::invalid_argument("histogram_pmf: negative bin");
        total += b;
    }
    if (total != law.m) throw std::invalid_argument("histogram_pmf: bins must sum to m");
    return Rational(1, binomial_big(law.n + law.m, law.m));
}

Rational trajectory_conditional_pmf(const PolyaLaw& law, std::span<const int> traj) {
    check_trajectory(law, traj, true);
    BigInt num = 1;
    for (int mult : multiplicities(law, traj)) num *= factorial_big(mult);
    return Rational(num, factorial_big(law.m));
}

// The count F_m(alpha) only sees alpha through the grid index
// k0 = floor(alpha (n+1)) (ranks are integers), so the closed form is
// evaluated there; for on-grid alpha this coincides with ceil(alpha (n+1)).
Rational ecdf_count_pmf_exact(const PolyaLaw& law, double alpha, int k) {
    require_probability(alpha, "alpha");
    if (k < 0 || k > law.m) throw std::invalid_argument("ecdf_count_pmf: k outside [0, m]");
    const int k0 = grid_floor_index(alpha, law.n);
    BigInt num = binomial_big(law.m, k);
    for (int i = 0; i < law.m - k; ++i) num *= (law.n - k0 + 1 + i);
    for (int i = 0; i < k; ++i) num *= (k0 + i);
    BigInt den = 1;
    for (int i = 1; i <= law.m; ++i) den *= (law.n + i);
    return Rational(num, den);
}

double ecdf_count_log_pmf(const PolyaLaw& law, double alpha, int k) {
    require_probability(alpha, "alpha");
    if (k < 0 || k > law.m) throw std::invalid_argument("ecdf_count_pmf: k outside [0, m]");
    const int k0 = grid_floor_index(alpha, law.n);
    if (k0 == 0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    double lp = std::lgamma(law.m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(law.m - k + 1.0);
    lp += std::lgamma(law.n - k0 + 1.0 + (law.m - k)) - std::lgamma(law.n - k0 + 1.0);
    lp += std::lgamma(static_cast<double>(k0) + k) - std::lgamma(static_cast<double>(k0));
    lp -= std::lgamma(law.n + 1.0 + law.m) - std::lgamma(law.n + 1.0);
    return lp;
}

double ecdf_count_pmf(const PolyaLaw& law, double alpha, int k) {
    if (law.n + law.m <= kExactArithmeticLimit)
        return to_double(ecdf_count_pmf_exact(law, alpha, k));
    return std::exp(ecdf_count_log_pmf(law, alpha, k));
}

TwoColorStep two_color_sequential(const PolyaLaw& law, double alpha,
                                  std::span<const int> history01) {
    require_probability(alpha, "alpha");
    const int below0 = grid_floor_index(alpha, law.n);        // initial balls of color 0
    const int above0 = law.n + 1 - below0;                    // = ceil((1-alpha)(n+1))
    long long zeros = 0, ones = 0;
    for (int z : history01) {
        if (z == 0)
            ++zeros;
        else if (z == 1)
            ++ones;
        else
            throw std::invalid_argument("two_color_sequential: history entries must be 0/1");
    }
    const long long total = law.n + 1 + zeros + ones;
    return TwoColorStep{Rational(below0 + zeros, total), Rational(above0 + ones, total)};
}

}  // namespace tconf
