#include "tconf/templates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tconf/gridmath.hpp"
#include "tconf/mathfn.hpp"
#include "tconf/parallel.hpp"

namespace tconf {

namespace {

void check_k_set(int m, const std::vector<int>& k_set) {
    if (k_set.empty()) throw std::invalid_argument("template: K must be nonempty");
    int prev = 0;
    for (int k : k_set) {
        if (k <= prev || k > m)
            throw std::invalid_argument("template: K must be strictly increasing within {1..m}");
        prev = k;
    }
}

}  // namespace

double Template::threshold(int k, double lambda) const {
    if (kind == Kind::linear) return static_cast<double>(k) * lambda / m;
    return beta_quantile(k, m + 1.0 - k, lambda);
}

double Template::inverse(int k, double p) const {
    if (kind == Kind::linear) return static_cast<double>(m) * p / k;
    return reg_inc_beta(k, m + 1.0 - k, p);
}

Template linear_template(int m, std::vector<int> k_set) {
    if (m < 1) throw std::invalid_argument("linear_template: need m >= 1");
    if (k_set.empty()) {
        k_set.resize(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) k_set[static_cast<std::size_t>(k) - 1] = k;
    }
    check_k_set(m, k_set);
    return Template{Template::Kind::linear, m, std::move(k_set)};
}

std::vector<int> default_beta_k_set(int m) {
    const int step = static_cast<int>(std::ceil(std::log(static_cast<double>(m))));
    std::vector<int> k_set;
    for (int k = 1 + step; step > 0 && k <= m; k += step) k_set.push_back(k);
    if (k_set.empty()) k_set.push_back(1);
    return k_set;
}

Template beta_template(int m, std::vector<int> k_set) {
    if (m < 1) throw std::invalid_argument("beta_template: need m >= 1");
    if (k_set.empty()) k_set = default_beta_k_set(m);
    check_k_set(m, k_set);
    return Template{Template::Kind::beta, m, std::move(k_set)};
}

CalibratedEnvelope calibrate_template(const PolyaLaw& law, const Template& tmpl, double delta,
                                      std::uint64_t seed, int reps, CalibrationIndex index) {
    require_probability(delta, "delta");
    if (reps < 1000) throw std::invalid_argument("calibrate_template: need reps >= 1000");
    if (tmpl.m != law.m) throw std::invalid_argument("calibrate_template: template m != law m");
    check_k_set(tmpl.m, tmpl.k_set);

    // Candidate parameters: inverse images of the p-value grid, restricted to
    // the template's parameter range [0,1].
    std::vector<double> candidates;
    candidates.reserve(tmpl.k_set.size() * static_cast<std::size_t>(law.n + 1));
    for (int k : tmpl.k_set) {
        for (int l = 1; l <= law.n + 1; ++l) {
            const double v = tmpl.inverse(k, static_cast<double>(l) / (law.n + 1));
            if (v >= 0.0 && v <= 1.0) candidates.push_back(v);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    CalibratedEnvelope out;
    out.tmpl = tmpl;

    // Coverage statistic per replicate; the grid values fed to inverse() here
    // are the same doubles used to build the candidate set, so the snap below
    // compares exactly.
    std::vector<double> stat(static_cast<std::size_t>(reps));
    parallel_for(reps, [&](std::int64_t r) {
        Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(r));
        PValueSet pv = sample_urn_one(law, rng);
        std::sort(pv.ranks.begin(), pv.ranks.end());
        double w = std::numeric_limits<double>::infinity();
        for (int k : tmpl.k_set) {
            const int ord = index == CalibrationIndex::kth ? k : k + 1;
            if (ord > law.m) continue;  // p_(m+1) = +inf never binds
            const double p = static_cast<double>(pv.ranks[static_cast<std::size_t>(ord) - 1]) /
                             (law.n + 1);
            w = std::min(w, tmpl.inverse(k, p));
        }
        stat[static_cast<std::size_t>(r)] = w;
    });
    std::sort(stat.begin(), stat.end());

    // Feasible lambda keep at most floor(delta*reps) replicates at or below
    // them, i.e. lambda < the (floor(delta*reps)+1)-th order statistic.
    const auto budget = static_cast<std::size_t>(floor_snapped(delta * reps));
    double lambda_star = -1.0;
    if (budget >= stat.size()) {
        lambda_star = candidates.empty() ? -1.0 : candidates.back();
    } else {
        const double cutoff = stat[budget];
        for (double c : candidates) {
            if (c < cutoff)
                lambda_star = c;
            else
                break;
        }
    }

    if (lambda_star < 0.0) {
        out.lambda_star = 0.0;
        out.vacuous = true;
    } else {
        out.lambda_star = lambda_star;
    }
    out.thresholds.reserve(tmpl.k_set.size());
    for (int k : tmpl.k_set) out.thresholds.push_back(tmpl.threshold(k, out.lambda_star));
    return out;
}

}  // namespace tconf
