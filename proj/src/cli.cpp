#include "tconf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tconf/bounds.hpp"
#include "tconf/gridmath.hpp"
#include "tconf/io.hpp"
#include "tconf/novelty.hpp"
#include "tconf/oracle.hpp"
#include "tconf/polya.hpp"
#include "tconf/prediction.hpp"
#include "tconf/scores.hpp"
#include "tconf/templates.hpp"
#include "tconf/verify.hpp"

namespace tconf {

namespace {

using nlohmann::json;

constexpr const char* kSeedEnvVar = "TCONF_SEED";

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnvVar)) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(kSeedEnvVar) + " is not an integer");
        }
    }
    return 1;
}

// Every emitted file starts from its config echo; rerunning with the same
// inputs must produce byte-identical output.
void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error(path + ": cannot open for writing");
    out << text;
}

std::string csv_header(const std::string& schema, const json& config) {
    return "# schema=" + schema + " config=" + config.dump() + "\n";
}

std::string fmt(double v) { return format_double(v); }

int cmd_pvalues(const std::string& input, const std::string& cal, const std::string& test,
                std::uint64_t seed, const std::string& output, const std::string& format) {
    ScoreSet scores = input.empty() ? read_scores_csv(cal, test) : read_scores_csv(input);
    const bool tie_broken = scores.has_ties();
    if (tie_broken) scores = break_ties(scores, seed);
    const PValueSet pv = conformal_pvalues(scores);

    json config{{"command", "pvalues"},
                {"seed", seed},
                {"n", pv.n},
                {"m", pv.m()},
                {"tie_broken", tie_broken}};
    if (input.empty()) {
        config["cal"] = cal;
        config["test"] = test;
    } else {
        config["input"] = input;
    }

    if (format == "json") {
        json rows = json::array();
        for (int i = 0; i < pv.m(); ++i)
            rows.push_back({{"index", i + 1},
                            {"rank", pv.ranks[static_cast<std::size_t>(i)]},
                            {"pvalue", pv.value(i)}});
        write_text(output, json{{"config", config}, {"pvalues", rows}}.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    os << csv_header("pvalues-v1", config) << "index,rank,pvalue\n";
    for (int i = 0; i < pv.m(); ++i)
        os << (i + 1) << ',' << pv.ranks[static_cast<std::size_t>(i)] << ','
           << fmt(pv.value(i)) << '\n';
    write_text(output, os.str());
    return 0;
}

int cmd_bound(int n, int m, double delta, const std::string& mode, std::uint64_t seed, int reps,
              int iterations, bool c_one, const std::string& output) {
    const DkwParams params(n, m, delta, iterations);
    json out;
    out["config"] = json{{"command", "bound"}, {"n", n},           {"m", m},
                         {"delta", delta},    {"mode", mode},      {"iterations", iterations},
                         {"reps", reps},      {"seed", seed}};
    out["tau"] = params.tau();

    Envelope env;
    if (mode == "analytic") {
        env = analytic_dkw_envelope(params);
        out["bound_at_lambda"] = b_dkw(env.lambda, n, m);
    } else if (mode == "full") {
        env = analytic_dkw_envelope(params);
        out["bound_at_lambda"] = b_dkw_full(env.lambda, n, m, c_one);
    } else if (mode == "numerical") {
        env = numerical_dkw_envelope(PolyaLaw(n, m), delta, seed, reps);
        out["bound_at_lambda"] = delta;  // calibrated tail target
        out["mc_std_error"] = std::sqrt(delta * (1.0 - delta) / reps);
    } else {
        throw std::invalid_argument("bound: mode must be analytic, full or numerical");
    }
    out["lambda"] = env.lambda;
    out["b_dkw_at_lambda"] = b_dkw(env.lambda, n, m);
    write_text(output, out.dump(2) + "\n");
    return 0;
}

int cmd_calibrate_template(int n, int m, double delta, const std::string& kind,
                           std::vector<int> k_set, std::uint64_t seed, int reps,
                           const std::string& index_name, const std::string& output) {
    std::sort(k_set.begin(), k_set.end());
    const Template tmpl = kind == "beta" ? beta_template(m, std::move(k_set))
                                         : linear_template(m, std::move(k_set));
    const CalibrationIndex index =
        index_name == "k+1" ? CalibrationIndex::kth_plus_one : CalibrationIndex::kth;
    const CalibratedEnvelope env =
        calibrate_template(PolyaLaw(n, m), tmpl, delta, seed, reps, index);

    json out;
    out["config"] = json{{"command", "calibrate template"},
                         {"n", n},
                         {"m", m},
                         {"delta", delta},
                         {"template", kind},
                         {"k_set", tmpl.k_set},
                         {"index", index_name},
                         {"reps", reps},
                         {"seed", seed}};
    out["lambda_star"] = env.lambda_star;
    out["vacuous"] = env.vacuous;
    out["thresholds"] = env.thresholds;
    write_text(output, out.dump(2) + "\n");
    return 0;
}

int cmd_calibrate_level(int n, int m, double delta, double target_fcp,
                        const std::string& output) {
    const PolyaLaw law(n, m);
    const int level = calibrate_level(law, target_fcp, delta);

    json out;
    out["config"] = json{{"command", "calibrate level"},
                         {"n", n},
                         {"m", m},
                         {"delta", delta},
                         {"target_fcp", target_fcp}};
    out["level_index"] = level;
    out["level"] = static_cast<double>(level) / (n + 1);
    out["vacuous"] = level == 0;
    if (target_fcp == 0.0) {
        const int explicit_level = level_zero_explicit(n, m, delta);
        out["level_zero_explicit_index"] = explicit_level;
    }
    write_text(output, out.dump(2) + "\n");
    return 0;
}

int cmd_pi_run(const RegressionConfig& rc, const std::string& predictor, double delta,
               int iterations, int knn_k, int grid, int reps, double report_alpha,
               double report_radius, const std::string& output,
               const std::string& summary_path) {
    const PredictorKind kind = predictor_from_name(predictor);
    const RegressionData data = synth_regression(rc);
    const Predictions pred = fit_predict(kind, rc, data, knn_k);

    ScoreSet scores;
    for (std::size_t i = 0; i < data.cal_y.size(); ++i)
        scores.calibration.push_back(std::fabs(data.cal_y[i] - pred.cal[i]));
    for (std::size_t i = 0; i < data.test_y.size(); ++i)
        scores.test.push_back(std::fabs(data.test_y[i] - pred.test[i]));
    if (scores.has_ties()) scores = break_ties(scores, rc.seed);

    const FcpCurve curve = fcp_curve(scores.calibration, pred.test, data.test_y, delta, iterations);

    json config{{"command", "pi run"},
                {"n_train", rc.n_train},
                {"n", rc.n},
                {"m", rc.m},
                {"sigma", rc.sigma},
                {"mean_fn", rc.mean_fn},
                {"train_transform", rc.train_transform},
                {"test_transform", rc.test_transform},
                {"predictor", predictor},
                {"knn_k", knn_k},
                {"delta", delta},
                {"iterations", iterations},
                {"grid", grid},
                {"reps", reps},
                {"seed", rc.seed}};

    std::ostringstream os;
    os << csv_header("pi-run-v1", config) << "kind,value,fcp,bound_dkw,bound_simes,radius\n";
    for (std::size_t i = 0; i < curve.level.size(); ++i)
        os << "alpha," << fmt(curve.level[i]) << ',' << fmt(to_double(curve.fcp[i])) << ','
           << fmt(curve.bound_dkw[i]) << ',' << fmt(curve.bound_simes[i]) << ','
           << fmt(curve.radius[i]) << '\n';

    // Radius-driven rows: the widest band whose radius fits each budget; its
    // level is (n+1-count)/(n+1) with count = #{cal scores <= L}, and the
    // uniform bound at that level certifies the choice.
    std::vector<double> sorted_cal(scores.calibration);
    std::sort(sorted_cal.begin(), sorted_cal.end());
    for (int g = 0; g < grid; ++g) {
        const double q = (g + 0.5) / grid;
        const double radius_limit =
            sorted_cal[static_cast<std::size_t>(q * (sorted_cal.size() - 1))];
        const int count = alpha_for_radius(scores.calibration, radius_limit);
        const std::size_t l_band = static_cast<std::size_t>(rc.n + 1 - count);
        os << "L," << fmt(radius_limit) << ','
           << fmt(to_double(curve.fcp[l_band - 1])) << ','
           << fmt(curve.bound_dkw[l_band - 1]) << ',' << fmt(curve.bound_simes[l_band - 1])
           << ',' << fmt(curve.radius[l_band - 1]) << '\n';
    }
    write_text(output, os.str());

    json summary{{"config", config}};
    {
        // point reports at the requested level and radius budget
        const int l = grid_floor_index(report_alpha, rc.n);
        summary["at_alpha"] = json{{"alpha", report_alpha},
                                   {"alpha_effective", static_cast<double>(l) / (rc.n + 1)},
                                   {"fcp", l >= 1 ? to_double(curve.fcp[static_cast<std::size_t>(l) - 1]) : 0.0},
                                   {"bound_dkw", l >= 1 ? curve.bound_dkw[static_cast<std::size_t>(l) - 1] : 0.0},
                                   {"radius", l >= 1 ? curve.radius[static_cast<std::size_t>(l) - 1]
                                                     : std::numeric_limits<double>::infinity()}};
        const PredictionBand capped =
            radius_capped_band(scores.calibration, pred.test, report_radius);
        const std::size_t lb = static_cast<std::size_t>(
            grid_floor_index(capped.alpha_effective, rc.n));
        summary["at_radius"] = json{{"radius_budget", report_radius},
                                    {"level", capped.alpha_effective},
                                    {"radius", capped.radius},
                                    {"fcp", to_double(fcp(capped, data.test_y))},
                                    {"bound_dkw", curve.bound_dkw[lb - 1]},
                                    {"bound_simes", curve.bound_simes[lb - 1]}};
    }
    if (reps > 0) {
        const std::vector<double> alphas{0.1, 0.2};
        const PiCoverage cov = pi_coverage_simulation(rc, kind, delta, alphas, rc.seed, reps,
                                                      knn_k, iterations);
        summary["coverage"] = json{
            {"replicates", cov.replicates},
            {"uniform_dkw_violation_freq",
             static_cast<double>(cov.uniform_violations) / cov.replicates},
            {"mean_fcp_alpha_0.1", cov.mean_fcp[0]},
            {"mean_fcp_alpha_0.2", cov.mean_fcp[1]},
        };
    }
    if (!summary_path.empty()) write_text(summary_path, summary.dump(2) + "\n");
    return 0;
}

int cmd_nd_run(int n, int m0, int m1, double shift, double delta, double alpha, int iterations,
               int grid, std::uint64_t seed, int reps, const std::string& output,
               const std::string& summary_path) {
    const NdData data = synth_nd(n, m0, m1, shift, seed);
    ScoreSet scores{data.calibration, data.test};
    if (scores.has_ties()) scores = break_ties(scores, seed);
    const PValueSet pv = conformal_pvalues(scores);
    const int m = pv.m();
    const RejectionCurve curve = rejection_curve(pv, data.h0, delta, iterations);
    const double lambda_full = lambda_dkw(DkwParams(n, m, delta, iterations));

    json config{{"command", "nd run"}, {"n", n},         {"m0", m0},
                {"m1", m1},            {"shift", shift}, {"delta", delta},
                {"alpha", alpha},      {"iterations", iterations}, {"grid", grid},
                {"reps", reps},        {"seed", seed}};

    std::ostringstream os;
    os << csv_header("nd-run-v1", config)
       << "kind,value,n_reject,fdp,tdp,bound_dkw,bound_simes,bound_dkw_m0_as_m\n";
    for (std::size_t i = 0; i < curve.threshold.size(); ++i) {
        const double t = curve.threshold[i];
        const int rej = curve.reject_count[i];
        const double no_est = (m * t + m * lambda_full) / std::max(1, rej);
        os << "t," << fmt(t) << ',' << rej << ',' << fmt(to_double(curve.fdp[i])) << ','
           << fmt(to_double(curve.tdp[i])) << ',' << fmt(curve.bound_dkw[i]) << ','
           << fmt(curve.bound_simes[i]) << ',' << fmt(no_est) << '\n';
    }
    for (int g = 1; g <= grid; ++g) {
        const double a = static_cast<double>(g) / (grid + 1);
        const BhResult bh = bh_threshold(pv, a);
        const FdpTdp rates = fdp_tdp(bh.rejected, data.h0, m);
        const auto [bd, bs] = adadetect_fdp_bounds(pv, a, delta, iterations);
        const double no_est =
            bh.k_hat > 0 ? a + m * lambda_full / std::max(1, bh.k_hat) : 0.0;
        os << "alpha," << fmt(a) << ',' << static_cast<int>(bh.rejected.size()) << ','
           << fmt(to_double(rates.fdp)) << ',' << fmt(to_double(rates.tdp)) << ',' << fmt(bd)
           << ',' << fmt(bs) << ',' << fmt(no_est) << '\n';
    }
    write_text(output, os.str());

    json summary{{"config", config},
                 {"m0_dkw", curve.m0_dkw},
                 {"m0_simes", curve.m0_simes},
                 {"m", m}};
    {
        const BhResult bh = bh_threshold(pv, alpha);
        const FdpTdp rates = fdp_tdp(bh.rejected, data.h0, m);
        const auto [bd, bs] = adadetect_fdp_bounds(pv, alpha, delta, iterations);
        summary["bh"] = json{{"alpha", alpha},
                             {"k_hat", bh.k_hat},
                             {"threshold", bh.threshold},
                             {"fdp", to_double(rates.fdp)},
                             {"tdp", to_double(rates.tdp)},
                             {"bound_dkw", bd},
                             {"bound_simes", bs}};
    }
    if (reps > 0) {
        const NdCoverage cov =
            nd_coverage_simulation(n, m0, m1, shift, delta, alpha, seed, reps, iterations);
        summary["coverage"] = json{
            {"replicates", cov.replicates},
            {"dkw_curve_violation_freq",
             static_cast<double>(cov.dkw_curve_violations) / cov.replicates},
            {"simes_curve_violation_freq",
             static_cast<double>(cov.simes_curve_violations) / cov.replicates},
            {"m0_dkw_underestimate_freq",
             static_cast<double>(cov.m0_dkw_underestimates) / cov.replicates},
            {"m0_simes_underestimate_freq",
             static_cast<double>(cov.m0_simes_underestimates) / cov.replicates},
            {"bh_mean_fdp", cov.bh_mean_fdp},
            {"bh_mean_tdp", cov.bh_mean_tdp}};
    }
    if (!summary_path.empty()) write_text(summary_path, summary.dump(2) + "\n");
    return 0;
}

int cmd_oracle_verify(int max_size, double perturb) {
    const std::vector<CheckResult> results = run_oracle_suite(max_size, perturb);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  (instances=" << r.instances
                  << ")";
        if (!r.pass) std::cout << "  " << r.detail;
        std::cout << '\n';
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "verification FAILED") << '\n';
    return all_pass ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"transductive conformal p-values: exact joint law, DKW/Simes/template "
                 "envelopes, FCP and FDP bounds"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    int n = 75, m = 75, iterations = 3, reps = 10000;
    double delta = 0.2;

    // pvalues
    auto* p_cmd = app.add_subcommand("pvalues", "conformal p-values from score CSVs");
    std::string p_input, p_cal, p_test, p_output, p_format = "csv";
    p_cmd->add_option("--input", p_input, "CSV with columns score,role (role: cal|test)");
    p_cmd->add_option("--cal", p_cal, "CSV with a score column (calibration)");
    p_cmd->add_option("--test", p_test, "CSV with a score column (test)");
    p_cmd->add_option("--seed", seed, "tie-breaking seed");
    p_cmd->add_option("--output", p_output, "output path (default stdout)");
    p_cmd->add_option("--format", p_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // bound
    auto* b_cmd = app.add_subcommand("bound", "DKW-type envelope constants");
    std::string b_mode = "analytic", b_output;
    bool b_c_one = false;
    b_cmd->add_option("--n", n, "calibration size")->required();
    b_cmd->add_option("--m", m, "test size")->required();
    b_cmd->add_option("--delta", delta, "error budget in (0,1)")->required();
    b_cmd->add_option("--mode", b_mode, "analytic|full|numerical")
        ->check(CLI::IsMember({"analytic", "full", "numerical"}));
    b_cmd->add_option("--seed", seed, "RNG seed (numerical mode)");
    b_cmd->add_option("--reps", reps, "Monte-Carlo replicates (numerical mode)");
    b_cmd->add_option("--iterations", iterations, "fixed-point iterations");
    b_cmd->add_flag("--c-one", b_c_one, "replace the normal-c.d.f. factor by 1 (full mode)");
    b_cmd->add_option("--output", b_output, "output path (default stdout)");

    // calibrate {template, level}
    auto* c_cmd = app.add_subcommand("calibrate", "Monte-Carlo and exact calibrations");
    c_cmd->require_subcommand(1);
    auto* ct_cmd = c_cmd->add_subcommand("template", "calibrate a template envelope");
    std::string ct_kind = "linear", ct_index = "k", ct_output;
    std::vector<int> ct_k_set;
    ct_cmd->add_option("--n", n, "calibration size")->required();
    ct_cmd->add_option("--m", m, "test size")->required();
    ct_cmd->add_option("--delta", delta, "error budget")->required();
    ct_cmd->add_option("--template", ct_kind, "linear|beta")
        ->check(CLI::IsMember({"linear", "beta"}));
    ct_cmd->add_option("--k-set", ct_k_set, "order-statistic indices (default: template choice)");
    ct_cmd->add_option("--index", ct_index, "calibration order statistic: k|k+1")
        ->check(CLI::IsMember({"k", "k+1"}));
    ct_cmd->add_option("--seed", seed, "RNG seed");
    ct_cmd->add_option("--reps", reps, "Monte-Carlo replicates");
    ct_cmd->add_option("--output", ct_output, "output path (default stdout)");

    auto* cl_cmd = c_cmd->add_subcommand("level", "level with guaranteed FCP");
    double cl_target = 0.0;
    std::string cl_output;
    cl_cmd->add_option("--n", n, "calibration size")->required();
    cl_cmd->add_option("--m", m, "test size")->required();
    cl_cmd->add_option("--delta", delta, "error budget")->required();
    cl_cmd->add_option("--target-fcp", cl_target, "FCP target in [0,1)");
    cl_cmd->add_option("--output", cl_output, "output path (default stdout)");

    // pi run
    auto* pi_cmd = app.add_subcommand("pi", "prediction-interval experiments");
    pi_cmd->require_subcommand(1);
    auto* pir_cmd = pi_cmd->add_subcommand("run", "synthetic regression experiment");
    RegressionConfig rc;
    std::string pir_predictor = "pooled-knn", pir_output, pir_summary;
    int pir_grid = 20, pir_knn_k = 10, pir_reps = 0;
    double pir_alpha = 0.1, pir_radius = 0.3;
    pir_cmd->add_option("--n", rc.n, "calibration size");
    pir_cmd->add_option("--m", rc.m, "test size");
    pir_cmd->add_option("--n-train", rc.n_train, "training-sample size");
    pir_cmd->add_option("--sigma", rc.sigma, "noise standard deviation");
    pir_cmd->add_option("--mean-fn", rc.mean_fn, "mean function: cos|sin|identity");
    pir_cmd->add_option("--delta", delta, "error budget");
    pir_cmd->add_option("--alpha", pir_alpha, "level for the summary point report");
    pir_cmd->add_option("--radius", pir_radius, "radius budget for the summary point report");
    pir_cmd->add_option("--predictor", pir_predictor, "oracle-mean|pooled-knn|naive-knn");
    pir_cmd->add_option("--knn-k", pir_knn_k, "neighbors for the knn predictors");
    pir_cmd->add_option("--grid", pir_grid, "number of radius-grid rows");
    pir_cmd->add_option("--iterations", iterations, "fixed-point iterations");
    pir_cmd->add_option("--seed", seed, "RNG seed");
    pir_cmd->add_option("--reps", pir_reps, "coverage-summary replicates (0 = skip)");
    pir_cmd->add_option("--output", pir_output, "curve CSV path (default stdout)");
    pir_cmd->add_option("--summary", pir_summary, "JSON summary path");

    // nd run
    auto* nd_cmd = app.add_subcommand("nd", "novelty-detection experiments");
    nd_cmd->require_subcommand(1);
    auto* ndr_cmd = nd_cmd->add_subcommand("run", "synthetic novelty experiment");
    int nd_n = 1000, nd_m0 = 500, nd_m1 = 260, ndr_grid = 19, ndr_reps = 0;
    double nd_shift = 3.0, nd_alpha = 0.1;
    std::string ndr_output, ndr_summary;
    ndr_cmd->add_option("--n", nd_n, "calibration size");
    ndr_cmd->add_option("--m0", nd_m0, "null test points");
    ndr_cmd->add_option("--m1", nd_m1, "novelty test points");
    ndr_cmd->add_option("--shift", nd_shift, "novelty mean shift");
    ndr_cmd->add_option("--delta", delta, "error budget");
    ndr_cmd->add_option("--alpha", nd_alpha, "BH level");
    ndr_cmd->add_option("--grid", ndr_grid, "number of alpha-grid rows");
    ndr_cmd->add_option("--iterations", iterations, "fixed-point iterations");
    ndr_cmd->add_option("--seed", seed, "RNG seed");
    ndr_cmd->add_option("--reps", ndr_reps, "coverage-summary replicates (0 = skip)");
    ndr_cmd->add_option("--output", ndr_output, "curve CSV path (default stdout)");
    ndr_cmd->add_option("--summary", ndr_summary, "JSON summary path");

    // oracle verify
    auto* o_cmd = app.add_subcommand("oracle", "exact-law verification");
    o_cmd->require_subcommand(1);
    auto* ov_cmd = o_cmd->add_subcommand("verify", "run the exact-equality check suite");
    int ov_max_size = kOracleDefaultCap;
    double ov_perturb = 0.0;
    ov_cmd->add_option("--max-size", ov_max_size, "enumeration cap on n+m (hard limit 11)");
    ov_cmd->add_option("--perturb", ov_perturb, "test hook: offset one compared pmf")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (p_cmd->parsed()) {
            if (p_input.empty() == (p_cal.empty() || p_test.empty()))
                throw std::invalid_argument("pvalues: give --input, or both --cal and --test");
            return cmd_pvalues(p_input, p_cal, p_test, seed, p_output, p_format);
        }
        if (b_cmd->parsed())
            return cmd_bound(n, m, delta, b_mode, seed, reps, iterations, b_c_one, b_output);
        if (ct_cmd->parsed())
            return cmd_calibrate_template(n, m, delta, ct_kind, ct_k_set, seed, reps, ct_index,
                                          ct_output);
        if (cl_cmd->parsed()) return cmd_calibrate_level(n, m, delta, cl_target, cl_output);
        if (pir_cmd->parsed()) {
            rc.seed = seed;
            return cmd_pi_run(rc, pir_predictor, delta, iterations, pir_knn_k, pir_grid,
                              pir_reps, pir_alpha, pir_radius, pir_output, pir_summary);
        }
        if (ndr_cmd->parsed())
            return cmd_nd_run(nd_n, nd_m0, nd_m1, nd_shift, delta, nd_alpha, iterations,
                              ndr_grid, seed, ndr_reps, ndr_output, ndr_summary);
        if (ov_cmd->parsed()) return cmd_oracle_verify(ov_max_size, ov_perturb);
        throw std::invalid_argument("no subcommand selected");
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace tconf
