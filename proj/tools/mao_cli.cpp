// Command-line surface for the MAO distribution library: moments, exact and
// empirical pmfs, approximation diagnostics, null-model tests, verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mao/approx.hpp"
#include "mao/combinatorics.hpp"
#include "mao/exact_dist.hpp"
#include "mao/moments.hpp"
#include "mao/montecarlo.hpp"
#include "mao/norm.hpp"
#include "mao/report.hpp"
#include "mao/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;

struct CommonOptions {
    long N = 0;
    std::string m_spec;
    int T = 0;
    int t = -1;
    std::string kind = "exactly";
    std::string method = "formula";
    std::string mode = "exact";
    std::string format = "json";
    bool all_t = false;
    long R = 100'000;
    uint64_t seed = 0;
    int threads = 1;
    double threshold = mao::kDefaultRegimeThreshold;
    size_t budget = mao::kDefaultStateBudget;
};

void add_model_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--N", opt.N, "population size")->required();
    cmd->add_option("--m", opt.m_spec, "subset size, or comma-separated list of per-round sizes")
        ->required();
    cmd->add_option("--T", opt.T, "number of rounds (only with a single --m value)");
}

mao::ModelParams parse_params(const CommonOptions& opt) {
    std::vector<long> m;
    std::stringstream in(opt.m_spec);
    std::string piece;
    while (std::getline(in, piece, ',')) m.push_back(std::stol(piece));
    if (m.empty()) throw CLI::ValidationError("--m", "no subset sizes given");
    if (m.size() == 1 && opt.T > 1) m.assign(static_cast<size_t>(opt.T), m.front());
    if (opt.T > 0 && static_cast<int>(m.size()) != opt.T)
        throw CLI::ValidationError("--T", "length of --m list does not match --T");
    return mao::ModelParams(opt.N, std::move(m));
}

mao::VariableSpec parse_var(const CommonOptions& opt, int t) {
    if (opt.kind == "exactly") return mao::VariableSpec::exactly(t);
    if (opt.kind == "at_least") return mao::VariableSpec::at_least(t);
    throw CLI::ValidationError("--kind", "expected 'exactly' or 'at_least'");
}

mao::NumericMode parse_mode(const CommonOptions& opt) {
    if (opt.mode == "exact") return mao::NumericMode::exact;
    if (opt.mode == "float") return mao::NumericMode::floating;
    throw CLI::ValidationError("--mode", "expected 'exact' or 'float'");
}

json rational_json(const mao::Rational& value, mao::NumericMode mode) {
    json out;
    out["dec"] = mao::to_decimal_string(value, 12);
    if (mode == mao::NumericMode::exact) {
        out["num"] = value.get_num().get_str();
        out["den"] = value.get_den().get_str();
    }
    return out;
}

json report_json(const mao::MomentReport& report) {
    json out;
    out["mean"] = rational_json(report.mean, report.mode);
    out["variance"] = rational_json(report.variance, report.mode);
    out["third_central"] = rational_json(report.third_central, report.mode);
    out["fourth_central"] = rational_json(report.fourth_central, report.mode);
    return out;
}

json params_json(const mao::ModelParams& params) {
    return json{{"N", params.N}, {"T", params.T()}, {"m", params.m}};
}

std::string spec_label(const mao::VariableSpec& var) {
    return (var.kind == mao::VariableSpec::Kind::exactly ? "exactly_" : "at_least_") +
           std::to_string(var.t);
}

int cmd_moments(const CommonOptions& opt) {
    const mao::ModelParams params = parse_params(opt);
    mao::MomentMethod method;
    if (opt.method == "formula")
        method = mao::MomentMethod::formula;
    else if (opt.method == "exact")
        method = mao::MomentMethod::exact_dp;
    else if (opt.method == "mc")
        method = mao::MomentMethod::monte_carlo;
    else
        throw CLI::ValidationError("--method", "expected formula, exact or mc");

    mao::MomentOptions options;
    options.mode = parse_mode(opt);
    options.replicates = opt.R;
    options.seed = opt.seed;
    options.threads = opt.threads;
    options.state_budget = opt.budget;

    std::vector<int> ts;
    if (opt.all_t) {
        for (int t = 0; t <= params.T(); ++t) ts.push_back(t);
    } else {
        if (opt.t < 0) throw CLI::ValidationError("--t", "category required (or use --all-t)");
        ts.push_back(opt.t);
    }

    json results = json::array();
    for (int t : ts) {
        const mao::VariableSpec var = parse_var(opt, t);
        const mao::MomentReport report = mao::moment_report(params, var, method, options);
        json row = report_json(report);
        row["variable"] = spec_label(var);
        row["mode"] = mao::to_string(report.mode);
        results.push_back(std::move(row));
    }
    json out;
    out["command"] = "moments";
    out["params"] = params_json(params);
    out["method"] = opt.method;
    out["mode"] = opt.method == "mc" ? "exact" : opt.mode;
    out["results"] = std::move(results);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_pmf(const CommonOptions& opt) {
    const mao::ModelParams params = parse_params(opt);
    if (opt.t < 0) throw CLI::ValidationError("--t", "category required");
    const mao::VariableSpec var = parse_var(opt, opt.t);
    const mao::NumericMode mode = parse_mode(opt);

    mao::Pmf main_pmf;
    bool empirical = false;
    if (opt.method == "mc") {
        empirical = true;
        main_pmf = mao::simulate(params, {var}, opt.R, opt.seed, opt.threads).empirical.front();
    } else {
        main_pmf = mao::exact_marginal_pmf(params, var, mode, opt.budget);
    }
    const mao::MomentReport moments = mao::pmf_moments(main_pmf);
    const double mu = mao::to_double(moments.mean);
    const mao::Pmf normal = mao::normal_pmf(mu, mao::to_double(moments.variance), params.N);
    const mao::Pmf poisson = mao::poisson_pmf(mu, params.N);

    long top = params.N;
    while (top > 0 && main_pmf.p[static_cast<size_t>(top)] == 0 &&
           mao::to_double(normal.p[static_cast<size_t>(top)]) < 1e-15 &&
           mao::to_double(poisson.p[static_cast<size_t>(top)]) < 1e-15)
        --top;

    const std::string main_col = empirical ? "empirical" : "exact";
    if (opt.format == "csv") {
        std::cout << "value," << main_col << ",normal,poisson\n";
        char buffer[64];
        for (long k = 0; k <= top; ++k) {
            std::cout << k;
            for (const mao::Pmf* col : {const_cast<const mao::Pmf*>(&main_pmf), &normal, &poisson}) {
                std::snprintf(buffer, sizeof(buffer), "%.17g",
                              mao::to_double(col->p[static_cast<size_t>(k)]));
                std::cout << ',' << buffer;
            }
            std::cout << '\n';
        }
        return kExitOk;
    }
    if (opt.format != "json") throw CLI::ValidationError("--format", "expected json or csv");

    json rows = json::array();
    for (long k = 0; k <= top; ++k) {
        json row;
        row["value"] = k;
        row[main_col] = rational_json(main_pmf.p[static_cast<size_t>(k)], main_pmf.mode);
        row["normal"] = rational_json(normal.p[static_cast<size_t>(k)], normal.mode);
        row["poisson"] = rational_json(poisson.p[static_cast<size_t>(k)], poisson.mode);
        rows.push_back(std::move(row));
    }
    json out;
    out["command"] = "pmf";
    out["params"] = params_json(params);
    out["variable"] = spec_label(var);
    out["mode"] = mao::to_string(main_pmf.mode);
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_diagnose(const CommonOptions& opt) {
    const mao::ModelParams params = parse_params(opt);
    if (opt.t < 0) throw CLI::ValidationError("--t", "category required");
    if (!params.equal_sizes())
        throw CLI::ValidationError("--m", "diagnostics need equal subset sizes");

    mao::Pmf exact;
    const mao::Pmf* exact_ptr = nullptr;
    try {
        exact = mao::exact_marginal_pmf(params, mao::VariableSpec::exactly(opt.t),
                                        parse_mode(opt), opt.budget);
        exact_ptr = &exact;
    } catch (const mao::BudgetExceeded&) {
        // Diagnostics still work; the TV/KS distances are just unavailable.
    }
    const mao::ApproxDiagnostics diag =
        mao::chen_stein_bound(params, opt.t, opt.threshold, exact_ptr);

    json out;
    out["command"] = "diagnose";
    out["params"] = params_json(params);
    out["t"] = opt.t;
    out["mode"] = "exact";
    out["lambda"] = rational_json(diag.lambda, mao::NumericMode::exact);
    out["variance"] = rational_json(diag.variance, mao::NumericMode::exact);
    out["delta"] = rational_json(diag.delta, mao::NumericMode::exact);
    out["big_delta"] = rational_json(diag.big_delta, mao::NumericMode::exact);
    out["chen_stein_bound"] = rational_json(diag.chen_stein_bound, mao::NumericMode::exact);
    out["regime"] = mao::to_string(diag.regime);
    out["threshold"] = diag.regime_threshold;
    if (diag.tv_poisson) out["tv_poisson"] = *diag.tv_poisson;
    if (diag.ks_normal) out["ks_normal"] = *diag.ks_normal;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_test(const CommonOptions& opt, long observed, const std::string& side_name) {
    const mao::ModelParams params = parse_params(opt);
    if (opt.t < 0) throw CLI::ValidationError("--t", "category required");
    if (observed < 0 || observed > params.N)
        throw CLI::ValidationError("--observed", "outside 0..N");
    mao::TailSide side;
    if (side_name == "upper")
        side = mao::TailSide::upper;
    else if (side_name == "lower")
        side = mao::TailSide::lower;
    else if (side_name == "two_sided")
        side = mao::TailSide::two_sided;
    else
        throw CLI::ValidationError("--side", "expected upper, lower or two_sided");

    const mao::VariableSpec var = parse_var(opt, opt.t);
    mao::Pmf null_law;
    std::string law_used;
    try {
        null_law = mao::exact_marginal_pmf(params, var, parse_mode(opt), opt.budget);
        law_used = "exact";
    } catch (const mao::BudgetExceeded&) {
        const mao::ApproxRegime regime = mao::select_regime(params, opt.t, opt.threshold);
        mao::Rational mean = 0;
        const int hi = var.kind == mao::VariableSpec::Kind::exactly ? var.t : params.T();
        for (int s = var.t; s <= hi; ++s)
            mean += mao::Rational(params.N) * mao::marginal_pi(params, s);
        if (regime == mao::ApproxRegime::normal && params.equal_sizes()) {
            const auto [mu, variance] = mao::normal_approximant(params, var);
            null_law = mao::normal_pmf(mao::to_double(mu), mao::to_double(variance), params.N);
            law_used = "normal";
        } else {
            null_law = mao::poisson_pmf(mao::to_double(mean), params.N);
            law_used = "poisson";
        }
    }
    json out;
    out["command"] = "test";
    out["params"] = params_json(params);
    out["variable"] = spec_label(var);
    out["observed"] = observed;
    out["law_used"] = law_used;
    out["mode"] = mao::to_string(null_law.mode);
    out["p_upper"] = rational_json(mao::tail_pvalue(null_law, observed, mao::TailSide::upper),
                                   null_law.mode);
    out["p_lower"] = rational_json(mao::tail_pvalue(null_law, observed, mao::TailSide::lower),
                                   null_law.mode);
    out["p_two_sided"] =
        rational_json(mao::tail_pvalue(null_law, observed, mao::TailSide::two_sided),
                      null_law.mode);
    out["p_value"] = rational_json(mao::tail_pvalue(null_law, observed, side), null_law.mode);
    // For comparison, the same tail under the regime-selected approximant.
    if (law_used == "exact" && params.equal_sizes()) {
        const mao::ApproxRegime regime = mao::select_regime(params, opt.t, opt.threshold);
        mao::Pmf approx_law;
        if (regime == mao::ApproxRegime::normal) {
            const auto [mu, variance] = mao::normal_approximant(params, var);
            approx_law = mao::normal_pmf(mao::to_double(mu), mao::to_double(variance), params.N);
        } else {
            approx_law = mao::poisson_approximant(params, var);
        }
        out["approx_law"] = mao::to_string(regime);
        out["p_value_approx"] =
            rational_json(mao::tail_pvalue(approx_law, observed, side), approx_law.mode);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(bool as_json) {
    const mao::VerifyReport report = mao::run_verification();
    if (as_json) {
        json out;
        out["command"] = "verify";
        out["all_pass"] = report.all_pass();
        json rows = json::array();
        for (const auto& c : report.criteria)
            rows.push_back(json{{"id", c.id},
                                {"name", c.name},
                                {"pass", c.pass},
                                {"details", c.details},
                                {"seconds", c.seconds}});
        out["criteria"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : report.criteria) {
            std::printf("[%2d] %s  %-42s (%.1fs)  %s\n", c.id, c.pass ? "PASS" : "FAIL",
                        c.name.c_str(), c.seconds, c.details.c_str());
        }
        std::printf("%s\n", report.all_pass() ? "all criteria passed" : "FAILURES present");
    }
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-set allocation occupancy (MAO) distribution toolkit"};
    app.require_subcommand(1);

    CommonOptions opt;
    long observed = 0;
    std::string side = "upper";
    bool verify_json = false;

    auto* moments = app.add_subcommand("moments", "moments of X_{=t} / X_{>=t}");
    add_model_options(moments, opt);
    moments->add_option("--t", opt.t, "category");
    moments->add_flag("--all-t", opt.all_t, "emit every category 0..T");
    moments->add_option("--kind", opt.kind, "exactly | at_least");
    moments->add_option("--method", opt.method, "formula | exact | mc");
    moments->add_option("--mode", opt.mode, "exact | float (exact recursion arithmetic)");
    moments->add_option("--R", opt.R, "Monte Carlo replicates");
    moments->add_option("--seed", opt.seed, "Monte Carlo seed");
    moments->add_option("--threads", opt.threads, "worker threads (results identical)");
    moments->add_option("--budget", opt.budget, "recursion state budget");

    auto* pmf = app.add_subcommand("pmf", "pmf table with normal/Poisson columns");
    add_model_options(pmf, opt);
    pmf->add_option("--t", opt.t, "category")->required();
    pmf->add_option("--kind", opt.kind, "exactly | at_least");
    pmf->add_option("--method", opt.method, "exact | mc");
    pmf->add_option("--mode", opt.mode, "exact | float");
    pmf->add_option("--format", opt.format, "json | csv");
    pmf->add_option("--R", opt.R, "Monte Carlo replicates");
    pmf->add_option("--seed", opt.seed, "Monte Carlo seed");
    pmf->add_option("--threads", opt.threads, "worker threads");
    pmf->add_option("--budget", opt.budget, "recursion state budget");

    auto* diagnose = app.add_subcommand("diagnose", "approximation diagnostics for X_{=t}");
    add_model_options(diagnose, opt);
    diagnose->add_option("--t", opt.t, "category")->required();
    diagnose->add_option("--threshold", opt.threshold, "regime threshold on the mean");
    diagnose->add_option("--mode", opt.mode, "exact | float");
    diagnose->add_option("--budget", opt.budget, "recursion state budget");

    auto* test = app.add_subcommand("test", "null-model tail p-values");
    add_model_options(test, opt);
    test->add_option("--t", opt.t, "category")->required();
    test->add_option("--kind", opt.kind, "exactly | at_least");
    test->add_option("--observed", observed, "observed count")->required();
    test->add_option("--side", side, "upper | lower | two_sided");
    test->add_option("--threshold", opt.threshold, "regime threshold on the mean");
    test->add_option("--mode", opt.mode, "exact | float");
    test->add_option("--budget", opt.budget, "recursion state budget");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_flag("--json", verify_json, "machine-readable output");

    try {
        app.parse(argc, argv);
        if (moments->parsed()) return cmd_moments(opt);
        if (pmf->parsed()) return cmd_pmf(opt);
        if (diagnose->parsed()) return cmd_diagnose(opt);
        if (test->parsed()) return cmd_test(opt, observed, side);
        if (verify->parsed()) return cmd_verify(verify_json);
    } catch (const CLI::ParseError& err) {
        return app.exit(err) == 0 ? kExitOk : kExitUsage;
    } catch (const mao::BudgetExceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
