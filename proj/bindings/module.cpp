// Python bindings for the main library operations.  Exact rationals cross
// the boundary as (float, decimal-string) pairs; the heavy lifting stays in
// the C++ core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mao/approx.hpp"
#include "mao/exact_dist.hpp"
#include "mao/moments.hpp"
#include "mao/montecarlo.hpp"
#include "mao/norm.hpp"
#include "mao/report.hpp"
#include "mao/verify.hpp"

namespace py = pybind11;

namespace {

mao::ModelParams make_params(long N, const std::vector<long>& m) {
    return mao::ModelParams(N, m);
}

mao::VariableSpec make_var(int t, const std::string& kind) {
    if (kind == "exactly") return mao::VariableSpec::exactly(t);
    if (kind == "at_least") return mao::VariableSpec::at_least(t);
    throw std::invalid_argument("kind must be 'exactly' or 'at_least'");
}

py::dict rational_dict(const mao::Rational& value) {
    py::dict out;
    out["value"] = mao::to_double(value);
    out["dec"] = mao::to_decimal_string(value, 12);
    return out;
}

py::dict report_dict(const mao::MomentReport& report) {
    py::dict out;
    out["mean"] = rational_dict(report.mean);
    out["variance"] = rational_dict(report.variance);
    out["third_central"] = rational_dict(report.third_central);
    out["fourth_central"] = rational_dict(report.fourth_central);
    out["mode"] = mao::to_string(report.mode);
    return out;
}

std::vector<double> pmf_floats(const mao::Pmf& pmf) {
    std::vector<double> out;
    out.reserve(pmf.size());
    for (const auto& q : pmf.p) out.push_back(mao::to_double(q));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "multi-set allocation occupancy distribution (exact, simulated, approximate)";

    mod.def(
        "norm",
        [](long N, const std::vector<long>& m, const std::vector<int>& categories) {
            return rational_dict(mao::norm(make_params(N, m), mao::CategoryList{categories}));
        },
        py::arg("N"), py::arg("m"), py::arg("categories"),
        "Allocation norm of a category list.");

    mod.def(
        "moments",
        [](long N, const std::vector<long>& m, int t, const std::string& kind,
           const std::string& method, long R, uint64_t seed, int threads) {
            mao::MomentMethod mm = mao::MomentMethod::formula;
            if (method == "exact")
                mm = mao::MomentMethod::exact_dp;
            else if (method == "mc")
                mm = mao::MomentMethod::monte_carlo;
            else if (method != "formula")
                throw std::invalid_argument("method must be formula, exact or mc");
            mao::MomentOptions options;
            options.replicates = R;
            options.seed = seed;
            options.threads = threads;
            return report_dict(
                mao::moment_report(make_params(N, m), make_var(t, kind), mm, options));
        },
        py::arg("N"), py::arg("m"), py::arg("t"), py::arg("kind") = "exactly",
        py::arg("method") = "formula", py::arg("R") = 100000, py::arg("seed") = 0,
        py::arg("threads") = 1, "Mean and central moments 2..4 of the count variable.");

    mod.def(
        "pmf",
        [](long N, const std::vector<long>& m, int t, const std::string& kind,
           const std::string& mode, size_t budget) {
            const mao::NumericMode nm =
                mode == "float" ? mao::NumericMode::floating : mao::NumericMode::exact;
            return pmf_floats(
                mao::exact_marginal_pmf(make_params(N, m), make_var(t, kind), nm, budget));
        },
        py::arg("N"), py::arg("m"), py::arg("t"), py::arg("kind") = "exactly",
        py::arg("mode") = "exact", py::arg("budget") = mao::kDefaultStateBudget,
        "Exact pmf of the count variable, as a list of probabilities over 0..N.");

    mod.def(
        "simulate",
        [](long N, const std::vector<long>& m, int t, const std::string& kind, long R,
           uint64_t seed, int threads) {
            const mao::SimulationResult sim = mao::simulate(
                make_params(N, m), {make_var(t, kind)}, R, seed, threads);
            return pmf_floats(sim.empirical.front());
        },
        py::arg("N"), py::arg("m"), py::arg("t"), py::arg("kind") = "exactly",
        py::arg("R") = 100000, py::arg("seed") = 0, py::arg("threads") = 1,
        "Empirical pmf from R replicates (deterministic in (seed, R)).");

    mod.def(
        "diagnose",
        [](long N, const std::vector<long>& m, int t, double threshold) {
            const mao::ApproxDiagnostics diag =
                mao::chen_stein_bound(make_params(N, m), t, threshold);
            py::dict out;
            out["lambda"] = rational_dict(diag.lambda);
            out["variance"] = rational_dict(diag.variance);
            out["delta"] = rational_dict(diag.delta);
            out["big_delta"] = rational_dict(diag.big_delta);
            out["chen_stein_bound"] = rational_dict(diag.chen_stein_bound);
            out["regime"] = mao::to_string(diag.regime);
            out["threshold"] = diag.regime_threshold;
            return out;
        },
        py::arg("N"), py::arg("m"), py::arg("t"),
        py::arg("threshold") = mao::kDefaultRegimeThreshold,
        "Poisson/normal regime diagnostics for X_{=t} (equal subset sizes).");

    mod.def(
        "tail_pvalue",
        [](long N, const std::vector<long>& m, int t, const std::string& kind, long observed,
           const std::string& side) {
            mao::TailSide s = mao::TailSide::upper;
            if (side == "lower")
                s = mao::TailSide::lower;
            else if (side == "two_sided")
                s = mao::TailSide::two_sided;
            else if (side != "upper")
                throw std::invalid_argument("side must be upper, lower or two_sided");
            const mao::Pmf law = mao::exact_marginal_pmf(make_params(N, m), make_var(t, kind));
            return mao::to_double(mao::tail_pvalue(law, observed, s));
        },
        py::arg("N"), py::arg("m"), py::arg("t"), py::arg("kind"), py::arg("observed"),
        py::arg("side") = "upper", "Exact tail p-value under the null allocation model.");

    mod.def(
        "verify",
        []() {
            const mao::VerifyReport report = mao::run_verification();
            py::list rows;
            for (const auto& c : report.criteria) {
                py::dict row;
                row["id"] = c.id;
                row["name"] = c.name;
                row["pass"] = c.pass;
                row["details"] = c.details;
                row["seconds"] = c.seconds;
                rows.append(std::move(row));
            }
            return rows;
        },
        "Run the full verification suite; returns one record per criterion.");
}
