#include "mao/report.hpp"

#include <stdexcept>

#include "mao/moments.hpp"
#include "mao/montecarlo.hpp"

namespace mao {

MomentReport moment_report(const ModelParams& params, const VariableSpec& var, MomentMethod method,
                           const MomentOptions& options) {
    switch (method) {
        case MomentMethod::formula:
            return formula_moment_report(params, var);
        case MomentMethod::exact_dp: {
            Pmf pmf = exact_marginal_pmf(params, var, options.mode, options.state_budget);
            return pmf_moments(pmf);
        }
        case MomentMethod::monte_carlo: {
            SimulationResult sim =
                simulate(params, {var}, options.replicates, options.seed, options.threads);
            return sim.moments.front();
        }
    }
    throw std::logic_error("moment_report: bad method");
}

}  // namespace mao
