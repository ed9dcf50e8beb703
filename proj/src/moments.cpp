#include "mao/moments.hpp"

#include <stdexcept>
#include <vector>

#include "mao/combinatorics.hpp"

namespace mao {

namespace {

std::vector<int> repeat_categories(const std::map<int, int>& counts) {
    std::vector<int> list;
    for (const auto& [t, n] : counts) {
        if (n < 0) throw std::invalid_argument("factorial_moment: negative repetition");
        for (int i = 0; i < n; ++i) list.push_back(t);
    }
    return list;
}

// E[prod_s X_{=s}^{e_s}] from mixed factorial moments, converting each
// per-category power with Stirling numbers of the second kind.
Rational raw_product_moment(NormCache& norms, const std::vector<std::pair<int, int>>& powers) {
    Rational total = 0;
    std::vector<int> ks(powers.size(), 0);
    auto recurse = [&](auto&& self, size_t i, Rational coeff) -> void {
        if (i == powers.size()) {
            std::vector<int> list;
            for (size_t j = 0; j < powers.size(); ++j)
                for (int rep = 0; rep < ks[j]; ++rep) list.push_back(powers[j].first);
            total += list.empty() ? coeff : coeff * norms(std::move(list));
            return;
        }
        int e = powers[i].second;
        for (int k = (e == 0 ? 0 : 1); k <= e; ++k) {
            Integer s2 = stirling2(static_cast<unsigned>(e), static_cast<unsigned>(k));
            if (s2 == 0) continue;
            ks[i] = k;
            self(self, i + 1, coeff * Rational(s2));
        }
        ks[i] = 0;
    };
    recurse(recurse, 0, Rational(1));
    return total;
}

std::vector<int> window_of(const ModelParams& params, const VariableSpec& var) {
    if (var.t < 0 || var.t > params.T())
        throw std::invalid_argument("VariableSpec: t outside {0..T}");
    if (var.kind == VariableSpec::Kind::exactly) return {var.t};
    std::vector<int> w;
    for (int s = var.t; s <= params.T(); ++s) w.push_back(s);
    return w;
}

// Raw moment E[(sum_{s in window} X_{=s})^order] via multinomial expansion.
Rational window_raw_moment(NormCache& norms, const std::vector<int>& window, int order) {
    if (order == 0) return 1;
    Rational total = 0;
    std::vector<int> exps(window.size(), 0);
    Integer order_fact = factorial(static_cast<unsigned>(order));
    auto recurse = [&](auto&& self, size_t i, int left) -> void {
        if (i + 1 == window.size()) {
            exps[i] = left;
            Integer coeff = order_fact;
            std::vector<std::pair<int, int>> powers;
            for (size_t j = 0; j < window.size(); ++j) {
                coeff /= factorial(static_cast<unsigned>(exps[j]));
                if (exps[j] > 0) powers.emplace_back(window[j], exps[j]);
            }
            total += Rational(coeff) * raw_product_moment(norms, powers);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[i] = e;
            self(self, i + 1, left - e);
        }
    };
    recurse(recurse, 0, order);
    return total;
}

}  // namespace

Rational factorial_moment(NormCache& norms, const std::map<int, int>& counts) {
    auto list = repeat_categories(counts);
    if (list.empty()) return 1;
    return norms(std::move(list));
}

Rational factorial_moment(const ModelParams& params, const std::map<int, int>& counts) {
    NormCache norms(params);
    return factorial_moment(norms, counts);
}

Rational mean_count(const ModelParams& params, const VariableSpec& var) {
    NormCache norms(params);
    Rational mu = 0;
    for (int s : window_of(params, var)) mu += norms({s});
    return mu;
}

Rational central_moment(NormCache& norms, const VariableSpec& var, int order) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("central_moment: order must be in 1..4");
    if (order == 1) return 0;
    const auto window = window_of(norms.params(), var);
    std::vector<Rational> raw(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        raw[static_cast<size_t>(n)] = window_raw_moment(norms, window, n);
    const Rational& mu = raw[1];
    // E[(Y - mu)^order] = sum_k C(order,k) E[Y^k] (-mu)^(order-k)
    Rational out = 0;
    Rational neg_mu_pow = 1;
    for (int k = order; k >= 0; --k) {
        out += Rational(binomial(static_cast<unsigned>(order), k)) * raw[static_cast<size_t>(k)] *
               neg_mu_pow;
        neg_mu_pow *= -mu;
    }
    return out;
}

Rational central_moment(const ModelParams& params, const VariableSpec& var, int order) {
    NormCache norms(params);
    return central_moment(norms, var, order);
}

Rational covariance_counts(const ModelParams& params, int t, int s) {
    if (t == s)
        throw std::invalid_argument("covariance_counts: use central_moment(order 2) for t == s");
    NormCache norms(params);
    return norms({t, s}) - norms({t}) * norms({s});
}

Rational indicator_covariance(const ModelParams& params, int t) {
    NormCache norms(params);
    Rational pair_prob = norms({t, t}) / Rational(Integer(params.N) * Integer(params.N - 1));
    Rational pi = norms({t}) / params.N;
    return pair_prob - pi * pi;
}

MomentReport formula_moment_report(NormCache& norms, const VariableSpec& var) {
    MomentReport report;
    report.mode = NumericMode::exact;
    report.mean = 0;
    for (int s : window_of(norms.params(), var)) report.mean += norms({s});
    report.variance = central_moment(norms, var, 2);
    report.third_central = central_moment(norms, var, 3);
    report.fourth_central = central_moment(norms, var, 4);
    return report;
}

MomentReport formula_moment_report(const ModelParams& params, const VariableSpec& var) {
    NormCache norms(params);
    return formula_moment_report(norms, var);
}

}  // namespace mao
