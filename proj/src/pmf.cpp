#include "mao/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mao {

Rational Pmf::sum() const {
    Rational s = 0;
    for (const auto& q : p) s += q;
    return s;
}

Pmf Pmf::point_mass(long value, NumericMode mode) {
    if (value < 0) throw std::invalid_argument("point_mass: negative value");
    Pmf out;
    out.mode = mode;
    out.p.assign(static_cast<size_t>(value) + 1, Rational(0));
    out.p.back() = 1;
    return out;
}

MomentReport pmf_moments(const Pmf& pmf) {
    Rational mean = 0;
    for (size_t k = 0; k < pmf.p.size(); ++k) mean += Rational(static_cast<long>(k)) * pmf.p[k];
    Rational c2 = 0, c3 = 0, c4 = 0;
    for (size_t k = 0; k < pmf.p.size(); ++k) {
        Rational d = Rational(static_cast<long>(k)) - mean;
        Rational d2 = d * d;
        c2 += d2 * pmf.p[k];
        c3 += d2 * d * pmf.p[k];
        c4 += d2 * d2 * pmf.p[k];
    }
    return {mean, c2, c3, c4, pmf.mode};
}

double distance(const Pmf& a, const Pmf& b, DistanceMetric metric) {
    size_t n = std::max(a.p.size(), b.p.size());
    auto at = [](const Pmf& x, size_t k) {
        return k < x.p.size() ? to_double(x.p[k]) : 0.0;
    };
    if (metric == DistanceMetric::tv) {
        double s = 0;
        for (size_t k = 0; k < n; ++k) s += std::abs(at(a, k) - at(b, k));
        return 0.5 * s;
    }
    double ca = 0, cb = 0, worst = 0;
    for (size_t k = 0; k < n; ++k) {
        ca += at(a, k);
        cb += at(b, k);
        worst = std::max(worst, std::abs(ca - cb));
    }
    return worst;
}

Rational tail_pvalue(const Pmf& null_law, long observed, TailSide side) {
    if (observed < 0) throw std::out_of_range("tail_pvalue: observed < 0");
    auto upper = [&] {
        Rational s = 0;
        for (size_t k = static_cast<size_t>(std::min<long>(observed, static_cast<long>(null_law.p.size())));
             k < null_law.p.size(); ++k)
            s += null_law.p[k];
        return s;
    };
    auto lower = [&] {
        Rational s = 0;
        size_t stop = std::min(null_law.p.size(), static_cast<size_t>(observed) + 1);
        for (size_t k = 0; k < stop; ++k) s += null_law.p[k];
        return s;
    };
    switch (side) {
        case TailSide::upper:
            return upper();
        case TailSide::lower:
            return lower();
        case TailSide::two_sided: {
            Rational two = 2 * std::min(upper(), lower());
            return two > 1 ? Rational(1) : two;
        }
    }
    throw std::logic_error("tail_pvalue: bad side");
}

}  // namespace mao
