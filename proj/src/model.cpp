#include "mao/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mao {

ModelParams::ModelParams(long population, std::vector<long> subset_sizes)
    : N(population), m(std::move(subset_sizes)) {
    validate();
}

ModelParams::ModelParams(long population, long subset_size, int rounds)
    : N(population), m(static_cast<size_t>(rounds), subset_size) {
    validate();
}

bool ModelParams::equal_sizes() const {
    return std::all_of(m.begin(), m.end(), [&](long mj) { return mj == m.front(); });
}

Rational ModelParams::p() const {
    if (!equal_sizes())
        throw std::invalid_argument("ModelParams::p(): subset sizes are unequal");
    return p(0);
}

void ModelParams::validate() const {
    if (N < 2) throw std::invalid_argument("ModelParams: N must be at least 2");
    if (m.empty()) throw std::invalid_argument("ModelParams: T must be at least 1");
    for (long mj : m) {
        if (mj <= 0 || mj >= N) {
            std::ostringstream msg;
            msg << "ModelParams: subset size " << mj << " outside (0, " << N << ")";
            throw std::invalid_argument(msg.str());
        }
    }
}

void CategoryList::validate(const ModelParams& params) const {
    if (categories.empty())
        throw std::invalid_argument("CategoryList: at least one category required");
    if (static_cast<long>(categories.size()) > params.N)
        throw std::invalid_argument("CategoryList: list longer than population");
    for (int t : categories) {
        if (t < 0 || t > params.T())
            throw std::invalid_argument("CategoryList: category outside {0..T}");
    }
}

}  // namespace mao
