#include "resnet/hypergeom.hpp"

#include <algorithm>
#include <cmath>

#include "resnet/errors.hpp"

namespace resnet {

DyadMarginal::DyadMarginal(std::int64_t M, std::int64_t K, std::int64_t m,
                           double odds) {
    if (M < 0 || K < 0 || K > M || m < 0 || m > M) {
        throw InputError("invalid hypergeometric parameters");
    }
    if (!(odds > 0.0) || !std::isfinite(odds)) {
        throw InputError("odds ratio must be positive and finite");
    }
    lo_ = std::max<std::int64_t>(0, m - (M - K));
    hi_ = std::min(m, K);
    const std::size_t len = static_cast<std::size_t>(hi_ - lo_ + 1);

    // log-weights via the pmf ratio recurrence, normalized by log-sum-exp;
    // normalization absorbs the common binomial factor
    std::vector<double> lw(len, 0.0);
    const double log_odds = std::log(odds);
    for (std::size_t idx = 1; idx < len; ++idx) {
        const double x = static_cast<double>(lo_ + static_cast<std::int64_t>(idx) - 1);
        const double up = (static_cast<double>(K) - x) *
                          (static_cast<double>(m) - x);
        const double down = (x + 1.0) *
                            (static_cast<double>(M - K - m) + x + 1.0);
        lw[idx] = lw[idx - 1] + std::log(up) - std::log(down) + log_odds;
    }
    const double peak = *std::max_element(lw.begin(), lw.end());
    pmf_.resize(len);
    double total = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        pmf_[i] = std::exp(lw[i] - peak);
        total += pmf_[i];
    }
    cdf_.resize(len);
    double run = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        pmf_[i] /= total;
        run += pmf_[i];
        cdf_[i] = std::min(run, 1.0);
    }
    cdf_.back() = 1.0;
}

double DyadMarginal::pmf(std::int64_t x) const {
    if (x < lo_ || x > hi_) {
        return 0.0;
    }
    return pmf_[static_cast<std::size_t>(x - lo_)];
}

double DyadMarginal::cdf(std::int64_t x) const {
    if (x < lo_) {
        return 0.0;
    }
    if (x >= hi_) {
        return 1.0;
    }
    return cdf_[static_cast<std::size_t>(x - lo_)];
}

double DyadMarginal::sf(std::int64_t x) const {
    if (x < lo_) {
        return 1.0;
    }
    if (x >= hi_) {
        return 0.0;
    }
    // accumulate the upper tail directly to keep it accurate when small
    double tail = 0.0;
    for (std::int64_t t = hi_; t > x; --t) {
        tail += pmf_[static_cast<std::size_t>(t - lo_)];
    }
    return std::min(tail, 1.0);
}

}  // namespace resnet
