#pragma once

#include <cstdint>
#include <vector>

namespace resnet {

// Marginal distribution of one dyad's edge count when m edges are drawn from
// M possible stub pairings of which K belong to the dyad. odds = 1 gives the
// central hypergeometric; otherwise Fisher's noncentral hypergeometric with
// the given odds ratio.
class DyadMarginal {
public:
    DyadMarginal(std::int64_t M, std::int64_t K, std::int64_t m,
                 double odds = 1.0);

    std::int64_t support_min() const { return lo_; }
    std::int64_t support_max() const { return hi_; }

    double pmf(std::int64_t x) const;
    double cdf(std::int64_t x) const;  // Pr(X <= x)
    double sf(std::int64_t x) const;   // Pr(X > x)

private:
    std::int64_t lo_ = 0;
    std::int64_t hi_ = 0;
    std::vector<double> pmf_;  // normalized over [lo_, hi_]
    std::vector<double> cdf_;
};

}  // namespace resnet
