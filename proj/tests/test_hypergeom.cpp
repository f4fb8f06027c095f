#include <doctest.h>

#include <cmath>
#include <vector>

#include "resnet/errors.hpp"
#include "resnet/hypergeom.hpp"

using namespace resnet;

namespace {

// oracle: exact binomial coefficients from Pascal's triangle
struct Pascal {
    std::vector<std::vector<double>> c;
    explicit Pascal(int n) : c(n + 1) {
        for (int i = 0; i <= n; ++i) {
            c[i].assign(i + 1, 1.0);
            for (int j = 1; j < i; ++j) {
                c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
            }
        }
    }
    double operator()(std::int64_t n, std::int64_t k) const {
        if (k < 0 || k > n) {
            return 0.0;
        }
        return c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
};

std::vector<double> oracle_pmf(const Pascal& C, std::int64_t M, std::int64_t K,
                               std::int64_t m, double odds) {
    const std::int64_t lo = std::max<std::int64_t>(0, m - (M - K));
    const std::int64_t hi = std::min(m, K);
    std::vector<double> pmf(static_cast<std::size_t>(hi - lo + 1), 0.0);
    double z = 0.0;
    for (std::int64_t x = lo; x <= hi; ++x) {
        const double w = C(K, x) * C(M - K, m - x) * std::pow(odds, static_cast<double>(x));
        pmf[static_cast<std::size_t>(x - lo)] = w;
        z += w;
    }
    for (auto& p : pmf) {
        p /= z;
    }
    return pmf;
}

}  // namespace

TEST_CASE("central hypergeometric: spec instance M=12 K=4 m=3") {
    const DyadMarginal d(12, 4, 3);
    CHECK(d.cdf(1) == doctest::Approx(168.0 / 220.0).epsilon(1e-12));
    CHECK(d.cdf(2) == doctest::Approx(216.0 / 220.0).epsilon(1e-12));
    CHECK(d.pmf(3) == doctest::Approx(4.0 / 220.0).epsilon(1e-12));
}

TEST_CASE("support boundaries") {
    const DyadMarginal d(12, 4, 3);
    CHECK(d.cdf(3) == 1.0);
    CHECK(d.cdf(100) == 1.0);
    CHECK(d.cdf(-1) == 0.0);
    // forced lower bound: m > M - K
    const DyadMarginal tight(10, 8, 9);
    CHECK(tight.support_min() == 7);
    CHECK(tight.cdf(6) == 0.0);
    CHECK(tight.sf(6) == 1.0);
}

TEST_CASE("pmf sums to one and cdf is non-decreasing") {
    const Pascal C(40);
    for (std::int64_t M : {5, 12, 25}) {
        for (std::int64_t K : std::vector<std::int64_t>{1, 3, M / 2, M}) {
            for (std::int64_t m : std::vector<std::int64_t>{0, 2, M / 2, M}) {
                for (double odds : {1.0, 0.3, 2.5}) {
                    const DyadMarginal d(M, K, m, odds);
                    double sum = 0.0;
                    double prev = 0.0;
                    for (std::int64_t x = d.support_min(); x <= d.support_max();
                         ++x) {
                        sum += d.pmf(x);
                        CHECK(d.cdf(x) >= prev);
                        prev = d.cdf(x);
                    }
                    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("noncentral pmf matches the enumeration oracle") {
    const Pascal C(30);
    for (std::int64_t M : {6, 15, 28}) {
        for (std::int64_t K = 1; K <= M; K += 3) {
            for (std::int64_t m = 1; m <= M; m += 4) {
                for (double odds : {0.25, 1.0, 4.0}) {
                    const DyadMarginal d(M, K, m, odds);
                    const auto expected = oracle_pmf(C, M, K, m, odds);
                    for (std::int64_t x = d.support_min();
                         x <= d.support_max(); ++x) {
                        const double e =
                            expected[static_cast<std::size_t>(x - d.support_min())];
                        CHECK(d.pmf(x) == doctest::Approx(e).epsilon(1e-11));
                    }
                }
            }
        }
    }
}

TEST_CASE("invalid parameters rejected") {
    CHECK_THROWS_AS(DyadMarginal(10, 12, 3), InputError);
    CHECK_THROWS_AS(DyadMarginal(10, 4, 12), InputError);
    CHECK_THROWS_AS(DyadMarginal(10, 4, 3, -1.0), InputError);
}
