// End-to-end acceptance checks. Each numbered criterion prints one PASS or
// FAIL line; the exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "resnet/ensemble.hpp"
#include "resnet/hypergeom.hpp"
#include "resnet/ingest.hpp"
#include "resnet/intervene.hpp"
#include "resnet/io.hpp"
#include "resnet/network.hpp"
#include "resnet/resilience.hpp"
#include "resnet/rng.hpp"
#include "resnet/signed.hpp"
#include "resnet/topology.hpp"

using namespace resnet;

namespace {

std::vector<std::string> node_names(std::size_t n) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = "a" + std::to_string(i);
    }
    return ids;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// exact binomial coefficients, C(n, k) for n <= 30 fits a double exactly
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

// --- criterion 1: resilience surface corners and symmetry ---------------

bool criterion_surface(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    if (resilience(0.0, 0.0) != 0.0 || resilience(1.0, 1.0) != 0.0 ||
        resilience(1.0, 0.0) != 1.0 || resilience(0.0, 1.0) != 1.0) {
        detail = "corner values wrong";
        return false;
    }
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double a = i / 100.0;
            const double b = j / 100.0;
            if (resilience(a, b) != resilience(b, a)) {
                detail = "asymmetry at (" + std::to_string(a) + "," +
                         std::to_string(b) + ")";
                return false;
            }
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 1.0) {
        detail = "too slow: " + std::to_string(dt) + " s";
        return false;
    }
    detail = "corners exact, 101x101 symmetry, " + std::to_string(dt) + " s";
    return true;
}

// --- criterion 2: balance-to-robustness mapping -------------------------

bool criterion_balance_map(std::string& detail) {
    if (robustness_from_balance(0.0, 0.2) != 0.5) {
        detail = "R(0) != 0.5";
        return false;
    }
    double prev = -1.0;
    for (int k = 0; k < 1000; ++k) {
        const double t = -1.0 + 2.0 * k / 999.0;
        const double r = robustness_from_balance(t, 0.2);
        if (r < prev) {
            detail = "monotonicity violated at T=" + std::to_string(t);
            return false;
        }
        prev = r;
    }
    detail = "midpoint exact, monotone over 1000 samples";
    return true;
}

// --- criterion 3: dyad distribution vs enumeration ----------------------

bool criterion_distribution(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const Pascal C(30);
    double worst = 0.0;
    for (std::int64_t M = 1; M <= 30; ++M) {
        for (std::int64_t K = 0; K <= M; ++K) {
            for (std::int64_t m = 0; m <= M; ++m) {
                const DyadMarginal d(M, K, m);
                const std::int64_t lo = std::max<std::int64_t>(0, m - (M - K));
                const std::int64_t hi = std::min(m, K);
                const double total = C(M, m);
                double cum = 0.0;
                for (std::int64_t x = lo; x <= hi; ++x) {
                    const double expected = C(K, x) * C(M - K, m - x) / total;
                    cum += expected;
                    worst = std::max(worst, std::abs(d.pmf(x) - expected));
                    worst = std::max(worst, std::abs(d.cdf(x) - cum));
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    if (worst > 1e-12) {
        detail = "max abs error " + std::to_string(worst);
        return false;
    }
    if (dt >= 30.0) {
        detail = "too slow: " + std::to_string(dt) + " s";
        return false;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max abs error %.2e over M<=30, %.2f s",
                  worst, dt);
    detail = buf;
    return true;
}

// --- criterion 4: signed inference vs enumeration -----------------------

bool criterion_signed(std::string& detail) {
    const Pascal C(30);
    double worst = 0.0;
    for (std::int64_t M = 2; M <= 30; ++M) {
        for (std::int64_t K = 1; K < M; ++K) {
            for (std::int64_t m = 1; m <= M; ++m) {
                const Ensemble e(node_names(2),
                                 {0.0, static_cast<double>(K),
                                  static_cast<double>(M - K), 0.0},
                                 {1.0, 1.0, 1.0, 1.0}, m);
                const std::int64_t lo = std::max<std::int64_t>(0, m - (M - K));
                const std::int64_t hi = std::min(m, K);
                const double total = C(M, m);
                // oracle tail sums for the (0,1) dyad
                std::vector<double> pmf;
                for (std::int64_t x = lo; x <= hi; ++x) {
                    pmf.push_back(C(K, x) * C(M - K, m - x) / total);
                }
                double prev_omega = -2.0;
                for (std::int64_t a = std::max<std::int64_t>(lo, 0); a <= hi;
                     ++a) {
                    std::vector<std::int64_t> counts{0, a, 0, 0};
                    const MultiEdgeNetwork net(node_names(2), counts, true);
                    const auto sn = infer_signed(net, e);
                    const double got = sn.at(0, 1);
                    double below = 0.0;
                    double above = 0.0;
                    for (std::int64_t x = lo; x <= hi; ++x) {
                        const double p = pmf[static_cast<std::size_t>(x - lo)];
                        if (x < a) below += p;
                        if (x > a) above += p;
                    }
                    worst = std::max(worst, std::abs(got - (below - above)));
                    if (got < -1.0 || got > 1.0) {
                        detail = "omega out of range";
                        return false;
                    }
                    if (got + 1e-12 < prev_omega) {
                        detail = "omega not monotone in the count";
                        return false;
                    }
                    prev_omega = got;
                }
            }
        }
    }
    if (worst > 1e-12) {
        detail = "max abs error " + std::to_string(worst);
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "max abs error %.2e, bounds and monotonicity clean", worst);
    detail = buf;
    return true;
}

// --- criterion 5: potentiality entropy ----------------------------------

// full enumeration of the multinomial entropy in nats
double entropy_enumerated(const std::vector<double>& p, int m) {
    const std::size_t D = p.size();
    const double log_m_fact = std::lgamma(m + 1.0);
    double h = 0.0;
    std::vector<int> head(D - 1, 0);
    while (true) {
        const int used = std::accumulate(head.begin(), head.end(), 0);
        if (used <= m) {
            double lp = log_m_fact;
            bool feasible = true;
            for (std::size_t k = 0; k < D; ++k) {
                const int xk = k + 1 < D ? head[k] : m - used;
                if (xk > 0) {
                    if (p[k] == 0.0) {
                        feasible = false;
                        break;
                    }
                    lp -= std::lgamma(xk + 1.0);
                    lp += xk * std::log(p[k]);
                }
            }
            if (feasible) {
                const double pr = std::exp(lp);
                if (pr > 0.0) {
                    h -= pr * std::log(pr);
                }
            }
        }
        std::size_t pos = 0;
        while (pos + 1 < D) {
            if (++head[pos] <= m) {
                break;
            }
            head[pos] = 0;
            ++pos;
        }
        if (pos + 1 >= D) {
            break;
        }
    }
    return h;
}

Ensemble ensemble_from_weights(const std::vector<double>& xi_weights,
                               std::int64_t m) {
    // weights fill the off-diagonal dyads of a small square matrix
    std::size_t n = 2;
    while (n * (n - 1) < xi_weights.size()) {
        ++n;
    }
    std::vector<double> xi(n * n, 0.0);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n && next < xi_weights.size(); ++i) {
        for (std::size_t j = 0; j < n && next < xi_weights.size(); ++j) {
            if (i != j) {
                xi[i * n + j] = xi_weights[next++];
            }
        }
    }
    return Ensemble(node_names(n), xi, std::vector<double>(n * n, 1.0), m);
}

bool criterion_potentiality(std::string& detail) {
    Rng rng(31);
    double worst = 0.0;
    for (std::size_t D = 2; D <= 4; ++D) {
        for (int m = 1; m <= 6; ++m) {
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<double> w(D);
                double sum = 0.0;
                for (auto& v : w) {
                    v = 0.2 + rng.uniform01();
                    sum += v;
                }
                const auto e = ensemble_from_weights(w, m);
                const auto pot = potentiality(e);
                if (!pot.exact) {
                    detail = "small instance did not take the exact path";
                    return false;
                }
                std::vector<double> p(D);
                for (std::size_t k = 0; k < D; ++k) {
                    p[k] = w[k] / sum;
                }
                const double h = entropy_enumerated(p, m);
                const double h_max =
                    entropy_enumerated(std::vector<double>(D, 1.0 / D), m);
                worst = std::max(worst, std::abs(pot.value - h / h_max));
            }
        }
    }
    if (worst > 1e-10) {
        detail = "enumeration mismatch " + std::to_string(worst);
        return false;
    }

    // exact endpoints
    const auto uniform = potentiality(ensemble_from_weights({2.0, 2.0}, 9));
    if (uniform.value != 1.0) {
        detail = "uniform p did not give exactly 1";
        return false;
    }
    const auto degenerate = potentiality(ensemble_from_weights({3.0}, 9));
    if (degenerate.value != 0.0 || !degenerate.degenerate) {
        detail = "degenerate p did not give exactly 0";
        return false;
    }

    // Monte-Carlo within 3 reported standard errors of the exact value
    int mc_hits = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t D = 2 + rng.below(9);
        std::vector<double> w(D);
        for (auto& v : w) {
            v = 0.2 + 2.0 * rng.uniform01();
        }
        const std::int64_t m = 5 + static_cast<std::int64_t>(rng.below(46));
        const auto e = ensemble_from_weights(w, m);
        const auto exact = potentiality(e);
        const auto mc = potentiality_monte_carlo(
            e, 100000, 1000 + static_cast<std::uint64_t>(trial));
        // the reported standard error lives on the normalized scale
        const double se = std::max(mc.std_error, 1e-12);
        if (std::abs(mc.value - exact.value) <= 3.0 * se) {
            ++mc_hits;
        }
    }
    if (mc_hits < 20) {
        detail = "Monte-Carlo outside 3 SE on " + std::to_string(20 - mc_hits) +
                 "/20 instances";
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "enumeration error %.2e, endpoints exact, 20/20 MC", worst);
    detail = buf;
    return true;
}

// --- criterion 6: planted parameter recovery ----------------------------

bool criterion_mle(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 20;
    const std::int64_t m = 10000;

    // two blocks of 10 with within-block odds 3, across 1
    std::vector<int> assignment(n);
    for (std::size_t i = 0; i < n; ++i) {
        assignment[i] = i < 10 ? 0 : 1;
    }
    std::vector<double> xi(n * n, 0.0);
    std::vector<double> omega_blocks(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            xi[i * n + j] = 1.0;
            if (assignment[i] == assignment[j]) {
                omega_blocks[i * n + j] = 3.0;
            }
        }
    }
    const Ensemble block_truth(node_names(n), xi, omega_blocks, m);
    double ratio_sum = 0.0;
    for (int s = 1; s <= 20; ++s) {
        const auto sample = block_truth.sample(static_cast<std::uint64_t>(s));
        const auto b = fit_blocks(sample, assignment);
        ratio_sum += b.at(0, 0) / b.at(0, 1);
    }
    const double ratio = ratio_sum / 20.0;
    if (std::abs(ratio - 3.0) / 3.0 > 0.05) {
        detail = "block odds ratio " + std::to_string(ratio);
        return false;
    }

    // regression with planted beta = (1.0, -0.5); the layers are
    // double-centered in log space so degree effects (absorbed by the
    // combinatorial matrix) do not attenuate the planted coefficients
    Rng rng(17);
    std::vector<double> s1(n * n, 1.0);
    std::vector<double> s2(n * n, 1.0);
    std::vector<double> omega_reg(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            s1[i * n + j] = std::exp(2.0 * rng.uniform01() - 1.0);
            s2[i * n + j] = std::exp(2.0 * rng.uniform01() - 1.0);
        }
    }
    auto double_center = [n](std::vector<double>& layer) {
        std::vector<double> z(n * n, 0.0);
        for (std::size_t k = 0; k < n * n; ++k) {
            z[k] = std::log(layer[k]);
        }
        for (int pass = 0; pass < 50; ++pass) {
            for (std::size_t i = 0; i < n; ++i) {
                double mu = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (i != j) mu += z[i * n + j];
                }
                mu /= static_cast<double>(n - 1);
                for (std::size_t j = 0; j < n; ++j) {
                    if (i != j) z[i * n + j] -= mu;
                }
            }
            for (std::size_t j = 0; j < n; ++j) {
                double mu = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != j) mu += z[i * n + j];
                }
                mu /= static_cast<double>(n - 1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (i != j) z[i * n + j] -= mu;
                }
            }
        }
        for (std::size_t k = 0; k < n * n; ++k) {
            layer[k] = std::exp(z[k]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            layer[i * n + i] = 1.0;
        }
    };
    double_center(s1);
    double_center(s2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                omega_reg[i * n + j] =
                    s1[i * n + j] / std::sqrt(s2[i * n + j]);
            }
        }
    }
    const Ensemble reg_truth(node_names(n), xi, omega_reg, m);
    double b0 = 0.0;
    double b1 = 0.0;
    for (int s = 1; s <= 20; ++s) {
        const auto sample = reg_truth.sample(static_cast<std::uint64_t>(s));
        LayerStack stack;
        stack.n = n;
        stack.layers = {s1, s2};
        const auto report = fit_regression(sample, stack);
        b0 += report.beta[0];
        b1 += report.beta[1];
    }
    b0 /= 20.0;
    b1 /= 20.0;
    if (std::abs(b0 - 1.0) > 0.1 || std::abs(b1 + 0.5) > 0.1) {
        detail = "beta = (" + std::to_string(b0) + "," + std::to_string(b1) +
                 ")";
        return false;
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) {
        detail = "too slow: " + std::to_string(dt) + " s";
        return false;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "odds ratio %.3f, mean beta (%.3f, %.3f), %.1f s", ratio, b0,
                  b1, dt);
    detail = buf;
    return true;
}

// --- criterion 7: targeted vs random removal, cascade termination -------

MultiEdgeNetwork core_periphery(std::uint64_t seed) {
    const std::size_t n = 100;
    const std::size_t core = 10;
    Rng rng(seed);
    std::vector<std::int64_t> counts(n * n, 0);
    for (std::size_t i = 0; i < core; ++i) {
        for (std::size_t j = 0; j < core; ++j) {
            if (i != j) {
                counts[i * n + j] = 3;
            }
        }
    }
    for (std::size_t p = core; p < n; ++p) {
        // two anchors into the core, mutual single edges
        for (int k = 0; k < 2; ++k) {
            const std::size_t anchor = rng.below(core);
            counts[p * n + anchor] += 1;
            counts[anchor * n + p] += 1;
        }
    }
    return MultiEdgeNetwork(node_names(n), counts, true);
}

double mean_core(const MultiEdgeNetwork& net) {
    const auto core = kcore_decomposition(net, false);
    return std::accumulate(core.begin(), core.end(), 0.0) /
           static_cast<double>(core.size());
}

bool criterion_cascade(std::string& detail) {
    int directional = 0;
    int terminated = 0;
    ResilienceConfig cfg;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto net = core_periphery(seed);
        const auto coreness = kcore_decomposition(net, false);

        // five highest-coreness nodes
        std::vector<std::size_t> order(net.n());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                             return coreness[a] > coreness[b];
                         });
        std::vector<std::string> targeted;
        for (std::size_t k = 0; k < 5; ++k) {
            targeted.push_back(net.node_ids()[order[k]]);
        }
        const double after_targeted = mean_core(shock_remove(net, targeted));

        Rng rng(seed + 10000);
        std::vector<std::size_t> idx(net.n());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::string> random_pick;
        for (std::size_t k = 0; k < 5; ++k) {
            const std::size_t pick = k + rng.below(idx.size() - k);
            std::swap(idx[k], idx[pick]);
            random_pick.push_back(net.node_ids()[idx[k]]);
        }
        const double after_random = mean_core(shock_remove(net, random_pick));

        if (after_targeted <= after_random + 1e-12) {
            ++directional;
        }

        const double theta = 0.5 + rng.uniform01();
        const auto cascade = leave_cascade(net, theta, cfg);
        if (cascade.steps.size() <= net.n()) {
            ++terminated;
        }
    }
    if (directional < 80) {
        detail = "targeted beat random in only " + std::to_string(directional) +
                 "/100 instances";
        return false;
    }
    if (terminated != 100) {
        detail = "cascade overran the step bound";
        return false;
    }
    detail = "targeted <= random in " + std::to_string(directional) +
             "/100, all cascades terminated";
    return true;
}

// --- criterion 8: pipeline determinism and scale ------------------------

EventLog synthetic_log() {
    Rng rng(2024);
    EventLog log;
    const std::size_t actors = 200;
    const std::size_t artifacts = 300;
    for (int e = 0; e < 5000; ++e) {
        InteractionEvent ev;
        ev.actor = "a" + std::to_string(rng.below(actors));
        ev.object = "f" + std::to_string(rng.below(artifacts));
        ev.timestamp = static_cast<std::int64_t>(rng.below(1000));
        ev.weight = 1.0 + static_cast<double>(rng.below(9));
        log.events.push_back(std::move(ev));
    }
    // pin the extremes so exactly ten windows of width 100 appear
    log.events.front().timestamp = 0;
    log.events.back().timestamp = 999;
    return log;
}

std::string run_pipeline(const EventLog& log) {
    WindowSpec spec{100, 100, 50};
    const auto buckets = window_events(log, spec);
    std::vector<std::pair<WindowInterval, MultiEdgeNetwork>> windows;
    for (const auto& [interval, bucket] : buckets) {
        windows.emplace_back(
            interval,
            project_to_multiedge(BipartiteGraph::from_events(bucket), spec,
                                 false));
    }
    ResilienceConfig cfg;
    cfg.jobs = 4;
    return snapshots_to_csv(monitor(windows, cfg));
}

bool criterion_pipeline(std::string& detail) {
    const auto log = synthetic_log();
    const auto t0 = std::chrono::steady_clock::now();
    const auto first = run_pipeline(log);
    const double dt = seconds_since(t0);
    const auto second = run_pipeline(log);

    const auto rows = std::count(first.begin(), first.end(), '\n');
    if (rows != 11) {
        detail = "expected 10 windows, saw " + std::to_string(rows - 1);
        return false;
    }
    if (first != second) {
        detail = "series not byte-identical across runs";
        return false;
    }
    if (dt >= 10.0) {
        detail = "too slow: " + std::to_string(dt) + " s";
        return false;
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "10 windows, byte-identical, %.2f s", dt);
    detail = buf;
    return true;
}

struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. resilience surface corners and symmetry", criterion_surface},
        {"2. balance-to-robustness mapping", criterion_balance_map},
        {"3. dyad distribution vs enumeration", criterion_distribution},
        {"4. signed inference vs enumeration", criterion_signed},
        {"5. potentiality entropy", criterion_potentiality},
        {"6. planted parameter recovery", criterion_mle},
        {"7. targeted vs random removal and cascades", criterion_cascade},
        {"8. pipeline determinism and scale", criterion_pipeline},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        std::printf("%s: %s (%s)\n", ok ? "PASS" : "FAIL", c.name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
    return failures;
}
