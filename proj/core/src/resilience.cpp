#include "resnet/resilience.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "resnet/balance.hpp"
#include "resnet/ensemble.hpp"
#include "resnet/topology.hpp"

namespace resnet {

RobustnessSource robustness_source_from_string(const std::string& s) {
    if (s == "balance") return RobustnessSource::Balance;
    if (s == "coreness") return RobustnessSource::Coreness;
    if (s == "centralization") return RobustnessSource::Centralization;
    if (s == "eigengap") return RobustnessSource::Eigengap;
    throw InputError("unknown robustness source '" + s +
                     "' (allowed: balance, coreness, centralization, eigengap)");
}

std::string to_string(RobustnessSource s) {
    switch (s) {
        case RobustnessSource::Balance: return "balance";
        case RobustnessSource::Coreness: return "coreness";
        case RobustnessSource::Centralization: return "centralization";
        case RobustnessSource::Eigengap: return "eigengap";
    }
    return "?";
}

double robustness_from_balance(std::optional<double> mean_T, double beta,
                               bool paper_literal) {
    if (!mean_T.has_value()) {
        return 0.5;
    }
    const double t = std::clamp(*mean_T, -1.0, 1.0);
    const double expo = paper_literal ? beta * t : -beta * t;
    return 1.0 / (1.0 + std::exp(expo));
}

double propensity_transform(double potentiality) {
    return std::clamp(potentiality, 0.0, 1.0);
}

double resilience(double r_hat, double p_hat) {
    return r_hat * (1.0 - p_hat) + p_hat * (1.0 - r_hat);
}

ResilienceSnapshot analyze_window(const WindowInterval& interval,
                                  const MultiEdgeNetwork& net,
                                  const ResilienceConfig& config) {
    ResilienceSnapshot snap;
    snap.window = interval;
    snap.beta = config.beta;
    try {
        const Ensemble e = Ensemble::from_network(net);
        const SignedNetwork sn = infer_signed(net, e);
        const auto r = importance(net, config.importance);
        const auto profiles = social_impact(sn, r, config.column_wise_impact);
        snap.mean_T = weighted_balance(sn, profiles);

        const auto pot = potentiality(e, config.seed);
        snap.potentiality = pot.value;
        snap.p_hat = propensity_transform(pot.value);

        const double balance_r_hat = robustness_from_balance(
            snap.mean_T, config.beta, config.paper_literal);

        const auto core = kcore_decomposition(net, false);
        double core_sum = 0.0;
        for (double c : core) {
            core_sum += c;
        }
        const std::size_t n = net.n();
        snap.robustness_coreness =
            n > 1 ? std::clamp(core_sum / static_cast<double>(n) /
                                   static_cast<double>(n - 1),
                               0.0, 1.0)
                  : 0.0;
        snap.robustness_centralization =
            n >= 3 ? 1.0 - degree_centralization(net) : 0.0;
        snap.robustness_eigengap =
            n >= 2 ? std::clamp(eigengap(net) / static_cast<double>(n), 0.0, 1.0)
                   : 0.0;

        switch (config.robustness) {
            case RobustnessSource::Balance:
                snap.r_hat = balance_r_hat;
                break;
            case RobustnessSource::Coreness:
                snap.r_hat = snap.robustness_coreness;
                break;
            case RobustnessSource::Centralization:
                snap.r_hat = snap.robustness_centralization;
                break;
            case RobustnessSource::Eigengap:
                snap.r_hat = snap.robustness_eigengap;
                break;
        }
        snap.resilience = resilience(snap.r_hat, snap.p_hat);
    } catch (const std::exception& ex) {
        snap.error = ex.what();
    }
    return snap;
}

std::vector<ResilienceSnapshot> monitor(
    const std::vector<std::pair<WindowInterval, MultiEdgeNetwork>>& windows,
    const ResilienceConfig& config) {
    if (windows.empty()) {
        throw InputError("monitor needs at least one window");
    }
    std::vector<ResilienceSnapshot> series(windows.size());
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || windows.size() < 2) {
        for (std::size_t w = 0; w < windows.size(); ++w) {
            series[w] = analyze_window(windows[w].first, windows[w].second,
                                       config);
        }
    } else {
        // windows are independent; order is preserved by slot assignment
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const std::size_t count =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), windows.size());
        for (std::size_t t = 0; t < count; ++t) {
            workers.emplace_back([&] {
                for (std::size_t w = next.fetch_add(1); w < windows.size();
                     w = next.fetch_add(1)) {
                    series[w] = analyze_window(windows[w].first,
                                               windows[w].second, config);
                }
            });
        }
        for (auto& th : workers) {
            th.join();
        }
    }
    if (config.recalibrate_potentiality) {
        double lo = 1.0;
        double hi = 0.0;
        for (const auto& s : series) {
            if (s.error.empty()) {
                lo = std::min(lo, s.potentiality);
                hi = std::max(hi, s.potentiality);
            }
        }
        if (hi > lo) {
            for (auto& s : series) {
                if (s.error.empty()) {
                    s.p_hat = (s.potentiality - lo) / (hi - lo);
                    s.resilience = resilience(s.r_hat, s.p_hat);
                    s.recalibrated = true;
                }
            }
        }
    }
    return series;
}

}  // namespace resnet
