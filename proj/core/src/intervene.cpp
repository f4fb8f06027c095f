#include "resnet/intervene.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "resnet/ensemble.hpp"
#include "resnet/errors.hpp"
#include "resnet/rng.hpp"
#include "resnet/topology.hpp"

namespace resnet {

Strategy strategy_from_string(const std::string& s) {
    if (s == "none") return Strategy::None;
    if (s == "random") return Strategy::Random;
    if (s == "periphery") return Strategy::Periphery;
    if (s == "near-core") return Strategy::NearCore;
    if (s == "targeted") return Strategy::Targeted;
    throw InputError("unknown strategy '" + s +
                     "' (allowed: none, random, periphery, near-core, targeted)");
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::None: return "none";
        case Strategy::Random: return "random";
        case Strategy::Periphery: return "periphery";
        case Strategy::NearCore: return "near-core";
        case Strategy::Targeted: return "targeted";
    }
    return "?";
}

MultiEdgeNetwork shock_remove(const MultiEdgeNetwork& net,
                              const std::vector<std::string>& nodes) {
    const std::size_t n = net.n();
    std::vector<bool> drop(n, false);
    for (const auto& id : nodes) {
        const auto it = std::find(net.node_ids().begin(), net.node_ids().end(), id);
        if (it == net.node_ids().end()) {
            throw InputError("cannot remove unknown node '" + id + "'");
        }
        drop[static_cast<std::size_t>(it - net.node_ids().begin())] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (!drop[i]) {
            keep.push_back(i);
        }
    }
    if (keep.empty()) {
        throw InputError("removal would leave an empty network");
    }
    return net.induced(keep);
}

namespace {

// q_i on the current network: ensemble -> signed relations -> importance ->
// social impact. Edgeless networks yield q = r (no relations).
std::vector<double> total_impacts(const MultiEdgeNetwork& net,
                                  const ResilienceConfig& config,
                                  const std::map<std::string, double>& boosts) {
    std::vector<double> r = importance(net, config.importance);
    for (std::size_t i = 0; i < net.n(); ++i) {
        const auto it = boosts.find(net.node_ids()[i]);
        if (it != boosts.end()) {
            r[i] += it->second;
        }
    }
    if (net.m() < 1) {
        return r;
    }
    const Ensemble e = Ensemble::from_network(net);
    const SignedNetwork sn = infer_signed(net, e);
    const auto profiles = social_impact(sn, r, config.column_wise_impact);
    std::vector<double> q(net.n());
    for (std::size_t i = 0; i < net.n(); ++i) {
        q[i] = profiles[i].total;
    }
    return q;
}

double mean_coreness(const MultiEdgeNetwork& net) {
    const auto core = kcore_decomposition(net, false);
    return std::accumulate(core.begin(), core.end(), 0.0) /
           static_cast<double>(core.size());
}

CascadeStep record_step(const MultiEdgeNetwork& net,
                        std::vector<std::string> removed,
                        std::vector<std::string> boosted,
                        const ResilienceConfig& config) {
    CascadeStep step;
    step.removed = std::move(removed);
    step.boosted = std::move(boosted);
    step.mean_coreness = net.n() > 0 ? mean_coreness(net) : 0.0;
    step.snapshot = analyze_window(WindowInterval{}, net, config);
    return step;
}

// nodes an intervention step acts on, deterministic under the plan RNG
std::vector<std::string> select_nodes(const MultiEdgeNetwork& net,
                                      const InterventionPlan& plan, Rng& rng) {
    const std::size_t n = net.n();
    const std::size_t budget =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(0, plan.budget)), n);
    std::vector<std::string> out;
    switch (plan.strategy) {
        case Strategy::None:
            break;
        case Strategy::Targeted:
            for (const auto& id : plan.targets) {
                if (std::find(net.node_ids().begin(), net.node_ids().end(), id) !=
                    net.node_ids().end()) {
                    out.push_back(id);
                }
            }
            break;
        case Strategy::Random: {
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            for (std::size_t k = 0; k < budget; ++k) {
                const std::size_t pick =
                    k + static_cast<std::size_t>(rng.below(idx.size() - k));
                std::swap(idx[k], idx[pick]);
                out.push_back(net.node_ids()[idx[k]]);
            }
            break;
        }
        case Strategy::Periphery:
        case Strategy::NearCore: {
            const auto core = kcore_decomposition(net, false);
            const double top = *std::max_element(core.begin(), core.end());
            std::vector<std::size_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            if (plan.strategy == Strategy::Periphery) {
                // lowest coreness first
                std::stable_sort(idx.begin(), idx.end(),
                                 [&](std::size_t a, std::size_t b) {
                                     return core[a] < core[b];
                                 });
            } else {
                // highest coreness below the core itself
                idx.erase(std::remove_if(idx.begin(), idx.end(),
                                         [&](std::size_t i) {
                                             return core[i] >= top;
                                         }),
                          idx.end());
                std::stable_sort(idx.begin(), idx.end(),
                                 [&](std::size_t a, std::size_t b) {
                                     return core[a] > core[b];
                                 });
            }
            for (std::size_t k = 0; k < std::min(budget, idx.size()); ++k) {
                out.push_back(net.node_ids()[idx[k]]);
            }
            break;
        }
    }
    return out;
}

}  // namespace

CascadeResult leave_cascade(const MultiEdgeNetwork& net, double theta,
                            const ResilienceConfig& config) {
    CascadeResult result;
    MultiEdgeNetwork current = net;
    const std::size_t n0 = net.n();
    const std::map<std::string, double> no_boosts;

    for (std::size_t round = 0; round < n0; ++round) {
        if (current.n() == 0) {
            break;
        }
        const auto q = total_impacts(current, config, no_boosts);
        std::vector<std::size_t> keep;
        std::vector<std::string> leavers;
        for (std::size_t i = 0; i < current.n(); ++i) {
            if (q[i] < theta) {
                leavers.push_back(current.node_ids()[i]);
            } else {
                keep.push_back(i);
            }
        }
        if (leavers.empty()) {
            break;  // fixed point
        }
        current = keep.empty() ? MultiEdgeNetwork(std::vector<std::string>{}, std::vector<std::int64_t>{}, current.directed())
                               : current.induced(keep);
        result.steps.push_back(record_step(current, std::move(leavers), {}, config));
    }
    result.terminated_at = static_cast<int>(result.steps.size());
    result.survivors = current.node_ids();
    return result;
}

std::vector<CascadeResult> intervene_and_compare(
    const MultiEdgeNetwork& net, const std::vector<InterventionPlan>& plans,
    const ResilienceConfig& config) {
    if (plans.empty()) {
        throw InputError("at least one intervention plan required");
    }
    std::vector<CascadeResult> results;
    results.reserve(plans.size());
    for (std::size_t p = 0; p < plans.size(); ++p) {
        const auto& plan = plans[p];
        Rng rng(config.seed + p * 0x9e3779b97f4a7c15ULL);
        CascadeResult result;
        result.plan_id = plan.id;
        MultiEdgeNetwork current = net;
        std::map<std::string, double> boosts;

        for (int step = 0; step < std::max(1, plan.steps); ++step) {
            if (current.n() == 0) {
                break;
            }
            // intervention action
            std::vector<std::string> selected = select_nodes(current, plan, rng);
            std::vector<std::string> boosted;
            std::vector<std::string> removed;
            if (plan.boost > 0) {
                for (const auto& id : selected) {
                    boosts[id] += plan.boost;
                }
                boosted = selected;
            } else if (!selected.empty()) {
                if (selected.size() >= current.n()) {
                    current = MultiEdgeNetwork(std::vector<std::string>{}, std::vector<std::int64_t>{}, current.directed());
                } else {
                    current = shock_remove(current, selected);
                }
                removed = selected;
            }

            // one round of the leave rule
            if (current.n() > 0) {
                const auto q = total_impacts(current, config, boosts);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < current.n(); ++i) {
                    if (q[i] < plan.leave_threshold) {
                        removed.push_back(current.node_ids()[i]);
                    } else {
                        keep.push_back(i);
                    }
                }
                if (keep.size() < current.n()) {
                    current = keep.empty()
                                  ? MultiEdgeNetwork(std::vector<std::string>{}, std::vector<std::int64_t>{}, current.directed())
                                  : current.induced(keep);
                }
            }
            result.steps.push_back(record_step(current, std::move(removed),
                                               std::move(boosted), config));
        }
        result.terminated_at = static_cast<int>(result.steps.size());
        result.survivors = current.node_ids();
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace resnet
