#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resnet/network.hpp"
#include "resnet/resilience.hpp"
#include "resnet/signed.hpp"

namespace resnet {

enum class Strategy { None, Random, Periphery, NearCore, Targeted };

Strategy strategy_from_string(const std::string& s);
std::string to_string(Strategy s);

struct InterventionPlan {
    std::string id;
    Strategy strategy = Strategy::None;
    int budget = 0;       // nodes selected per step
    double boost = 0.0;   // importance boost per selected node; 0 = remove
    int steps = 1;
    double leave_threshold = 0.0;      // theta
    std::vector<std::string> targets;  // explicit list for Strategy::Targeted
};

struct CascadeStep {
    std::vector<std::string> removed;     // left in this step
    std::vector<std::string> boosted;
    double mean_coreness = 0.0;           // over survivors
    ResilienceSnapshot snapshot;
};

struct CascadeResult {
    std::string plan_id;
    std::vector<CascadeStep> steps;
    int terminated_at = 0;
    std::vector<std::string> survivors;
};

// Induced subnetwork on the survivors. Throws InputError when everything is
// removed.
MultiEdgeNetwork shock_remove(const MultiEdgeNetwork& net,
                              const std::vector<std::string>& nodes);

// Synchronous leave dynamics: every agent with total impact q < theta leaves,
// profiles are recomputed on the survivors, until a fixed point (<= n steps).
CascadeResult leave_cascade(const MultiEdgeNetwork& net, double theta,
                            const ResilienceConfig& config);

// Runs every plan against the same network: each step applies the strategy
// (boost importance by `boost`, or remove when boost = 0), then one round of
// the leave rule. Random selection is seeded and reproducible.
std::vector<CascadeResult> intervene_and_compare(
    const MultiEdgeNetwork& net, const std::vector<InterventionPlan>& plans,
    const ResilienceConfig& config);

}  // namespace resnet
