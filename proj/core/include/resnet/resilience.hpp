#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resnet/event.hpp"
#include "resnet/network.hpp"
#include "resnet/signed.hpp"

namespace resnet {

enum class RobustnessSource { Balance, Coreness, Centralization, Eigengap };

RobustnessSource robustness_source_from_string(const std::string& s);
std::string to_string(RobustnessSource s);

struct ResilienceConfig {
    double alpha = 0.05;
    double beta = 0.2;
    RobustnessSource robustness = RobustnessSource::Balance;
    ImportanceMethod importance = ImportanceMethod::Coreness;
    bool paper_literal = false;   // reproduce the printed logistic sign
    bool column_wise_impact = false;
    bool recalibrate_potentiality = false;  // min-max over the whole series
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct ResilienceSnapshot {
    WindowInterval window;
    std::optional<double> mean_T;
    double r_hat = 0.5;
    double potentiality = 0.0;      // P before transformation
    double p_hat = 0.0;
    double resilience = 0.5;
    // alternative robustness readings, always computed alongside
    double robustness_coreness = 0.0;       // mean coreness / (n - 1)
    double robustness_centralization = 0.0; // 1 - centralization
    double robustness_eigengap = 0.0;       // lambda2 / n, clamped
    double beta = 0.2;
    bool recalibrated = false;
    std::string error;  // nonempty when this window failed
};

// R_hat = 1 / (1 + exp(-beta * mean_T)), increasing in mean_T. Absent
// mean_T (no triads) maps to the neutral 0.5. `paper_literal` flips the
// exponent sign to the printed (decreasing) form.
double robustness_from_balance(std::optional<double> mean_T, double beta = 0.2,
                               bool paper_literal = false);

// Identity on the already-normalized potentiality.
double propensity_transform(double potentiality);

// R = R_hat * (1 - P_hat) + P_hat * (1 - R_hat)
double resilience(double r_hat, double p_hat);

// Per-window pipeline: ensemble -> signed relations -> profiles -> <T> ->
// R_hat; potentiality -> P_hat; combined resilience plus the topological
// robustness variants. Window failures are recorded in the snapshot and the
// series continues.
std::vector<ResilienceSnapshot> monitor(
    const std::vector<std::pair<WindowInterval, MultiEdgeNetwork>>& windows,
    const ResilienceConfig& config);

// Single-window snapshot; building block of monitor().
ResilienceSnapshot analyze_window(const WindowInterval& interval,
                                  const MultiEdgeNetwork& net,
                                  const ResilienceConfig& config);

}  // namespace resnet
