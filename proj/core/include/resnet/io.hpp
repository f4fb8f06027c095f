#pragma once

#include <string>
#include <vector>

#include "resnet/balance.hpp"
#include "resnet/ensemble.hpp"
#include "resnet/event.hpp"
#include "resnet/intervene.hpp"
#include "resnet/network.hpp"
#include "resnet/resilience.hpp"
#include "resnet/signed.hpp"

namespace resnet {

// All writers produce byte-stable output for identical inputs.

std::string network_to_json(const MultiEdgeNetwork& net,
                            const WindowInterval* window = nullptr);
MultiEdgeNetwork network_from_json(const std::string& text,
                                   WindowInterval* window = nullptr);

std::string manifest_to_json(const std::vector<std::string>& window_files);
std::vector<std::string> manifest_from_json(const std::string& text);

std::string ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const std::string& text);

std::string regression_report_to_json(const RegressionReport& report);

std::string signed_to_csv(const SignedNetwork& sn);
std::string profiles_to_csv(const std::vector<std::string>& node_ids,
                            const std::vector<AgentProfile>& profiles);

std::string snapshots_to_csv(const std::vector<ResilienceSnapshot>& series);
std::string snapshots_to_json(const std::vector<ResilienceSnapshot>& series);

std::vector<InterventionPlan> plans_from_json(const std::string& text);
std::string plans_to_json(const std::vector<InterventionPlan>& plans);
std::string cascade_to_json(const CascadeResult& result);
std::string cascade_summary_csv(const std::vector<CascadeResult>& results);

// GraphML with per-node coreness and per-edge count attributes.
std::string network_to_graphml(const MultiEdgeNetwork& net);
std::string network_to_adjacency_csv(const MultiEdgeNetwork& net);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Stable short float formatting used in every CSV (up to 12 significant
// digits, no trailing zeros).
std::string format_double(double v);

}  // namespace resnet
