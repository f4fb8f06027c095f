#pragma once

#include <vector>

#include "resnet/network.hpp"

namespace resnet {

// k-core index per node. Multi-edges collapse to simple degree by default,
// to weighted degree when `weighted` (peeling thresholds walk the observed
// weighted-degree values).
std::vector<double> kcore_decomposition(const MultiEdgeNetwork& net,
                                        bool weighted = false);

// Freeman degree centralization on total (in+out) multi-edge degree,
// normalized by the star-graph bound scaled to the network's edge
// multiplicity. Clamped to [0,1]. Requires n >= 3.
double degree_centralization(const MultiEdgeNetwork& net);

// Algebraic connectivity: second-smallest eigenvalue of the weighted graph
// Laplacian of the symmetrized network, via deflated power iteration
// (residual 1e-8). Exactly 0 for disconnected networks.
double eigengap(const MultiEdgeNetwork& net);

// True when the symmetrized network is connected (isolated nodes count as
// components).
bool is_connected(const MultiEdgeNetwork& net);

}  // namespace resnet
