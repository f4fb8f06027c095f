#pragma once

#include <array>
#include <optional>
#include <vector>

#include "resnet/signed.hpp"

namespace resnet {

struct TriadBalance {
    std::array<std::size_t, 3> nodes;
    int sign = 0;      // S_ijk in {-1, +1}
    double weighted = 0.0;  // T_ijk, same sign as S
};

struct BalanceSummary {
    std::vector<TriadBalance> triads;
    double fraction_balanced = 0.0;  // share with S = +1
};

// Triads over closed triples whose three symmetrized relations are nonzero;
// S is the product of the three signs. Ties (omega_ij + omega_ji = 0)
// exclude the triad.
BalanceSummary classic_balance(const SignedNetwork& sn);

// T_ijk = S * geomean(|relations|) * geomean(scaled total impacts);
// <T> is the arithmetic mean over all closed triads, in [-1,1].
// Returns nullopt when the network has no closed triads.
std::optional<double> weighted_balance(const SignedNetwork& sn,
                                       const std::vector<AgentProfile>& profiles);

struct LineIndex {
    int flips = 0;
    bool exact = true;  // false when the greedy fallback was used
};

// Minimum number of relation sign flips after which every closed triad is
// balanced. Exact 2^|E| search up to 24 signed edges, greedy above.
LineIndex line_index(const SignedNetwork& sn);

}  // namespace resnet
