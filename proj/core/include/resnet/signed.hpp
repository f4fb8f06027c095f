#pragma once

#include <string>
#include <vector>

#include "resnet/ensemble.hpp"
#include "resnet/network.hpp"

namespace resnet {

// Weighted signed relations omega_ij in [-1,1]; 0 means no relation.
struct SignedNetwork {
    std::vector<std::string> node_ids;
    std::vector<double> omega;  // row-major n*n, zero diagonal

    std::size_t n() const { return node_ids.size(); }
    double at(std::size_t i, std::size_t j) const {
        return omega[i * n() + j];
    }
    double& at(std::size_t i, std::size_t j) { return omega[i * n() + j]; }
    // undirected relation used by balance measures
    double symmetric(std::size_t i, std::size_t j) const {
        return 0.5 * (at(i, j) + at(j, i));
    }
};

struct AgentProfile {
    double importance = 0.0;       // r_i >= 0
    double impact = 0.0;           // I_i = I_pos - I_neg
    double impact_positive = 0.0;  // I_i^p
    double impact_negative = 0.0;  // I_i^n
    double total = 0.0;            // q_i = r_i + I_i
};

enum class ImportanceMethod { Coreness, Eigenvector, Uniform };

ImportanceMethod importance_method_from_string(const std::string& s);
std::string to_string(ImportanceMethod m);

// Keeps a dyad iff Pr(A_ij <= a_ij) > 1 - alpha; everything else zeroed.
// Dyads with a_ij = 0 are never significant.
MultiEdgeNetwork significant_links(const MultiEdgeNetwork& net,
                                   const Ensemble& e, double alpha);

// omega_ij = Pr(A_ij < a_ij) - Pr(A_ij > a_ij); unsupported dyads -> 0.
SignedNetwork infer_signed(const MultiEdgeNetwork& net, const Ensemble& e);

// Chosen centrality normalized so max = 1.
std::vector<double> importance(const MultiEdgeNetwork& net,
                               ImportanceMethod method);

// I_i = sum_j omega_ij r_j over i's relations (row-wise). `column_wise`
// switches to support received, sum_j omega_ji r_j.
std::vector<AgentProfile> social_impact(const SignedNetwork& sn,
                                        const std::vector<double>& r,
                                        bool column_wise = false);

}  // namespace resnet
