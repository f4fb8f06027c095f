#pragma once

#include <cstdint>
#include <vector>

#include "resnet/hypergeom.hpp"
#include "resnet/network.hpp"
#include "resnet/rng.hpp"

namespace resnet {

// Degree-constrained multi-edge ensemble: combinatorial matrix
// Xi_ij = out_deg(i) * in_deg(j), dyad propensities Omega, edge budget m.
class Ensemble {
public:
    Ensemble() = default;
    Ensemble(std::vector<std::string> node_ids, std::vector<double> xi,
             std::vector<double> omega, std::int64_t m);

    // Xi from the observed degree sequence, Omega uniform (all ones on the
    // supported dyads). Throws InputError when the network has no edges.
    static Ensemble from_network(const MultiEdgeNetwork& net,
                                 bool allow_self_loops = false);

    std::size_t n() const { return node_ids_.size(); }
    std::int64_t m() const { return m_; }
    const std::vector<std::string>& node_ids() const { return node_ids_; }
    double xi(std::size_t i, std::size_t j) const { return xi_[i * n() + j]; }
    double omega(std::size_t i, std::size_t j) const {
        return omega_[i * n() + j];
    }
    const std::vector<double>& xi() const { return xi_; }
    const std::vector<double>& omega() const { return omega_; }
    bool omega_uniform() const;

    void set_omega(std::vector<double> omega);

    // Marginal of one dyad. For non-uniform Omega the odds are taken
    // relative to the Xi-weighted mean propensity of the other supported
    // dyads. Throws InputError on unsupported dyads (Xi_ij = 0).
    DyadMarginal dyad_marginal(std::size_t i, std::size_t j) const;
    double dyad_cdf(std::size_t i, std::size_t j, std::int64_t x) const;

    // Dyad probabilities p_ij proportional to Xi_ij * Omega_ij.
    std::vector<double> dyad_probabilities() const;

    // m edges drawn under the multinomial approximation; deterministic under
    // a fixed seed.
    MultiEdgeNetwork sample(std::uint64_t seed) const;

private:
    void refresh_totals();

    std::vector<std::string> node_ids_;
    std::vector<double> xi_;
    std::vector<double> omega_;
    std::int64_t m_ = 0;
    // cached sums over supported dyads so per-dyad marginals stay O(support)
    double total_xi_ = 0.0;
    double total_xi_omega_ = 0.0;
    bool uniform_ = true;
};

// Block-level propensities over a node-to-block assignment.
struct BlockPropensities {
    std::vector<int> assignment;        // block index per node
    std::size_t num_blocks = 0;
    std::vector<double> omega;          // K x K row-major, mean 1

    double at(int k, int l) const { return omega[k * num_blocks + l]; }
    // Expand to per-dyad Omega for the given network size.
    std::vector<double> expand(std::size_t n) const;
};

// Closed-form MLE under the multinomial approximation:
// Omega_kl proportional to (sum a_ij) / (sum Xi_ij) over the block pair,
// zero numerators smoothed with eps = 1e-9, normalized to mean 1.
BlockPropensities fit_blocks(const MultiEdgeNetwork& net,
                             const std::vector<int>& assignment);

// Multiplex regression layers: log Omega_ij = sum_l beta_l * log s^l_ij.
struct LayerStack {
    std::size_t n = 0;
    std::vector<std::vector<double>> layers;  // each n*n, entries > 0
    std::vector<double> beta;                 // fitted coefficients

    std::vector<double> omega() const;        // exp(sum beta_l log s_l)
};

struct RegressionReport {
    std::vector<double> beta;
    std::vector<double> lr_statistic;  // 2 * (LL_full - LL_without_l)
    std::vector<double> p_value;       // chi-square, 1 dof
    double loglik = 0.0;
    bool converged = false;
    bool degenerate = false;  // at least one layer carries no signal
    int iterations = 0;
};

// Quasi-Newton ascent of the multinomial log-likelihood; stops when the
// gradient infinity-norm drops below 1e-6 or after 500 iterations. On
// non-convergence the best iterate is returned with converged = false.
RegressionReport fit_regression(const MultiEdgeNetwork& net,
                                LayerStack& layers);

struct Potentiality {
    double value = 0.0;        // H / H_max in [0,1]
    double entropy = 0.0;      // nats
    double entropy_max = 0.0;  // uniform baseline on the same support
    double std_error = 0.0;    // 0 for the exact path
    bool exact = true;
    bool degenerate = false;   // single supported dyad
};

// Normalized Shannon entropy of the multinomial over supported dyads.
// Exact for m <= 2000 via the binomial marginal decomposition; Monte-Carlo
// (1e5 draws, reported standard error) above.
Potentiality potentiality(const Ensemble& e, std::uint64_t seed = 1);

// Forced Monte-Carlo estimate regardless of m (the automatic path uses it
// only above the exact limit).
Potentiality potentiality_monte_carlo(const Ensemble& e, int draws = 100000,
                                      std::uint64_t seed = 1);

}  // namespace resnet
