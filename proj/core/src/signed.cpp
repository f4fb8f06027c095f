#include "resnet/signed.hpp"

#include <algorithm>
#include <cmath>

#include "resnet/errors.hpp"
#include "resnet/topology.hpp"

namespace resnet {

ImportanceMethod importance_method_from_string(const std::string& s) {
    if (s == "coreness") return ImportanceMethod::Coreness;
    if (s == "eigenvector") return ImportanceMethod::Eigenvector;
    if (s == "uniform") return ImportanceMethod::Uniform;
    throw InputError("unknown importance method '" + s +
                     "' (allowed: coreness, eigenvector, uniform)");
}

std::string to_string(ImportanceMethod m) {
    switch (m) {
        case ImportanceMethod::Coreness: return "coreness";
        case ImportanceMethod::Eigenvector: return "eigenvector";
        case ImportanceMethod::Uniform: return "uniform";
    }
    return "?";
}

MultiEdgeNetwork significant_links(const MultiEdgeNetwork& net,
                                   const Ensemble& e, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InputError("alpha must lie in (0, 1)");
    }
    const std::size_t n = net.n();
    std::vector<std::int64_t> counts(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t a = net.count(i, j);
            if (a <= 0 || e.xi(i, j) <= 0) {
                continue;  // zero counts carry no positive evidence
            }
            if (e.dyad_cdf(i, j, a) > 1.0 - alpha) {
                counts[i * n + j] = a;
            }
        }
    }
    return MultiEdgeNetwork(net.node_ids(), std::move(counts), net.directed());
}

SignedNetwork infer_signed(const MultiEdgeNetwork& net, const Ensemble& e) {
    const std::size_t n = net.n();
    if (e.n() != n) {
        throw InputError("ensemble node set does not match the network");
    }
    SignedNetwork sn;
    sn.node_ids = net.node_ids();
    sn.omega.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || e.xi(i, j) <= 0) {
                continue;
            }
            const auto marginal = e.dyad_marginal(i, j);
            const std::int64_t a = net.count(i, j);
            const double below = marginal.cdf(a - 1);  // Pr(A < a)
            const double above = marginal.sf(a);       // Pr(A > a)
            sn.at(i, j) = std::clamp(below - above, -1.0, 1.0);
        }
    }
    return sn;
}

std::vector<double> importance(const MultiEdgeNetwork& net,
                               ImportanceMethod method) {
    const std::size_t n = net.n();
    if (n == 0) {
        throw InputError("importance of an empty network");
    }
    std::vector<double> r(n, 1.0);
    switch (method) {
        case ImportanceMethod::Uniform:
            return r;
        case ImportanceMethod::Coreness: {
            const auto core = kcore_decomposition(net, false);
            const double top = *std::max_element(core.begin(), core.end());
            if (top <= 0) {
                return r;  // edgeless: everyone equally (un)important
            }
            for (std::size_t i = 0; i < n; ++i) {
                r[i] = core[i] / top;
            }
            return r;
        }
        case ImportanceMethod::Eigenvector: {
            // power iteration on the symmetrized weights plus the identity;
            // the shift damps the sign oscillation on bipartite graphs and a
            // small teleport mass keeps dangling nodes reachable
            constexpr double kTeleport = 1e-3;
            std::vector<double> v(n, 1.0 / static_cast<double>(n));
            std::vector<double> next(n, 0.0);
            for (int iter = 0; iter < 10000; ++iter) {
                double shift = 0.0;
                for (double t : v) {
                    shift += t;
                }
                shift *= kTeleport / static_cast<double>(n);
                for (std::size_t i = 0; i < n; ++i) {
                    double acc = shift + v[i];
                    for (std::size_t j = 0; j < n; ++j) {
                        if (j != i) {
                            acc += static_cast<double>(net.sym_weight(i, j)) * v[j];
                        }
                    }
                    next[i] = acc;
                }
                double norm = 0.0;
                for (double t : next) {
                    norm += t * t;
                }
                norm = std::sqrt(norm);
                double resid = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    next[i] /= norm;
                    resid = std::max(resid, std::abs(next[i] - v[i]));
                }
                v.swap(next);
                if (resid < 1e-10) {
                    const double top = *std::max_element(v.begin(), v.end());
                    for (std::size_t i = 0; i < n; ++i) {
                        r[i] = std::max(0.0, v[i] / top);
                    }
                    return r;
                }
            }
            throw ComputeError(
                "eigenvector centrality did not converge in 10000 iterations; "
                "consider the coreness method");
        }
    }
    return r;
}

std::vector<AgentProfile> social_impact(const SignedNetwork& sn,
                                        const std::vector<double>& r,
                                        bool column_wise) {
    const std::size_t n = sn.n();
    if (r.size() != n) {
        throw InputError("importance vector size does not match the network");
    }
    std::vector<AgentProfile> profiles(n);
    for (std::size_t i = 0; i < n; ++i) {
        AgentProfile& p = profiles[i];
        p.importance = r[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            const double w = column_wise ? sn.at(j, i) : sn.at(i, j);
            const double term = w * r[j];
            if (term >= 0) {
                p.impact_positive += term;
            } else {
                p.impact_negative += -term;
            }
        }
        p.impact = p.impact_positive - p.impact_negative;
        p.total = p.importance + p.impact;
    }
    return profiles;
}

}  // namespace resnet
