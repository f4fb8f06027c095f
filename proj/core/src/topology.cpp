#include "resnet/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "resnet/rng.hpp"

namespace resnet {

std::vector<double> kcore_decomposition(const MultiEdgeNetwork& net,
                                        bool weighted) {
    const std::size_t n = net.n();
    if (n == 0) {
        throw InputError("k-core of an empty network");
    }
    // collapse multi-edges: simple degree (distinct neighbors) or weighted
    // degree (total symmetrized multiplicity)
    std::vector<double> degree(n, 0.0);
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::int64_t w = net.sym_weight(i, j);
            if (w == 0) {
                continue;
            }
            const double contrib = weighted ? static_cast<double>(w) : 1.0;
            adj[i].emplace_back(j, contrib);
            adj[j].emplace_back(i, contrib);
            degree[i] += contrib;
            degree[j] += contrib;
        }
    }

    // generalized peeling: repeatedly remove the minimum-degree node, the
    // peel level never decreases
    std::vector<double> core(n, 0.0);
    std::vector<bool> removed(n, false);
    double level = 0.0;
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t v = n;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (!removed[i] && degree[i] < best) {
                best = degree[i];
                v = i;
            }
        }
        level = std::max(level, best);
        core[v] = level;
        removed[v] = true;
        for (const auto& [u, w] : adj[v]) {
            if (!removed[u]) {
                degree[u] -= w;
            }
        }
    }
    return core;
}

double degree_centralization(const MultiEdgeNetwork& net) {
    const std::size_t n = net.n();
    if (n < 3) {
        throw InputError("degree centralization needs at least 3 nodes");
    }
    if (net.m() == 0) {
        return 0.0;
    }
    double c_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        c_max = std::max(c_max, static_cast<double>(net.total_degree(i)));
    }
    double num = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += c_max - static_cast<double>(net.total_degree(i));
    }
    // star-graph bound (n-1)(n-2) scaled by the edge multiplicity m/(n-1)
    const double denom =
        static_cast<double>(n - 2) * static_cast<double>(net.m());
    return std::clamp(num / denom, 0.0, 1.0);
}

bool is_connected(const MultiEdgeNetwork& net) {
    const std::size_t n = net.n();
    if (n == 0) {
        return false;
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u = 0; u < n; ++u) {
            if (!seen[u] && net.sym_weight(v, u) > 0) {
                seen[u] = true;
                ++visited;
                stack.push_back(u);
            }
        }
    }
    return visited == n;
}

double eigengap(const MultiEdgeNetwork& net) {
    const std::size_t n = net.n();
    if (n < 2) {
        throw InputError("eigengap needs at least 2 nodes");
    }
    if (!is_connected(net)) {
        return 0.0;
    }
    // Laplacian L = D - W on the symmetrized weights
    std::vector<double> lap(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            const double w = static_cast<double>(net.sym_weight(i, j));
            lap[i * n + j] = -w;
            deg += w;
        }
        lap[i * n + i] = deg;
    }
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_diag = std::max(max_diag, lap[i * n + i]);
    }
    // power iteration on shift = c*I - L with the constant vector deflated;
    // the dominant eigenvalue there is c - lambda2
    const double c = 2.0 * max_diag + 1.0;

    Rng rng(0x9e3779b97f4a7c15ULL);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = rng.uniform01() - 0.5;
    }
    auto project = [&](std::vector<double>& x) {
        double mean = 0.0;
        for (double t : x) {
            mean += t;
        }
        mean /= static_cast<double>(n);
        for (double& t : x) {
            t -= mean;
        }
    };
    auto normalize = [&](std::vector<double>& x) {
        double norm = 0.0;
        for (double t : x) {
            norm += t * t;
        }
        norm = std::sqrt(norm);
        if (norm > 0) {
            for (double& t : x) {
                t /= norm;
            }
        }
        return norm;
    };
    project(v);
    normalize(v);

    std::vector<double> bv(n);
    double mu = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double acc = c * v[i];
            const double* row = &lap[i * n];
            for (std::size_t j = 0; j < n; ++j) {
                acc -= row[j] * v[j];
            }
            bv[i] = acc;
        }
        project(bv);
        mu = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mu += v[i] * bv[i];
        }
        double resid = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            resid = std::max(resid, std::abs(bv[i] - mu * v[i]));
        }
        normalize(bv);
        v.swap(bv);
        if (resid < 1e-8) {
            break;
        }
    }
    return std::max(0.0, c - mu);
}

}  // namespace resnet
