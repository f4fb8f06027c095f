#include "resnet/balance.hpp"

#include <algorithm>
#include <cmath>

#include "resnet/errors.hpp"

namespace resnet {

namespace {

struct TriadEdges {
    std::size_t e01, e02, e12;  // indices into the edge list
};

struct UndirectedSigned {
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
    std::vector<double> weight;   // symmetrized, nonzero
    std::vector<std::array<std::size_t, 3>> triads;  // node triples
    std::vector<TriadEdges> triad_edges;
};

UndirectedSigned collapse(const SignedNetwork& sn) {
    UndirectedSigned g;
    const std::size_t n = sn.n();
    std::vector<std::size_t> edge_id(n * n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = sn.symmetric(i, j);
            if (w == 0.0) {
                continue;  // ties and absent relations drop out
            }
            edge_id[i * n + j] = g.edges.size();
            g.edges.emplace_back(i, j);
            g.weight.push_back(w);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge_id[i * n + j] == SIZE_MAX) {
                continue;
            }
            for (std::size_t k = j + 1; k < n; ++k) {
                if (edge_id[i * n + k] == SIZE_MAX ||
                    edge_id[j * n + k] == SIZE_MAX) {
                    continue;
                }
                g.triads.push_back({i, j, k});
                g.triad_edges.push_back({edge_id[i * n + j],
                                         edge_id[i * n + k],
                                         edge_id[j * n + k]});
            }
        }
    }
    return g;
}

int sign_of(double w) { return w > 0 ? 1 : -1; }

}  // namespace

BalanceSummary classic_balance(const SignedNetwork& sn) {
    const auto g = collapse(sn);
    BalanceSummary out;
    std::size_t balanced = 0;
    for (std::size_t t = 0; t < g.triads.size(); ++t) {
        const auto& e = g.triad_edges[t];
        const int s = sign_of(g.weight[e.e01]) * sign_of(g.weight[e.e02]) *
                      sign_of(g.weight[e.e12]);
        out.triads.push_back({g.triads[t], s, 0.0});
        if (s > 0) {
            ++balanced;
        }
    }
    out.fraction_balanced =
        out.triads.empty()
            ? 0.0
            : static_cast<double>(balanced) / static_cast<double>(out.triads.size());
    return out;
}

std::optional<double> weighted_balance(
    const SignedNetwork& sn, const std::vector<AgentProfile>& profiles) {
    const std::size_t n = sn.n();
    if (profiles.size() != n) {
        throw InputError("profiles do not match the signed network");
    }
    const auto g = collapse(sn);
    if (g.triads.empty()) {
        return std::nullopt;
    }

    // total impact min-max scaled to (0, 1], floored so no agent nullifies
    // a triad by scale alone; a flat profile scales to 1 everywhere
    double q_min = profiles[0].total;
    double q_max = profiles[0].total;
    for (const auto& p : profiles) {
        q_min = std::min(q_min, p.total);
        q_max = std::max(q_max, p.total);
    }
    const double range = q_max - q_min;
    std::vector<double> q_scaled(n, 1.0);
    if (range > 0) {
        for (std::size_t i = 0; i < n; ++i) {
            q_scaled[i] =
                std::max(0.01, (profiles[i].total - q_min) / range);
        }
    }

    double sum = 0.0;
    for (std::size_t t = 0; t < g.triads.size(); ++t) {
        const auto& e = g.triad_edges[t];
        const auto& nodes = g.triads[t];
        const double w0 = g.weight[e.e01];
        const double w1 = g.weight[e.e02];
        const double w2 = g.weight[e.e12];
        const int s = sign_of(w0) * sign_of(w1) * sign_of(w2);
        const double mag =
            std::cbrt(std::abs(w0) * std::abs(w1) * std::abs(w2));
        const double imp = std::cbrt(q_scaled[nodes[0]] * q_scaled[nodes[1]] *
                                     q_scaled[nodes[2]]);
        sum += static_cast<double>(s) * mag * imp;
    }
    return sum / static_cast<double>(g.triads.size());
}

namespace {

bool all_balanced(const UndirectedSigned& g, const std::vector<int>& signs) {
    for (const auto& e : g.triad_edges) {
        if (signs[e.e01] * signs[e.e02] * signs[e.e12] < 0) {
            return false;
        }
    }
    return true;
}

std::size_t unbalanced_count(const UndirectedSigned& g,
                             const std::vector<int>& signs) {
    std::size_t c = 0;
    for (const auto& e : g.triad_edges) {
        if (signs[e.e01] * signs[e.e02] * signs[e.e12] < 0) {
            ++c;
        }
    }
    return c;
}

}  // namespace

LineIndex line_index(const SignedNetwork& sn) {
    const auto g = collapse(sn);
    const std::size_t E = g.edges.size();
    std::vector<int> signs(E);
    for (std::size_t e = 0; e < E; ++e) {
        signs[e] = sign_of(g.weight[e]);
    }
    if (all_balanced(g, signs)) {
        return {0, true};
    }

    if (E <= 24) {
        // exhaustive search by increasing flip count
        for (int k = 1; k <= static_cast<int>(E); ++k) {
            std::vector<bool> pick(E, false);
            std::fill(pick.end() - k, pick.end(), true);
            do {
                std::vector<int> flipped = signs;
                for (std::size_t e = 0; e < E; ++e) {
                    if (pick[e]) {
                        flipped[e] = -flipped[e];
                    }
                }
                if (all_balanced(g, flipped)) {
                    return {k, true};
                }
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        return {static_cast<int>(E), true};  // unreachable for triad systems
    }

    // greedy: flip the edge that removes the most unbalanced triads
    std::vector<int> current = signs;
    int flips = 0;
    std::size_t bad = unbalanced_count(g, current);
    while (bad > 0) {
        std::size_t best_edge = SIZE_MAX;
        std::size_t best_bad = bad;
        for (std::size_t e = 0; e < E; ++e) {
            current[e] = -current[e];
            const std::size_t b = unbalanced_count(g, current);
            current[e] = -current[e];
            if (b < best_bad) {
                best_bad = b;
                best_edge = e;
            }
        }
        if (best_edge == SIZE_MAX) {
            break;  // local minimum
        }
        current[best_edge] = -current[best_edge];
        bad = best_bad;
        ++flips;
    }
    return {flips, false};
}

}  // namespace resnet
