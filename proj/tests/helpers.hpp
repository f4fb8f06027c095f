#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "resnet/network.hpp"
#include "resnet/rng.hpp"

namespace testutil {

inline std::vector<std::string> names(std::size_t n) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = "n" + std::to_string(i);
    }
    return ids;
}

// directed multi-edge network from (i, j, count) triples
inline resnet::MultiEdgeNetwork net_from_edges(
    std::size_t n,
    const std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>>& edges) {
    std::vector<std::int64_t> counts(n * n, 0);
    for (const auto& [i, j, c] : edges) {
        counts[i * n + j] += c;
    }
    return resnet::MultiEdgeNetwork(names(n), std::move(counts), true);
}

// undirected simple graph stored as one directed count per pair (i < j)
inline resnet::MultiEdgeNetwork undirected_simple(
    std::size_t n,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::int64_t> counts(n * n, 0);
    for (const auto& [i, j] : edges) {
        counts[std::min(i, j) * n + std::max(i, j)] += 1;
    }
    return resnet::MultiEdgeNetwork(names(n), std::move(counts), true);
}

inline resnet::MultiEdgeNetwork random_net(std::size_t n, std::int64_t m,
                                           std::uint64_t seed) {
    resnet::Rng rng(seed);
    std::vector<std::int64_t> counts(n * n, 0);
    for (std::int64_t e = 0; e < m; ++e) {
        const auto i = rng.below(n);
        auto j = rng.below(n);
        if (i == j) {
            j = (j + 1) % n;
        }
        counts[i * n + j] += 1;
    }
    return resnet::MultiEdgeNetwork(names(n), std::move(counts), true);
}

}  // namespace testutil
