#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resnet/errors.hpp"

namespace resnet {

// Directed multi-edge network: integer interaction counts per ordered dyad.
// Immutable after construction; all analysis functions take it by const ref.
class MultiEdgeNetwork {
public:
    MultiEdgeNetwork() = default;
    MultiEdgeNetwork(std::vector<std::string> node_ids,
                     std::vector<std::int64_t> counts, bool directed = true,
                     bool allow_self_loops = false);

    std::size_t n() const { return node_ids_.size(); }
    bool directed() const { return directed_; }
    std::int64_t m() const { return m_; }
    const std::vector<std::string>& node_ids() const { return node_ids_; }

    std::int64_t count(std::size_t i, std::size_t j) const {
        return counts_[i * n() + j];
    }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    std::int64_t out_degree(std::size_t i) const { return out_deg_[i]; }
    std::int64_t in_degree(std::size_t i) const { return in_deg_[i]; }
    // in + out multiplicity
    std::int64_t total_degree(std::size_t i) const {
        return out_deg_[i] + in_deg_[i];
    }
    // symmetrized weight a_ij + a_ji
    std::int64_t sym_weight(std::size_t i, std::size_t j) const {
        return count(i, j) + count(j, i);
    }

    // Induced subnetwork on the given (kept) nodes, in their original order.
    MultiEdgeNetwork induced(const std::vector<std::size_t>& keep) const;

    // a_ij + a_ji folded into the upper representation of an undirected net.
    MultiEdgeNetwork symmetrized() const;

private:
    std::vector<std::string> node_ids_;
    std::vector<std::int64_t> counts_;  // row-major n*n
    std::vector<std::int64_t> out_deg_;
    std::vector<std::int64_t> in_deg_;
    std::int64_t m_ = 0;
    bool directed_ = true;
};

}  // namespace resnet
