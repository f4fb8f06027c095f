#include "resnet/network.hpp"

#include <numeric>

namespace resnet {

MultiEdgeNetwork::MultiEdgeNetwork(std::vector<std::string> node_ids,
                                   std::vector<std::int64_t> counts,
                                   bool directed, bool allow_self_loops)
    : node_ids_(std::move(node_ids)),
      counts_(std::move(counts)),
      directed_(directed) {
    const std::size_t n = node_ids_.size();
    if (counts_.size() != n * n) {
        throw InputError("count matrix size does not match node count");
    }
    out_deg_.assign(n, 0);
    in_deg_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t c = counts_[i * n + j];
            if (c < 0) {
                throw InputError("negative edge count");
            }
            if (i == j && c != 0 && !allow_self_loops) {
                throw InputError("self-loop counts are not enabled");
            }
            out_deg_[i] += c;
            in_deg_[j] += c;
            m_ += c;
        }
    }
}

MultiEdgeNetwork MultiEdgeNetwork::induced(
    const std::vector<std::size_t>& keep) const {
    std::vector<std::string> ids;
    ids.reserve(keep.size());
    for (std::size_t k : keep) {
        ids.push_back(node_ids_[k]);
    }
    std::vector<std::int64_t> counts(keep.size() * keep.size(), 0);
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < keep.size(); ++b) {
            counts[a * keep.size() + b] = count(keep[a], keep[b]);
        }
    }
    return MultiEdgeNetwork(std::move(ids), std::move(counts), directed_);
}

MultiEdgeNetwork MultiEdgeNetwork::symmetrized() const {
    const std::size_t nn = n();
    std::vector<std::int64_t> counts(nn * nn, 0);
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = i + 1; j < nn; ++j) {
            const std::int64_t w = sym_weight(i, j);
            counts[i * nn + j] = w;
            counts[j * nn + i] = w;
        }
    }
    return MultiEdgeNetwork(node_ids_, std::move(counts), false);
}

}  // namespace resnet
