#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "resnet/event.hpp"
#include "resnet/network.hpp"

namespace resnet {

// Non-fatal parse problem; parsing continues past it.
struct ParseIssue {
    std::size_t line = 0;
    std::string message;
};

struct ParseResult {
    EventLog log;
    std::vector<ParseIssue> issues;
};

// Parses the plain-text output of `git log --numstat --date=unix`.
// One InteractionEvent per (author, file) numstat line; weight is
// added + deleted lines, binary markers ("-") count as 0.
ParseResult parse_numstat_log(const std::string& text);

// Event CSV with header `actor,object,timestamp,weight`, RFC-4180 quoting.
ParseResult parse_event_csv(const std::string& text);

// Alias rules CSV `raw,canonical`. Throws InputError when one raw id maps to
// two different canonical ids.
std::map<std::string, std::string> parse_alias_rules(const std::string& text);

// Case-folds and trims every id, then applies the alias rules. Idempotent:
// canonical ids themselves are folded and trimmed.
EventLog normalize_ids(const EventLog& log,
                       const std::map<std::string, std::string>& rules);

// Sliding windows starting at the earliest timestamp, advancing by spec.step.
// Events land in every window containing their timestamp. The trailing
// window is flagged partial when it extends past the last event.
std::vector<std::pair<WindowInterval, EventLog>> window_events(
    const EventLog& log, const WindowSpec& spec);

// Actor/artifact bipartite graph for one window.
struct BipartiteGraph {
    struct Edge {
        std::string actor;
        std::string artifact;
        std::int64_t timestamp;
        double weight;
    };
    std::vector<Edge> edges;

    static BipartiteGraph from_events(const EventLog& log);
};

// Time-respecting one-mode projection: for each artifact, every ordered pair
// of touches by distinct actors with |t_i - t_j| <= delta_t_threshold yields
// one multi-edge from the earlier to the later actor. When `undirected`,
// the result is symmetrized.
MultiEdgeNetwork project_to_multiedge(const BipartiteGraph& bip,
                                      const WindowSpec& spec,
                                      bool undirected = false);

}  // namespace resnet
