#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace resnet {

// One timestamped actor/object interaction. `object` is either a shared
// artifact (e.g. a file path) or a counterparty actor id, depending on the
// source kind.
struct InteractionEvent {
    std::string actor;
    std::string object;
    std::int64_t timestamp = 0;  // seconds since epoch
    double weight = 0.0;         // >= 0, e.g. lines changed
};

struct EventLog {
    std::vector<InteractionEvent> events;

    bool empty() const { return events.empty(); }
    std::size_t size() const { return events.size(); }
};

// Sliding-window parameters. delta_t_threshold bounds the time distance for
// two touches of the same artifact to count as an interaction; a negative
// value means unbounded (all co-editors pair).
struct WindowSpec {
    std::int64_t width = 0;
    std::int64_t step = 0;
    std::int64_t delta_t_threshold = -1;

    bool unbounded_delta_t() const { return delta_t_threshold < 0; }
    void validate() const;
};

struct WindowInterval {
    std::int64_t start = 0;
    std::int64_t end = 0;  // half-open [start, end)
    bool partial = false;  // extends past the last observed event
};

}  // namespace resnet
