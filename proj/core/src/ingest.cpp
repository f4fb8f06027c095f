#include "resnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "resnet/errors.hpp"

namespace resnet {

void WindowSpec::validate() const {
    if (width <= 0) {
        throw InputError("window width must be positive");
    }
    if (step <= 0 || step > width) {
        throw InputError("window step must satisfy 0 < step <= width");
    }
}

namespace {

std::string fold_trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    std::string out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        out.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(s[i]))));
    }
    return out;
}

bool parse_int(const std::string& s, std::int64_t& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_real(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

// RFC-4180 field splitting, tolerant of a trailing newline.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                quoted = true;
                any = true;
                break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                any = true;
                break;
            case '\r':
                break;
            case '\n':
                if (any || !field.empty() || !row.empty()) {
                    row.push_back(std::move(field));
                    rows.push_back(std::move(row));
                }
                field.clear();
                row.clear();
                any = false;
                break;
            default:
                field.push_back(c);
                any = true;
        }
    }
    if (any || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ParseResult parse_numstat_log(const std::string& text) {
    ParseResult result;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    std::string author;
    std::int64_t date = 0;
    bool have_author = false;
    bool have_date = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.rfind("commit ", 0) == 0) {
            have_author = false;
            have_date = false;
            continue;
        }
        if (line.rfind("Author:", 0) == 0) {
            author = line.substr(7);
            const auto b = author.find_first_not_of(' ');
            author = b == std::string::npos ? "" : author.substr(b);
            if (author.empty()) {
                result.issues.push_back({line_no, "empty author"});
                have_author = false;
            } else {
                have_author = true;
            }
            continue;
        }
        if (line.rfind("Date:", 0) == 0) {
            std::string rest = line.substr(5);
            const auto b = rest.find_first_not_of(' ');
            rest = b == std::string::npos ? "" : rest.substr(b);
            if (parse_int(rest, date)) {
                have_date = true;
            } else {
                result.issues.push_back(
                    {line_no, "non-unix date: '" + rest + "'"});
                have_date = false;
            }
            continue;
        }
        // numstat line: added<TAB>deleted<TAB>path
        const auto t1 = line.find('\t');
        if (t1 == std::string::npos) {
            continue;  // message or blank line
        }
        const auto t2 = line.find('\t', t1 + 1);
        if (t2 == std::string::npos) {
            continue;
        }
        const std::string added = line.substr(0, t1);
        const std::string deleted = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string path = line.substr(t2 + 1);
        std::int64_t a = 0;
        std::int64_t d = 0;
        const bool a_ok = added == "-" || parse_int(added, a);
        const bool d_ok = deleted == "-" || parse_int(deleted, d);
        if (!a_ok || !d_ok || path.empty()) {
            continue;  // not a numstat line
        }
        if (!have_author || !have_date) {
            result.issues.push_back(
                {line_no, "file change outside a well-formed commit header"});
            continue;
        }
        if (added == "-" || deleted == "-") {
            a = 0;
            d = 0;  // binary file marker
        }
        result.log.events.push_back(
            {author, path, date, static_cast<double>(a + d)});
    }
    return result;
}

ParseResult parse_event_csv(const std::string& text) {
    ParseResult result;
    const auto rows = parse_csv(text);
    if (rows.empty()) {
        return result;
    }
    std::size_t start = 0;
    if (rows[0].size() >= 4 && fold_trim(rows[0][0]) == "actor") {
        start = 1;  // header
    }
    for (std::size_t r = start; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() < 4) {
            result.issues.push_back({r + 1, "expected 4 columns"});
            continue;
        }
        std::int64_t ts = 0;
        double w = 0.0;
        if (row[0].empty() || !parse_int(row[2], ts) || !parse_real(row[3], w) ||
            w < 0.0) {
            result.issues.push_back({r + 1, "malformed event row"});
            continue;
        }
        result.log.events.push_back({row[0], row[1], ts, w});
    }
    return result;
}

std::map<std::string, std::string> parse_alias_rules(const std::string& text) {
    std::map<std::string, std::string> rules;
    for (const auto& row : parse_csv(text)) {
        if (row.size() < 2) {
            throw InputError("alias rule rows need two columns raw,canonical");
        }
        const std::string raw = fold_trim(row[0]);
        const std::string canonical = fold_trim(row[1]);
        if (raw == "raw" && canonical == "canonical") {
            continue;  // header
        }
        auto [it, inserted] = rules.emplace(raw, canonical);
        if (!inserted && it->second != canonical) {
            throw InputError("conflicting alias rules for '" + raw + "'");
        }
    }
    return rules;
}

EventLog normalize_ids(const EventLog& log,
                       const std::map<std::string, std::string>& rules) {
    std::map<std::string, std::string> folded;
    for (const auto& [raw, canonical] : rules) {
        const std::string key = fold_trim(raw);
        const std::string value = fold_trim(canonical);
        auto [it, inserted] = folded.emplace(key, value);
        if (!inserted && it->second != value) {
            throw InputError("conflicting alias rules for '" + key + "'");
        }
    }
    auto canon = [&](const std::string& id) {
        std::string s = fold_trim(id);
        auto it = folded.find(s);
        return it == folded.end() ? s : it->second;
    };
    EventLog out;
    out.events.reserve(log.events.size());
    for (const auto& e : log.events) {
        out.events.push_back({canon(e.actor), canon(e.object), e.timestamp,
                              e.weight});
    }
    return out;
}

std::vector<std::pair<WindowInterval, EventLog>> window_events(
    const EventLog& log, const WindowSpec& spec) {
    spec.validate();
    if (log.empty()) {
        throw InputError("cannot window an empty event log");
    }
    std::int64_t t_min = log.events.front().timestamp;
    std::int64_t t_max = t_min;
    for (const auto& e : log.events) {
        t_min = std::min(t_min, e.timestamp);
        t_max = std::max(t_max, e.timestamp);
    }
    std::vector<std::pair<WindowInterval, EventLog>> out;
    for (std::int64_t start = t_min; start <= t_max; start += spec.step) {
        WindowInterval w{start, start + spec.width, start + spec.width > t_max};
        EventLog bucket;
        for (const auto& e : log.events) {
            if (e.timestamp >= w.start && e.timestamp < w.end) {
                bucket.events.push_back(e);
            }
        }
        out.emplace_back(w, std::move(bucket));
    }
    return out;
}

BipartiteGraph BipartiteGraph::from_events(const EventLog& log) {
    BipartiteGraph bip;
    bip.edges.reserve(log.events.size());
    for (const auto& e : log.events) {
        bip.edges.push_back({e.actor, e.object, e.timestamp, e.weight});
    }
    return bip;
}

MultiEdgeNetwork project_to_multiedge(const BipartiteGraph& bip,
                                      const WindowSpec& spec,
                                      bool undirected) {
    // stable actor indexing by first appearance, then sorted for determinism
    std::vector<std::string> actors;
    for (const auto& e : bip.edges) {
        actors.push_back(e.actor);
    }
    std::sort(actors.begin(), actors.end());
    actors.erase(std::unique(actors.begin(), actors.end()), actors.end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < actors.size(); ++i) {
        index.emplace(actors[i], i);
    }

    std::map<std::string, std::vector<const BipartiteGraph::Edge*>> by_artifact;
    for (const auto& e : bip.edges) {
        by_artifact[e.artifact].push_back(&e);
    }

    const std::size_t n = actors.size();
    std::vector<std::int64_t> counts(n * n, 0);
    for (auto& [artifact, touches] : by_artifact) {
        std::sort(touches.begin(), touches.end(),
                  [](const auto* a, const auto* b) {
                      return std::tie(a->timestamp, a->actor) <
                             std::tie(b->timestamp, b->actor);
                  });
        for (std::size_t a = 0; a < touches.size(); ++a) {
            for (std::size_t b = a + 1; b < touches.size(); ++b) {
                const auto* early = touches[a];
                const auto* late = touches[b];
                if (early->actor == late->actor) {
                    continue;
                }
                const std::int64_t dt = late->timestamp - early->timestamp;
                if (!spec.unbounded_delta_t() && dt > spec.delta_t_threshold) {
                    break;  // touches sorted by time, later gaps only grow
                }
                counts[index[early->actor] * n + index[late->actor]] += 1;
            }
        }
    }
    MultiEdgeNetwork net(std::move(actors), std::move(counts), true);
    return undirected ? net.symmetrized() : net;
}

}  // namespace resnet
