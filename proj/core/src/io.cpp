#include "resnet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resnet/errors.hpp"
#include "resnet/topology.hpp"

namespace resnet {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

json window_to_json_obj(const WindowInterval& w) {
    return json{{"start", w.start}, {"end", w.end}, {"partial", w.partial}};
}

WindowInterval window_from_json_obj(const json& j) {
    WindowInterval w;
    w.start = j.at("start").get<std::int64_t>();
    w.end = j.at("end").get<std::int64_t>();
    w.partial = j.value("partial", false);
    return w;
}

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& ex) {
        throw InputError(std::string("malformed ") + what + ": " + ex.what());
    }
}

// missing keys and type mismatches surface as input errors, not crashes
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& ex) {
        throw InputError(std::string("malformed ") + what + ": " + ex.what());
    }
}

}  // namespace

std::string network_to_json(const MultiEdgeNetwork& net,
                            const WindowInterval* window) {
    const std::size_t n = net.n();
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(net.count(i, j));
        }
        rows.push_back(std::move(row));
    }
    json j{{"node_ids", net.node_ids()},
           {"counts", std::move(rows)},
           {"directed", net.directed()},
           {"m", net.m()}};
    if (window != nullptr) {
        j["window"] = window_to_json_obj(*window);
    }
    return j.dump(2) + "\n";
}

MultiEdgeNetwork network_from_json(const std::string& text,
                                   WindowInterval* window) {
    const json j = parse(text, "network JSON");
    return guarded("network JSON", [&] {
    std::vector<std::string> ids = j.at("node_ids").get<std::vector<std::string>>();
    const auto& rows = j.at("counts");
    const std::size_t n = ids.size();
    if (rows.size() != n) {
        throw InputError("network JSON: counts row count mismatch");
    }
    std::vector<std::int64_t> counts;
    counts.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw InputError("network JSON: counts column count mismatch");
        }
        for (const auto& v : row) {
            counts.push_back(v.get<std::int64_t>());
        }
    }
    if (window != nullptr && j.contains("window")) {
        *window = window_from_json_obj(j.at("window"));
    }
    return MultiEdgeNetwork(std::move(ids), std::move(counts),
                            j.value("directed", true));
    });
}

std::string manifest_to_json(const std::vector<std::string>& window_files) {
    json j{{"kind", "resnet-window-manifest"}, {"windows", window_files}};
    return j.dump(2) + "\n";
}

std::vector<std::string> manifest_from_json(const std::string& text) {
    const json j = parse(text, "manifest");
    return guarded("manifest", [&] {
        return j.at("windows").get<std::vector<std::string>>();
    });
}

std::string ensemble_to_json(const Ensemble& e) {
    const std::size_t n = e.n();
    json xi = json::array();
    json omega = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json xrow = json::array();
        json orow = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            xrow.push_back(e.xi(i, j));
            orow.push_back(e.omega(i, j));
        }
        xi.push_back(std::move(xrow));
        omega.push_back(std::move(orow));
    }
    json j{{"node_ids", e.node_ids()},
           {"Xi", std::move(xi)},
           {"Omega", std::move(omega)},
           {"m", e.m()}};
    return j.dump(2) + "\n";
}

Ensemble ensemble_from_json(const std::string& text) {
    const json j = parse(text, "ensemble JSON");
    return guarded("ensemble JSON", [&] {
    std::vector<std::string> ids = j.at("node_ids").get<std::vector<std::string>>();
    const std::size_t n = ids.size();
    auto matrix = [&](const char* key) {
        std::vector<double> out;
        out.reserve(n * n);
        for (const auto& row : j.at(key)) {
            for (const auto& v : row) {
                out.push_back(v.get<double>());
            }
        }
        if (out.size() != n * n) {
            throw InputError(std::string("ensemble JSON: bad ") + key);
        }
        return out;
    };
    return Ensemble(std::move(ids), matrix("Xi"), matrix("Omega"),
                    j.at("m").get<std::int64_t>());
    });
}

std::string regression_report_to_json(const RegressionReport& report) {
    json j{{"beta", report.beta},
           {"lr_statistic", report.lr_statistic},
           {"p_value", report.p_value},
           {"loglik", report.loglik},
           {"converged", report.converged},
           {"degenerate", report.degenerate},
           {"iterations", report.iterations}};
    return j.dump(2) + "\n";
}

std::string signed_to_csv(const SignedNetwork& sn) {
    std::ostringstream out;
    out << "i,j,omega\n";
    const std::size_t n = sn.n();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && sn.at(i, j) != 0.0) {
                out << sn.node_ids[i] << ',' << sn.node_ids[j] << ','
                    << format_double(sn.at(i, j)) << '\n';
            }
        }
    }
    return out.str();
}

std::string profiles_to_csv(const std::vector<std::string>& node_ids,
                            const std::vector<AgentProfile>& profiles) {
    std::ostringstream out;
    out << "node,r,I,q\n";
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        out << node_ids[i] << ',' << format_double(profiles[i].importance)
            << ',' << format_double(profiles[i].impact) << ','
            << format_double(profiles[i].total) << '\n';
    }
    return out.str();
}

std::string snapshots_to_csv(const std::vector<ResilienceSnapshot>& series) {
    std::ostringstream out;
    out << "window_start,window_end,mean_T,R_hat,P,P_hat,resilience,"
           "robustness_coreness,robustness_centralization,robustness_eigengap,"
           "beta,error\n";
    for (const auto& s : series) {
        out << s.window.start << ',' << s.window.end << ',';
        if (s.mean_T.has_value()) {
            out << format_double(*s.mean_T);
        }
        out << ',' << format_double(s.r_hat) << ','
            << format_double(s.potentiality) << ',' << format_double(s.p_hat)
            << ',' << format_double(s.resilience) << ','
            << format_double(s.robustness_coreness) << ','
            << format_double(s.robustness_centralization) << ','
            << format_double(s.robustness_eigengap) << ','
            << format_double(s.beta) << ',' << s.error << '\n';
    }
    return out.str();
}

namespace {

json snapshot_to_json_obj(const ResilienceSnapshot& s) {
    json j{{"window", window_to_json_obj(s.window)},
           {"R_hat", s.r_hat},
           {"P", s.potentiality},
           {"P_hat", s.p_hat},
           {"resilience", s.resilience},
           {"robustness_coreness", s.robustness_coreness},
           {"robustness_centralization", s.robustness_centralization},
           {"robustness_eigengap", s.robustness_eigengap},
           {"beta", s.beta},
           {"recalibrated", s.recalibrated}};
    if (s.mean_T.has_value()) {
        j["mean_T"] = *s.mean_T;
    }
    if (!s.error.empty()) {
        j["error"] = s.error;
    }
    return j;
}

}  // namespace

std::string snapshots_to_json(const std::vector<ResilienceSnapshot>& series) {
    json arr = json::array();
    for (const auto& s : series) {
        arr.push_back(snapshot_to_json_obj(s));
    }
    return arr.dump(2) + "\n";
}

std::vector<InterventionPlan> plans_from_json(const std::string& text) {
    const json j = parse(text, "plan JSON");
    return guarded("plan JSON", [&] {
    const json& arr = j.is_array() ? j : j.at("plans");
    std::vector<InterventionPlan> plans;
    for (const auto& p : arr) {
        InterventionPlan plan;
        plan.id = p.at("id").get<std::string>();
        plan.strategy = strategy_from_string(p.value("strategy", "none"));
        plan.budget = p.value("budget", 0);
        plan.boost = p.value("boost", 0.0);
        plan.steps = p.value("steps", 1);
        plan.leave_threshold = p.value("leave_threshold", 0.0);
        if (p.contains("targets")) {
            plan.targets = p.at("targets").get<std::vector<std::string>>();
        }
        if (plan.budget < 0 || plan.steps < 1) {
            throw InputError("plan '" + plan.id +
                             "': budget must be >= 0 and steps >= 1");
        }
        plans.push_back(std::move(plan));
    }
    return plans;
    });
}

std::string plans_to_json(const std::vector<InterventionPlan>& plans) {
    json arr = json::array();
    for (const auto& p : plans) {
        json j{{"id", p.id},
               {"strategy", to_string(p.strategy)},
               {"budget", p.budget},
               {"boost", p.boost},
               {"steps", p.steps},
               {"leave_threshold", p.leave_threshold}};
        if (!p.targets.empty()) {
            j["targets"] = p.targets;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string cascade_to_json(const CascadeResult& result) {
    json steps = json::array();
    for (const auto& s : result.steps) {
        steps.push_back(json{{"removed", s.removed},
                             {"boosted", s.boosted},
                             {"mean_coreness", s.mean_coreness},
                             {"snapshot", snapshot_to_json_obj(s.snapshot)}});
    }
    json j{{"plan_id", result.plan_id},
           {"steps", std::move(steps)},
           {"terminated_at", result.terminated_at},
           {"survivors", result.survivors}};
    return j.dump(2) + "\n";
}

std::string cascade_summary_csv(const std::vector<CascadeResult>& results) {
    std::ostringstream out;
    out << "plan_id,steps,final_mean_coreness,final_resilience,survivors\n";
    for (const auto& r : results) {
        double final_core = 0.0;
        double final_res = 0.5;
        if (!r.steps.empty()) {
            final_core = r.steps.back().mean_coreness;
            final_res = r.steps.back().snapshot.resilience;
        }
        out << r.plan_id << ',' << r.terminated_at << ','
            << format_double(final_core) << ',' << format_double(final_res)
            << ',' << r.survivors.size() << '\n';
    }
    return out.str();
}

std::string network_to_graphml(const MultiEdgeNetwork& net) {
    const auto core = net.n() > 0 ? kcore_decomposition(net, false)
                                  : std::vector<double>{};
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"coreness\" for=\"node\" attr.name=\"coreness\" "
           "attr.type=\"double\"/>\n"
        << "  <key id=\"count\" for=\"edge\" attr.name=\"count\" "
           "attr.type=\"long\"/>\n"
        << "  <graph edgedefault=\""
        << (net.directed() ? "directed" : "undirected") << "\">\n";
    for (std::size_t i = 0; i < net.n(); ++i) {
        out << "    <node id=\"" << net.node_ids()[i] << "\">"
            << "<data key=\"coreness\">" << format_double(core[i])
            << "</data></node>\n";
    }
    for (std::size_t i = 0; i < net.n(); ++i) {
        for (std::size_t j = 0; j < net.n(); ++j) {
            if (!net.directed() && j < i) {
                continue;
            }
            if (net.count(i, j) > 0) {
                out << "    <edge source=\"" << net.node_ids()[i]
                    << "\" target=\"" << net.node_ids()[j] << "\">"
                    << "<data key=\"count\">" << net.count(i, j)
                    << "</data></edge>\n";
            }
        }
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string network_to_adjacency_csv(const MultiEdgeNetwork& net) {
    std::ostringstream out;
    out << "node";
    for (const auto& id : net.node_ids()) {
        out << ',' << id;
    }
    out << '\n';
    for (std::size_t i = 0; i < net.n(); ++i) {
        out << net.node_ids()[i];
        for (std::size_t j = 0; j < net.n(); ++j) {
            out << ',' << net.count(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write file: " + path);
    }
    out << content;
}

}  // namespace resnet
