// resnet: reconstruct interaction networks from event logs, monitor the
// robustness/propensity-to-change resilience score over sliding windows, and
// simulate interventions against leave cascades.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resnet/balance.hpp"
#include "resnet/ensemble.hpp"
#include "resnet/errors.hpp"
#include "resnet/ingest.hpp"
#include "resnet/intervene.hpp"
#include "resnet/io.hpp"
#include "resnet/resilience.hpp"
#include "resnet/signed.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

LogLevel log_level() {
    const char* env = std::getenv("RESNET_LOG");
    if (env == nullptr) {
        return LogLevel::Warn;
    }
    const std::string v = env;
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    if (v == "error") return LogLevel::Error;
    return LogLevel::Warn;
}

void log(LogLevel level, const std::string& msg) {
    static const LogLevel threshold = log_level();
    if (level >= threshold) {
        static const char* names[] = {"debug", "info", "warn", "error"};
        std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg
                  << "\n";
    }
}

struct RunConfig {
    std::string input;
    std::string kind = "numstat";
    std::string aliases;
    std::int64_t window = 0;
    std::int64_t step = 0;
    std::int64_t delta_t = -1;
    bool undirected = false;
    double alpha = 0.05;
    double beta = 0.2;
    std::string robustness = "balance";
    std::string importance = "coreness";
    bool paper_literal = false;
    bool recalibrate = false;
    bool column_impact = false;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string out = ".";
};

// flags > config file > built-in defaults: the config file is loaded into
// the defaults before CLI11 parses the command line
void load_config_file(int argc, char** argv, RunConfig& cfg) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            path = argv[i + 1];
        }
    }
    if (path.empty()) {
        return;
    }
    const json j = json::parse(resnet::read_file(path));
    cfg.input = j.value("input", cfg.input);
    cfg.kind = j.value("kind", cfg.kind);
    cfg.aliases = j.value("aliases", cfg.aliases);
    cfg.window = j.value("window", cfg.window);
    cfg.step = j.value("step", cfg.step);
    cfg.delta_t = j.value("delta_t", cfg.delta_t);
    cfg.undirected = j.value("undirected", cfg.undirected);
    cfg.alpha = j.value("alpha", cfg.alpha);
    cfg.beta = j.value("beta", cfg.beta);
    cfg.robustness = j.value("robustness", cfg.robustness);
    cfg.importance = j.value("importance", cfg.importance);
    cfg.paper_literal = j.value("paper_literal", cfg.paper_literal);
    cfg.recalibrate = j.value("recalibrate", cfg.recalibrate);
    cfg.column_impact = j.value("column_impact", cfg.column_impact);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.out = j.value("out", cfg.out);
}

resnet::ResilienceConfig to_resilience_config(const RunConfig& cfg) {
    resnet::ResilienceConfig rc;
    rc.alpha = cfg.alpha;
    rc.beta = cfg.beta;
    rc.robustness = resnet::robustness_source_from_string(cfg.robustness);
    rc.importance = resnet::importance_method_from_string(cfg.importance);
    rc.paper_literal = cfg.paper_literal;
    rc.recalibrate_potentiality = cfg.recalibrate;
    rc.column_wise_impact = cfg.column_impact;
    rc.seed = cfg.seed;
    rc.jobs = cfg.jobs;
    return rc;
}

void validate_common(const RunConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw resnet::InputError("alpha must lie in (0, 1)");
    }
}

std::string window_file_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "window_%03zu.json", index);
    return buf;
}

int cmd_ingest(const RunConfig& cfg) {
    validate_common(cfg);
    const std::string text = resnet::read_file(cfg.input);
    resnet::ParseResult parsed;
    if (cfg.kind == "numstat") {
        parsed = resnet::parse_numstat_log(text);
    } else if (cfg.kind == "csv") {
        parsed = resnet::parse_event_csv(text);
    } else {
        throw resnet::InputError("unknown input kind '" + cfg.kind +
                                 "' (allowed: numstat, csv)");
    }
    for (const auto& issue : parsed.issues) {
        log(LogLevel::Warn, cfg.input + ":" + std::to_string(issue.line) +
                                ": " + issue.message);
    }
    if (parsed.log.empty()) {
        throw resnet::InputError("no events parsed from " + cfg.input);
    }

    std::map<std::string, std::string> rules;
    if (!cfg.aliases.empty()) {
        rules = resnet::parse_alias_rules(resnet::read_file(cfg.aliases));
    }
    const resnet::EventLog normalized = resnet::normalize_ids(parsed.log, rules);
    log(LogLevel::Info,
        "parsed " + std::to_string(normalized.size()) + " events");

    resnet::WindowSpec spec{cfg.window, cfg.step, cfg.delta_t};
    const auto windows = resnet::window_events(normalized, spec);

    fs::create_directories(cfg.out);
    std::vector<std::string> files;
    for (std::size_t w = 0; w < windows.size(); ++w) {
        const auto bip = resnet::BipartiteGraph::from_events(windows[w].second);
        const auto net = resnet::project_to_multiedge(bip, spec, cfg.undirected);
        const std::string name = window_file_name(w);
        resnet::write_file((fs::path(cfg.out) / name).string(),
                           resnet::network_to_json(net, &windows[w].first));
        files.push_back(name);
    }
    resnet::write_file((fs::path(cfg.out) / "manifest.json").string(),
                       resnet::manifest_to_json(files));
    std::cout << "wrote " << files.size() << " window file(s) to " << cfg.out
              << "\n";
    return 0;
}

int cmd_analyze(const RunConfig& cfg) {
    validate_common(cfg);
    const auto net = resnet::network_from_json(resnet::read_file(cfg.input));
    const auto ensemble = resnet::Ensemble::from_network(net);
    const auto filtered = resnet::significant_links(net, ensemble, cfg.alpha);
    const auto sn = resnet::infer_signed(net, ensemble);
    const auto r = resnet::importance(
        net, resnet::importance_method_from_string(cfg.importance));
    const auto profiles = resnet::social_impact(sn, r, cfg.column_impact);
    const auto summary = resnet::classic_balance(sn);
    const auto mean_T = resnet::weighted_balance(sn, profiles);

    fs::create_directories(cfg.out);
    const fs::path out(cfg.out);
    resnet::write_file((out / "ensemble.json").string(),
                       resnet::ensemble_to_json(ensemble));
    resnet::write_file((out / "significant.json").string(),
                       resnet::network_to_json(filtered));
    resnet::write_file((out / "signed.csv").string(), resnet::signed_to_csv(sn));
    resnet::write_file((out / "profiles.csv").string(),
                       resnet::profiles_to_csv(net.node_ids(), profiles));
    json balance{{"triads", summary.triads.size()},
                 {"fraction_balanced", summary.fraction_balanced}};
    if (mean_T.has_value()) {
        balance["mean_T"] = *mean_T;
    }
    resnet::write_file((out / "balance.json").string(), balance.dump(2) + "\n");
    std::cout << "analysis written to " << cfg.out << "\n";
    return 0;
}

int cmd_monitor(const RunConfig& cfg) {
    validate_common(cfg);
    const fs::path manifest_path(cfg.input);
    const auto files = resnet::manifest_from_json(
        resnet::read_file(manifest_path.string()));
    const fs::path dir = manifest_path.parent_path();

    std::vector<std::pair<resnet::WindowInterval, resnet::MultiEdgeNetwork>>
        windows;
    for (const auto& f : files) {
        const fs::path p = dir / f;
        if (!fs::exists(p)) {
            throw resnet::InputError("missing window file: " + p.string());
        }
        resnet::WindowInterval interval;
        auto net = resnet::network_from_json(resnet::read_file(p.string()),
                                             &interval);
        windows.emplace_back(interval, std::move(net));
    }

    const auto series = resnet::monitor(windows, to_resilience_config(cfg));

    fs::create_directories(cfg.out);
    const fs::path out(cfg.out);
    resnet::write_file((out / "series.csv").string(),
                       resnet::snapshots_to_csv(series));
    resnet::write_file((out / "snapshots.json").string(),
                       resnet::snapshots_to_json(series));
    std::cout << "monitored " << series.size() << " window(s); series at "
              << (out / "series.csv").string() << "\n";
    return 0;
}

int cmd_intervene(const RunConfig& cfg, const std::string& plans_path) {
    validate_common(cfg);
    const auto net = resnet::network_from_json(resnet::read_file(cfg.input));
    const auto plans = resnet::plans_from_json(resnet::read_file(plans_path));
    const auto results =
        resnet::intervene_and_compare(net, plans, to_resilience_config(cfg));

    fs::create_directories(cfg.out);
    const fs::path out(cfg.out);
    for (const auto& r : results) {
        resnet::write_file((out / (r.plan_id + ".json")).string(),
                           resnet::cascade_to_json(r));
    }
    resnet::write_file((out / "summary.csv").string(),
                       resnet::cascade_summary_csv(results));
    std::cout << "compared " << results.size() << " plan(s); summary at "
              << (out / "summary.csv").string() << "\n";
    return 0;
}

int cmd_export(const RunConfig& cfg, const std::string& format) {
    const auto net = resnet::network_from_json(resnet::read_file(cfg.input));
    std::string content;
    if (format == "graphml") {
        content = resnet::network_to_graphml(net);
    } else if (format == "csv") {
        content = resnet::network_to_adjacency_csv(net);
    } else {
        throw resnet::InputError("unknown export format '" + format +
                                 "' (allowed: graphml, csv)");
    }
    resnet::write_file(cfg.out, content);
    std::cout << "exported " << format << " to " << cfg.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    try {
        load_config_file(argc, argv, cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }

    CLI::App app{"organizational resilience monitoring from interaction logs"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "significance level")
            ->capture_default_str();
        sub->add_option("--beta", cfg.beta, "logistic slope for R_hat")
            ->capture_default_str();
        sub->add_option("--robustness", cfg.robustness,
                        "balance|coreness|centralization|eigengap")
            ->capture_default_str();
        sub->add_option("--importance", cfg.importance,
                        "coreness|eigenvector|uniform")
            ->capture_default_str();
        sub->add_flag("--paper-literal", cfg.paper_literal,
                      "printed logistic sign (decreasing in <T>)");
        sub->add_flag("--recalibrate", cfg.recalibrate,
                      "min-max P_hat over the whole series");
        sub->add_flag("--column-impact", cfg.column_impact,
                      "social impact over incoming relations");
        sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
        sub->add_option("--jobs", cfg.jobs, "parallel window workers")
            ->capture_default_str();
        sub->add_option("--config", config_path, "JSON config file");
    };

    auto* ingest = app.add_subcommand("ingest", "parse a log into window files");
    ingest->add_option("--input", cfg.input, "source file")->required();
    ingest->add_option("--kind", cfg.kind, "numstat|csv")->capture_default_str();
    ingest->add_option("--aliases", cfg.aliases, "alias rules CSV");
    ingest->add_option("--window", cfg.window, "window width (s)")->required();
    ingest->add_option("--step", cfg.step, "window step (s)")->required();
    ingest->add_option("--delta-t", cfg.delta_t,
                       "co-edit pairing threshold (s); negative = unbounded")
        ->capture_default_str();
    ingest->add_flag("--undirected", cfg.undirected, "symmetrize projection");
    ingest->add_option("--out", cfg.out, "output directory")->required();
    add_common(ingest);

    auto* analyze =
        app.add_subcommand("analyze", "full analysis of one window network");
    analyze->add_option("--network", cfg.input, "window network JSON")
        ->required();
    analyze->add_option("--out", cfg.out, "output directory")->required();
    add_common(analyze);

    auto* monitor =
        app.add_subcommand("monitor", "resilience time series over a manifest");
    monitor->add_option("--manifest", cfg.input, "manifest from ingest")
        ->required();
    monitor->add_option("--out", cfg.out, "output directory")->required();
    add_common(monitor);

    std::string plans_path;
    auto* intervene =
        app.add_subcommand("intervene", "run intervention plans on a network");
    intervene->add_option("--network", cfg.input, "network JSON")->required();
    intervene->add_option("--plans", plans_path, "plan JSON")->required();
    intervene->add_option("--out", cfg.out, "output directory")->required();
    add_common(intervene);

    std::string format = "graphml";
    auto* exp = app.add_subcommand("export", "export a network file");
    exp->add_option("--network", cfg.input, "network JSON")->required();
    exp->add_option("--format", format, "graphml|csv")->capture_default_str();
    exp->add_option("--out", cfg.out, "output file")->required();
    add_common(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(ingest)) return cmd_ingest(cfg);
        if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
        if (app.got_subcommand(monitor)) return cmd_monitor(cfg);
        if (app.got_subcommand(intervene)) return cmd_intervene(cfg, plans_path);
        if (app.got_subcommand(exp)) return cmd_export(cfg, format);
    } catch (const resnet::InputError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
