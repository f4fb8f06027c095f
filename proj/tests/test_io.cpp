#include <doctest.h>

#include <sstream>
#include <string>

#include "helpers.hpp"
#include "resnet/errors.hpp"
#include "resnet/io.hpp"

using namespace resnet;
using testutil::net_from_edges;

TEST_CASE("network json round-trip") {
    const auto net = net_from_edges(3, {{0, 1, 2}, {1, 2, 5}, {2, 0, 1}});
    WindowInterval window;
    window.start = 3;
    window.end = 17;
    window.partial = true;

    const auto text = network_to_json(net, &window);
    WindowInterval back_window;
    const auto back = network_from_json(text, &back_window);

    CHECK(back.n() == net.n());
    CHECK(back.m() == net.m());
    CHECK(back.directed() == net.directed());
    CHECK(back.node_ids() == net.node_ids());
    CHECK(back.counts() == net.counts());
    CHECK(back_window.start == 3);
    CHECK(back_window.end == 17);
    CHECK(back_window.partial);

    // byte-stable
    CHECK(network_to_json(net, &window) == text);
    // window block optional
    const auto bare = network_to_json(net);
    CHECK(network_from_json(bare).m() == net.m());

    CHECK_THROWS_AS(network_from_json("not json"), InputError);
    CHECK_THROWS_AS(network_from_json("{}"), InputError);
}

TEST_CASE("manifest round-trip preserves order") {
    const std::vector<std::string> files{"window_000.json", "window_001.json",
                                         "window_002.json"};
    const auto text = manifest_to_json(files);
    CHECK(manifest_from_json(text) == files);
}

TEST_CASE("ensemble json round-trip") {
    const auto net = net_from_edges(3, {{0, 1, 2}, {1, 2, 5}, {2, 0, 1}});
    auto e = Ensemble::from_network(net);
    std::vector<double> omega(9, 1.0);
    omega[1] = 2.5;
    omega[5] = 0.25;
    e.set_omega(omega);

    const auto back = ensemble_from_json(ensemble_to_json(e));
    CHECK(back.node_ids() == e.node_ids());
    CHECK(back.m() == e.m());
    CHECK(back.xi() == e.xi());
    for (std::size_t k = 0; k < omega.size(); ++k) {
        CHECK(back.omega()[k] == doctest::Approx(e.omega()[k]).epsilon(1e-12));
    }
}

TEST_CASE("plans json round-trip") {
    InterventionPlan a;
    a.id = "baseline";
    a.leave_threshold = 0.25;
    InterventionPlan b;
    b.id = "boost-weak";
    b.strategy = Strategy::Targeted;
    b.targets = {"alice", "bob"};
    b.budget = 2;
    b.boost = 0.5;
    b.steps = 3;
    b.leave_threshold = 0.4;

    const auto text = plans_to_json({a, b});
    const auto back = plans_from_json(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == "baseline");
    CHECK(back[0].strategy == Strategy::None);
    CHECK(back[1].strategy == Strategy::Targeted);
    CHECK(back[1].targets == std::vector<std::string>{"alice", "bob"});
    CHECK(back[1].budget == 2);
    CHECK(back[1].boost == doctest::Approx(0.5));
    CHECK(back[1].steps == 3);
    CHECK(back[1].leave_threshold == doctest::Approx(0.4));

    CHECK_THROWS_AS(plans_from_json("[{\"strategy\": \"nonsense\"}]"),
                    InputError);
}

TEST_CASE("snapshot csv layout") {
    ResilienceSnapshot ok;
    ok.window.start = 0.0;
    ok.window.end = 10.0;
    ok.mean_T = 0.25;
    ok.r_hat = 0.6;
    ok.potentiality = 0.4;
    ok.p_hat = 0.4;
    ok.resilience = 0.52;
    ResilienceSnapshot bad;
    bad.window.start = 10.0;
    bad.window.end = 20.0;
    bad.error = "empty window";

    const auto csv = snapshots_to_csv({ok, bad});
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "window_start,window_end,mean_T,R_hat,P,P_hat,resilience,"
          "robustness_coreness,robustness_centralization,robustness_eigengap,"
          "beta,error");
    std::string row1;
    std::string row2;
    REQUIRE(std::getline(lines, row1));
    REQUIRE(std::getline(lines, row2));
    CHECK(row1.rfind("0,10,0.25,0.6,0.4,0.4,0.52", 0) == 0);
    CHECK(row2.find("empty window") != std::string::npos);
    // a failed window leaves the balance column blank
    CHECK(row2.rfind("10,20,,", 0) == 0);
    // byte-stable
    CHECK(snapshots_to_csv({ok, bad}) == csv);
}

TEST_CASE("signed and profile csv") {
    SignedNetwork sn;
    sn.node_ids = {"a", "b"};
    sn.omega = {0.0, 0.5, -0.25, 0.0};
    const auto csv = signed_to_csv(sn);
    CHECK(csv.find("i,j,omega") == 0);
    CHECK(csv.find("a,b,0.5") != std::string::npos);
    CHECK(csv.find("b,a,-0.25") != std::string::npos);
    // zero relations are omitted
    CHECK(csv.find("a,a") == std::string::npos);

    std::vector<AgentProfile> profiles(2);
    profiles[0].importance = 1.0;
    profiles[0].impact = 0.5;
    profiles[0].impact_positive = 0.5;
    profiles[0].total = 1.5;
    profiles[1].importance = 0.25;
    profiles[1].impact = -0.25;
    profiles[1].impact_negative = 0.25;
    profiles[1].total = 0.0;
    const auto pcsv = profiles_to_csv(sn.node_ids, profiles);
    CHECK(pcsv.find("node,r,I,q") == 0);
    CHECK(pcsv.find("a,1,0.5,1.5") != std::string::npos);
    CHECK(pcsv.find("b,0.25,-0.25,0") != std::string::npos);
}

TEST_CASE("cascade serialization") {
    CascadeResult result;
    result.plan_id = "demo";
    result.terminated_at = 1;
    result.survivors = {"a", "b"};
    CascadeStep step;
    step.removed = {"c"};
    step.mean_coreness = 1.5;
    result.steps.push_back(step);

    const auto text = cascade_to_json(result);
    CHECK(text.find("\"demo\"") != std::string::npos);
    CHECK(text.find("\"c\"") != std::string::npos);
    CHECK(cascade_to_json(result) == text);

    const auto csv = cascade_summary_csv({result});
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "plan_id,steps,final_mean_coreness,final_resilience,survivors");
    std::string row;
    REQUIRE(std::getline(lines, row));
    CHECK(row == "demo,1,1.5,0.5,2");
}

TEST_CASE("graphml and adjacency export") {
    const auto net = net_from_edges(3, {{0, 1, 2}, {1, 2, 5}});
    const auto xml = network_to_graphml(net);
    CHECK(xml.find("<graphml") != std::string::npos);
    CHECK(xml.find("coreness") != std::string::npos);
    // every node and edge present
    for (const auto& id : net.node_ids()) {
        CHECK(xml.find("\"" + id + "\"") != std::string::npos);
    }
    CHECK(xml.find(">2<") != std::string::npos);
    CHECK(xml.find(">5<") != std::string::npos);

    const auto csv = network_to_adjacency_csv(net);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "node,n0,n1,n2");
    CHECK(csv.find("n0,0,2,0") != std::string::npos);
    CHECK(csv.find("n1,0,0,5") != std::string::npos);
}

TEST_CASE("format_double") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-0.25) == "-0.25");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("file round-trip") {
    const std::string path = "io_test_scratch.txt";
    write_file(path, "hello\nworld\n");
    CHECK(read_file(path) == "hello\nworld\n");
    CHECK_THROWS_AS(read_file("does_not_exist_anywhere.txt"), InputError);
    std::remove(path.c_str());
}
