#include <gtest/gtest.h>

#include "lsdeg/golden.hpp"
#include "lsdeg/graph.hpp"
#include "lsdeg/report.hpp"

#include <algorithm>
#include <set>
#include <tuple>

using namespace lsdeg;

namespace {

const StandardGraph& full() {
    static const StandardGraph g = standard_graph();
    return g;
}

const StandardGraph& ablated() {
    static const StandardGraph g = [] {
        ReportOptions opt;
        opt.skip_table4 = true;
        return standard_graph(opt);
    }();
    return g;
}

std::set<std::tuple<std::string, std::string, int, std::string>> keys(const std::vector<DegenerationEdge>& es) {
    std::set<std::tuple<std::string, std::string, int, std::string>> out;
    for (const auto& e : es) out.emplace(e.from, e.to, static_cast<int>(e.kind), e.constraint);
    return out;
}

std::set<std::string> names(const ComponentReport& r) {
    std::set<std::string> out;
    for (const auto& c : r.components) out.insert(c.node);
    return out;
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Graph, AllWitnessesUsed) {
    EXPECT_EQ(full().verified.size(), 40u);
    EXPECT_EQ(full().graph.nodes.size(), 23u);
    EXPECT_TRUE(full().graph.collisions.empty());
}

TEST(Graph, HasseMatchesOracle) {
    std::set<std::tuple<std::string, std::string, std::string>> got, want;
    for (const auto& e : hasse_reduction(full().graph)) got.emplace(e.from, e.to, e.constraint);
    for (const auto& t : expected_hasse()) want.insert(t);
    EXPECT_EQ(got, want);
}

TEST(Graph, Components) {
    auto rep = components(full().graph, full().rigid);
    EXPECT_EQ(names(rep), as_set(expected_components()));
    for (const auto& c : rep.components) EXPECT_FALSE(c.justification.empty()) << c.node;
    int rigid = 0;
    for (const auto& c : rep.components) rigid += c.rigid;
    EXPECT_EQ(rigid, 3);
}

TEST(Graph, AblationLeavesLS17Undominated) {
    auto rep = components(ablated().graph, ablated().rigid);
    EXPECT_EQ(names(rep), as_set(expected_ablation_components()));
    EXPECT_EQ(names(rep).count("LS17"), 1u);
    EXPECT_EQ(names(components(full().graph, full().rigid)).count("LS17"), 0u);
}

TEST(Graph, EveryNodeReachesLS0) {
    for (const auto& n : full().graph.nodes) {
        if (n == "LS0") continue;
        EXPECT_NE(full().graph.best_edge(n, "LS0"), nullptr) << n;
    }
}

TEST(Graph, CertificatesRecheck) {
    const auto& sg = full();
    ASSERT_FALSE(sg.graph.certificates.empty());
    for (const auto& [key, cert] : sg.graph.certificates) {
        auto g = catalog_node(key.first).instantiate(sg.plan.node_samples.at(key.first).front());
        auto h = catalog_node(key.second).instantiate(sg.plan.node_samples.at(key.second).front());
        EXPECT_TRUE(recheck_certificate(cert, g, h)) << key.first << " -> " << key.second << ": " << cert.label();
    }
}

TEST(Graph, NoEdgeAndCertificateTogether) {
    const auto& g = full().graph;
    for (const auto& e : g.closure)
        if (e.kind == EdgeKind::AllMembers) EXPECT_EQ(g.certificates.count({e.from, e.to}), 0u) << e.label();
}

TEST(Graph, DotMentionsEveryNode) {
    auto dot = to_dot(full().graph.nodes, hasse_reduction(full().graph));
    for (const auto& n : full().graph.nodes) EXPECT_NE(dot.find("\"" + n + "\""), std::string::npos) << n;
}

TEST(GraphProperty, ClosureIdempotent) {
    for (const auto* sg : {&full(), &ablated()}) {
        auto again = transitive_closure(sg->graph.closure);
        EXPECT_EQ(keys(again), keys(sg->graph.closure));
    }
}

TEST(GraphProperty, HasseReconstructsClosure) {
    for (const auto* sg : {&full(), &ablated()}) {
        std::vector<DegenerationEdge> orbit;
        for (const auto& e : sg->graph.closure)
            if (e.scope == EdgeScope::Orbit) orbit.push_back(e);
        auto rebuilt = transitive_closure(hasse_reduction(sg->graph));
        EXPECT_EQ(keys(rebuilt), keys(orbit));
    }
}

TEST(Report, DeterministicOnSubset) {
    ReportOptions opt;
    opt.samples = 2;
    opt.skip_table4 = true;
    opt.nodes = std::vector<std::string>{"LS19", "LS4", "LS2", "LS3", "LS0"};
    auto a = reproduce(opt), b = reproduce(opt);
    EXPECT_EQ(a.json, b.json);
    EXPECT_EQ(a.dot, b.dot);
    EXPECT_NE(a.json.find("\"schema\""), std::string::npos);
}
