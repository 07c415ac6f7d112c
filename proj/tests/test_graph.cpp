#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "graphqfi/graph.hpp"
#include "graphqfi/partition.hpp"

using namespace graphqfi;

TEST_CASE("parse_graph accepts well-formed documents") {
    const Graph k2 = parse_graph(R"({"n":2,"edges":[[0,1]]})");
    CHECK(k2.size() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.edge_count() == 1);

    const Graph p3 = parse_graph(R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(p3.degree(1) == 2);
    CHECK_FALSE(p3.has_edge(0, 2));

    // duplicates and reversed duplicates collapse
    const Graph dup = parse_graph(R"({"n":2,"edges":[[0,1],[1,0],[0,1]]})");
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("parse_graph rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":3,"edges":[[0,3]]})"),
                         doctest::Contains("vertex 3 out of range"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":2,"edges":[[1,1]]})"),
                         doctest::Contains("self-loop"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph(R"({"n":0,"edges":[]})"), std::invalid_argument);
}

TEST_CASE("JSON round-trip is stable and sorted") {
    const Graph g(4, {{3, 2}, {0, 2}, {1, 0}});
    const std::string text = to_json(g);
    CHECK(text == R"({"edges":[[0,1],[0,2],[2,3]],"n":4})");
    const Graph back = parse_graph(text);
    CHECK(to_json(back) == text);
}

TEST_CASE("families") {
    const Graph star5 = star_graph(5);
    CHECK(star5.degree(0) == 4);
    for (int i = 1; i < 5; ++i) {
        CHECK(star5.has_edge(0, i));
        CHECK(star5.degree(i) == 1);
    }

    const Graph c4 = cycle_graph(4);
    CHECK(c4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    CHECK(grid_graph(2, 3).size() == 6);
    CHECK(grid_graph(2, 3).edge_count() == 7);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(1).size() == 1);

    CHECK_THROWS_AS(star_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);

    CHECK(make_family("grid", {2, 3}).edge_count() == 7);
    CHECK_THROWS_AS(make_family("torus", {3}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("grid", {3}), std::invalid_argument);
}

namespace {

std::vector<int> class_sizes(const std::vector<PartitionClass>& classes) {
    std::vector<int> out;
    for (const auto& c : classes) out.push_back(c.size());
    return out;
}

void check_partition_invariants(const Graph& g) {
    const auto report = partition(g);
    for (const auto* side : {&report.open_classes, &report.closed_classes}) {
        std::set<int> seen;
        int total = 0;
        for (const auto& cls : *side) {
            total += cls.size();
            for (int v : cls.members) CHECK(seen.insert(v).second);
        }
        CHECK(total == g.size());
    }
    // open and closed classes overlap in at most one vertex
    for (const auto& open : report.open_classes)
        for (const auto& closed : report.closed_classes) {
            int common = 0;
            for (int v : open.members)
                for (int u : closed.members)
                    if (u == v) ++common;
            CHECK(common <= 1);
        }
    // recomputation is identical
    const auto again = partition(g);
    REQUIRE(again.open_classes.size() == report.open_classes.size());
    for (std::size_t i = 0; i < report.open_classes.size(); ++i)
        CHECK(again.open_classes[i].members == report.open_classes[i].members);
}

}  // namespace

TEST_CASE("partition matches the worked families") {
    auto star = partition(star_graph(5));
    CHECK(class_sizes(star.open_classes) == std::vector<int>{1, 4});

    auto complete = partition(complete_graph(4));
    CHECK(class_sizes(complete.closed_classes) == std::vector<int>{4});
    CHECK(class_sizes(complete.open_classes) == std::vector<int>{1, 1, 1, 1});

    auto path = partition(path_graph(5));
    CHECK(path.open_classes.size() == 5);

    auto p3 = partition(path_graph(3));
    CHECK(class_sizes(p3.open_classes) == std::vector<int>{2, 1});
    CHECK(p3.open_classes[0].members == std::vector<int>{0, 2});
    CHECK(p3.open_classes[0].shared_neighborhood == std::vector<int>{1});
}

TEST_CASE("partition invariants on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        check_partition_invariants(Graph(n, edges));
    }
    check_partition_invariants(Graph(4));  // isolated vertices allowed here
}

TEST_CASE("build_bundle") {
    const auto fig = build_bundle(cycle_graph(3), {3, 4, 3});
    CHECK(fig.graph.size() == 10);
    CHECK(class_sizes(partition(fig.graph).open_classes) == std::vector<int>{3, 4, 3});
    CHECK(fig.bundles[1] == std::vector<int>{3, 4, 5, 6});
    CHECK(fig.bundle_of[9] == 2);

    // all-ones sizes reproduce the base graph exactly
    const Graph base = grid_graph(2, 2);
    const auto same = build_bundle(base, {1, 1, 1, 1});
    CHECK(to_json(same.graph) == to_json(base));

    // K2 with sizes {2,2} gives the complete bipartite K_{2,2}
    const auto k22 = build_bundle(star_graph(2), {2, 2});
    CHECK(k22.graph.edge_count() == 4);
    CHECK(k22.graph.has_edge(0, 2));
    CHECK(k22.graph.has_edge(1, 3));
    CHECK_FALSE(k22.graph.has_edge(0, 1));

    // each bundle lands inside a single open class
    const auto bundled = build_bundle(path_graph(4), {2, 1, 3, 2});
    const auto report = partition(bundled.graph);
    for (const auto& bundle : bundled.bundles) {
        int holder = -1;
        for (std::size_t c = 0; c < report.open_classes.size(); ++c)
            for (int v : report.open_classes[c].members)
                if (v == bundle.front()) holder = static_cast<int>(c);
        REQUIRE(holder >= 0);
        for (int v : bundle) {
            bool found = false;
            for (int u : report.open_classes[holder].members) found = found || u == v;
            CHECK(found);
        }
    }

    Graph isolated(3, {{0, 1}});
    CHECK_THROWS_WITH_AS(build_bundle(isolated, {1, 1, 1}),
                         doctest::Contains("isolated vertex 2"), std::invalid_argument);
    CHECK_THROWS_AS(build_bundle(star_graph(2), {1}), std::invalid_argument);
    CHECK_THROWS_AS(build_bundle(star_graph(2), {1, 0}), std::invalid_argument);
}
