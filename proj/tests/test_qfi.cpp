#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "graphqfi/graph.hpp"
#include "graphqfi/partition.hpp"
#include "graphqfi/qfi.hpp"
#include "graphqfi/stabilizer.hpp"

using namespace graphqfi;

TEST_CASE("qfi_graph on the named families") {
    CHECK(qfi_graph(star_graph(10)).value == 82);
    CHECK(qfi_graph(path_graph(5)).value == 5);
    CHECK(qfi_graph(bundled_cycle(5, 4)).value == 80);  // n^2/k at n=20
    CHECK(qfi_graph(build_bundle(cycle_graph(3), {3, 4, 3}).graph).value == 34);
    CHECK(qfi_graph(star_graph(10)).method == "graph");

    // k=4 bundles merge pairwise: n^2/2, not n^2/4
    CHECK(qfi_graph(bundled_cycle(4, 3)).value == 72);

    Graph lonely(3, {{0, 1}});
    CHECK_THROWS_WITH_AS(qfi_graph(lonely), doctest::Contains("isolated vertex 2"),
                         IsolatedVertexError);
}

TEST_CASE("qfi_graph_lc") {
    CHECK(qfi_graph_lc(complete_graph(6)).value == 36);
    CHECK(qfi_graph_lc(star_graph(10)).value == 82);
    CHECK(qfi_graph_lc(star_graph(2)).value == 4);  // K2 = complete(2)

    // boost is never a loss, and vanishes without closed twins
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        const Graph g(n, edges);
        if (g.first_isolated()) continue;
        const double base = qfi_graph(g).value;
        const double boosted = qfi_graph_lc(g).value;
        CHECK(boosted >= base);
        bool has_closed_twin = false;
        for (const auto& cls : partition(g).closed_classes)
            if (cls.size() >= 2) has_closed_twin = true;
        if (!has_closed_twin) CHECK(boosted == base);
    }
}

TEST_CASE("qfi_stabilizer") {
    CHECK(qfi_stabilizer(generators_from_graph(star_graph(10))).value == 82);
    CHECK(qfi_stabilizer(generators_from_graph(star_graph(2))).value == 2);

    // X_0X_1, X_0X_2, YYY construction: 3 + 2*3 = 9
    const StabilizerGroup appendix({Pauli::from_string("XXI"), Pauli::from_string("XIX"),
                                    Pauli::from_string("YYY")});
    CHECK(qfi_stabilizer(appendix).value == 9);

    // bad form carries its witness
    try {
        qfi_stabilizer(StabilizerGroup({Pauli::from_string("XI"), Pauli::from_string("IZ")}));
        FAIL("expected BadXFormError");
    } catch (const BadXFormError& e) {
        CHECK(e.witness.str() == "XI");
    }
}

TEST_CASE("qfi_stabilizer agrees with qfi_graph on graph groups") {
    std::mt19937_64 rng(6);
    int tested = 0;
    while (tested < 60) {
        const int n = 2 + static_cast<int>(rng() % 6);  // n <= 7
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        const Graph g(n, edges);
        if (g.first_isolated()) continue;
        ++tested;
        CHECK(qfi_stabilizer(generators_from_graph(g)).value == qfi_graph(g).value);
    }
}

TEST_CASE("bundle_bound") {
    CHECK(bundle_bound(10, 3) == doctest::Approx(100.0 / 3.0));
    CHECK(bundle_bound(7, 7) == 7);    // unbundled limit: SQL
    CHECK(bundle_bound(9, 1) == 81);   // single bundle: Heisenberg limit
    CHECK_THROWS_AS(bundle_bound(5, 0), std::domain_error);
    CHECK_THROWS_AS(bundle_bound(5, 6), std::domain_error);

    // the bound really lower-bounds the partition value for uniform bundles
    for (int k : {2, 3, 5, 6})
        for (int j : {1, 2, 3}) {
            const double q = qfi_graph(bundled_star(k, j)).value;
            CHECK(q >= bundle_bound(k * j, k) - 1e-9);
        }
}
