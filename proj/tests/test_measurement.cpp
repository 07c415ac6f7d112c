#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "graphqfi/graph.hpp"
#include "graphqfi/measurement.hpp"
#include "graphqfi/oracle.hpp"
#include "graphqfi/qfi.hpp"
#include "graphqfi/stabilizer.hpp"

using namespace graphqfi;
namespace orc = graphqfi::oracle;

TEST_CASE("find_yz_stabilizer") {
    CHECK(find_yz_stabilizer(generators_from_graph(star_graph(2)))->str() == "YY");
    CHECK(find_yz_stabilizer(generators_from_graph(star_graph(4)))->str() == "YYZZ");
    CHECK(find_yz_stabilizer(generators_from_graph(bundled_star(2, 2)))->str() == "YZYZ");

    // bundled cycles: multiples of four admit one, six does not
    CHECK(find_yz_stabilizer(generators_from_graph(cycle_graph(4))).has_value());
    CHECK(find_yz_stabilizer(generators_from_graph(bundled_cycle(4, 2))).has_value());
    CHECK_FALSE(find_yz_stabilizer(generators_from_graph(cycle_graph(6))).has_value());
    CHECK_FALSE(find_yz_stabilizer(generators_from_graph(bundled_cycle(6, 2))).has_value());

    // every bundled star admits one
    for (auto [k, j] : {std::pair{2, 3}, {3, 2}, {4, 2}})
        CHECK(find_yz_stabilizer(generators_from_graph(bundled_star(k, j))).has_value());
}

TEST_CASE("yz observables actually stabilize the state") {
    for (const auto& g : {star_graph(4), cycle_graph(4), bundled_star(3, 2)}) {
        const auto obs = find_yz_stabilizer(generators_from_graph(g));
        REQUIRE(obs.has_value());
        CHECK(obs->sign_exponent() == 0);
        const auto psi = orc::graph_state_vector(g);
        CHECK(orc::pauli_expectation(psi, *obs) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("find_pairing_stabilizer") {
    // path(3): singleton-constrained classes make g_1 = ZXZ qualify; the
    // lexicographic winner is IZX
    const auto s = find_pairing_stabilizer(path_graph(3));
    REQUIRE(s.has_value());
    CHECK(s->str() == "IZX");
    const auto all = pairing_candidates(path_graph(3));
    bool has_zxz = false;
    for (const auto& c : all) has_zxz = has_zxz || c.str() == "ZXZ";
    CHECK(has_zxz);

    // K2: identity qualifies degenerately but non-identity wins
    const auto k2 = find_pairing_stabilizer(star_graph(2));
    REQUIRE(k2.has_value());
    CHECK_FALSE(k2->is_identity());
    CHECK(k2->str() == "XZ");
}

TEST_CASE("extend_graph_plus") {
    const Graph p3 = path_graph(3);
    const auto [plus, obs] = extend_graph_plus(p3, Pauli::from_string("ZXZ"));
    CHECK(plus.size() == 4);
    CHECK(plus.has_edge(1, 3));  // C_S = {1}
    CHECK(plus.degree(3) == 1);
    CHECK(obs.str() == "ZYZY");
    CHECK(generators_from_graph(plus).contains(obs));
    // letters Y/Z on the original qubits
    for (int q = 0; q < 3; ++q) CHECK(obs.z_mask().test(q));

    // QFI never drops under the extension
    CHECK(qfi_graph(plus).value >= qfi_graph(p3).value);

    // X_iX_j preservation: the open twins {0,2} of path(3) stay twins in G+
    CHECK(generators_from_graph(plus).contains(Pauli::from_string("XIXI")));

    // a Y/Z-only stabilizer has empty C_S and cannot be extended
    CHECK_THROWS_WITH_AS(extend_graph_plus(p3, Pauli::from_string("YYZ")),
                         doctest::Contains("C_S is empty"), std::invalid_argument);
    // non-members are rejected
    CHECK_THROWS_AS(extend_graph_plus(p3, Pauli::from_string("XXX")), std::invalid_argument);
    // pairing violations are rejected: ZZY splits the class {0,2}... build one
    CHECK_THROWS_AS(extend_graph_plus(cycle_graph(4), Pauli::from_string("XZIZ")),
                    std::invalid_argument);
}

TEST_CASE("extension soundness over pairing candidates") {
    for (const auto& g : {path_graph(3), path_graph(4), grid_graph(2, 2)}) {
        int tried = 0;
        for (const auto& s : pairing_candidates(g)) {
            if (s.z_mask() == BitVec::ones(g.size())) continue;  // Y/Z-only
            const auto [plus, obs] = extend_graph_plus(g, s);
            CHECK(qfi_graph(plus).value >= qfi_graph(g).value);
            if (++tried == 6) break;
        }
        CHECK(tried > 0);
    }
}

TEST_CASE("make_measurement_plan") {
    // direct plan when a Y/Z stabilizer exists
    const auto direct = make_measurement_plan(star_graph(4));
    CHECK_FALSE(direct.extended);
    CHECK(direct.observable.str() == "YYZZ");
    CHECK(direct.active_qubits() == std::vector<int>{0, 1, 2, 3});

    // forced fallback on path(3)
    const auto fallback = make_measurement_plan(path_graph(3), true);
    CHECK(fallback.extended);
    CHECK(fallback.graph.size() == 4);
    CHECK(fallback.observable.sign_exponent() == 0);
    CHECK(fallback.active_qubits() == std::vector<int>{0, 1, 2});
    // Y/Z letters everywhere on the original qubits
    for (int q = 0; q < 3; ++q) CHECK(fallback.observable.z_mask().test(q));

    // cycle(6) has no Y/Z stabilizer, so the automatic plan extends
    const auto c6 = make_measurement_plan(cycle_graph(6));
    CHECK(c6.extended);
    CHECK(c6.graph.size() == 7);
    CHECK(orc::pauli_expectation(orc::graph_state_vector(c6.graph), c6.observable) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("expectation curves") {
    const auto plan = make_measurement_plan(star_graph(4));
    const auto at_zero = expectation_curve(plan, {0.0}).front();
    CHECK(at_zero == doctest::Approx(1.0).epsilon(1e-12));

    // parabolic small-theta behavior, even in theta
    const double q = qfi_graph(star_graph(4)).value;
    for (double theta : {0.005, 0.01, 0.02}) {
        const auto pair = expectation_curve(plan, {-theta, theta});
        CHECK(pair[0] == doctest::Approx(pair[1]).epsilon(1e-12));
        CHECK(pair[1] == doctest::Approx(1 - theta * theta * q / 2).epsilon(1e-6));
    }
}

TEST_CASE("anticommutation pushes the phase through Y/Z observables") {
    // S U_theta == U_{-theta} S for an all-Y/Z Pauli S
    const Graph g = cycle_graph(4);
    const auto psi = orc::graph_state_vector(g);
    const auto s = *find_yz_stabilizer(generators_from_graph(g));
    for (double theta : {0.3, 1.1}) {
        const auto left = orc::apply_pauli(s, orc::apply_phase_encoding(psi, theta));
        const auto right = orc::apply_phase_encoding(orc::apply_pauli(s, psi), -theta);
        CHECK((left - right).norm() < 1e-10);
    }
}

TEST_CASE("precision curves approach 1/Q") {
    struct Case {
        MeasurementPlan plan;
        double q;
    };
    const Case cases[] = {
        {make_measurement_plan(star_graph(4)), qfi_graph(star_graph(4)).value},
        {make_measurement_plan(star_graph(2)), qfi_graph(star_graph(2)).value},
        {make_measurement_plan(bundled_star(2, 2)), qfi_graph(bundled_star(2, 2)).value},
        {make_measurement_plan(path_graph(3), true), qfi_graph(path_graph(3)).value},
    };
    for (const auto& c : cases) {
        const double var = precision_curve(c.plan, {0.01}).front();
        CHECK(var * c.q == doctest::Approx(1.0).epsilon(0.01));
    }

    // binary-outcome information never beats the QFI and converges to it
    for (const auto& c : cases) {
        for (double theta : {0.01, 0.05, 0.1, 0.3}) {
            const double var = precision_curve(c.plan, {theta}).front();
            CHECK(1.0 / var <= c.q * (1 + 1e-9));
        }
    }

    CHECK_THROWS_WITH_AS(precision_curve(cases[0].plan, {0.0}),
                         doctest::Contains("uninformative"), std::domain_error);
}
