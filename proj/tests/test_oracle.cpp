#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "graphqfi/graph.hpp"
#include "graphqfi/oracle.hpp"
#include "graphqfi/partition.hpp"
#include "graphqfi/qfi.hpp"
#include "graphqfi/stabilizer.hpp"

using namespace graphqfi;
namespace orc = graphqfi::oracle;

TEST_CASE("graph state construction") {
    // single vertex: |+>
    const auto plus = orc::graph_state_vector(Graph(1));
    CHECK(std::abs(plus[0] - std::complex<double>(M_SQRT1_2, 0)) < 1e-12);
    CHECK(std::abs(plus[1] - std::complex<double>(M_SQRT1_2, 0)) < 1e-12);

    // K2: CZ |++>, amplitude pattern (1,1,1,-1)/2
    const auto k2 = orc::graph_state_vector(star_graph(2));
    CHECK(std::abs(k2[3] + 0.5) < 1e-12);
    CHECK(std::abs(k2[0] - 0.5) < 1e-12);

    // every generator fixes the state
    for (const auto& g : {star_graph(4), cycle_graph(5), grid_graph(2, 3)}) {
        const auto psi = orc::graph_state_vector(g);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        for (const auto& gen : generators_from_graph(g).generators())
            CHECK(orc::pauli_expectation(psi, gen) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("stabilizer_state_vector matches the circuit construction") {
    for (const auto& g : {star_graph(3), cycle_graph(4), path_graph(5)}) {
        const auto group = generators_from_graph(g);
        const auto psi = orc::stabilizer_state_vector(group);
        for (const auto& gen : group.generators())
            CHECK(orc::pauli_expectation(psi, gen) == doctest::Approx(1.0).epsilon(1e-10));
        // same state as the CZ circuit up to the fixed global phase
        const auto circuit = orc::graph_state_vector(g);
        CHECK(std::abs(std::abs(circuit.dot(psi)) - 1.0) < 1e-10);
    }
    // a -Z state: |1>
    const StabilizerGroup minus_z({Pauli::from_string("-Z")});
    const auto one = orc::stabilizer_state_vector(minus_z);
    CHECK(std::abs(one[1]) == doctest::Approx(1.0));
}

TEST_CASE("pauli_expectation") {
    const auto psi = orc::graph_state_vector(star_graph(4));
    CHECK(orc::pauli_expectation(psi, Pauli(4)) == doctest::Approx(1.0));
    // X_i on a graph state with nonempty neighborhood averages to zero
    CHECK(orc::pauli_expectation(psi, Pauli::single(4, 2, 'X')) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("qfi_pure") {
    // |0...0>: every qubit contributes 1
    for (int n : {1, 3, 5}) {
        orc::StateVector zero = orc::StateVector::Zero(1 << n);
        zero[0] = 1.0;
        CHECK(orc::qfi_pure(zero) == doctest::Approx(n));
    }
    CHECK(orc::qfi_pure(orc::graph_state_vector(star_graph(10))) == doctest::Approx(82));
    CHECK(orc::qfi_pure(orc::graph_state_vector(path_graph(5))) == doctest::Approx(5));

    orc::StateVector unnormalized = orc::StateVector::Zero(2);
    unnormalized[0] = 2.0;
    CHECK_THROWS_AS(orc::qfi_pure(unnormalized), std::invalid_argument);
}

TEST_CASE("dephasing channel") {
    const auto psi = orc::graph_state_vector(cycle_graph(4));

    // p=0: the pure projector
    const auto rho0 = orc::apply_dephasing(psi, 0.0);
    CHECK((rho0 - orc::density(psi)).cwiseAbs().maxCoeff() < 1e-14);

    for (double p : {0.1, 0.3, 0.5, 0.9}) {
        const auto rho = orc::apply_dephasing(psi, p);
        CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
        CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    }

    // eigenvalues are exactly the flip-pattern weights p^|k| (1-p)^(n-|k|)
    const double p = 0.3;
    const int n = 4;
    Eigen::SelfAdjointEigenSolver<orc::DensityMatrix> es(orc::apply_dephasing(psi, p));
    std::vector<double> expected;
    for (int mask = 0; mask < (1 << n); ++mask)
        expected.push_back(std::pow(p, std::popcount(unsigned(mask))) *
                           std::pow(1 - p, n - std::popcount(unsigned(mask))));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < (1 << n); ++i)
        CHECK(es.eigenvalues()[i] == doctest::Approx(expected[i]).epsilon(1e-9));

    // p = 1/2: maximally mixed over the orbit
    Eigen::SelfAdjointEigenSolver<orc::DensityMatrix> half(orc::apply_dephasing(psi, 0.5));
    CHECK(half.eigenvalues().maxCoeff() == doctest::Approx(1.0 / 16).epsilon(1e-9));
    CHECK(half.eigenvalues().minCoeff() == doctest::Approx(1.0 / 16).epsilon(1e-9));
}

TEST_CASE("partial trace") {
    // K2: either side reduces to I/2
    const auto k2 = orc::density(orc::graph_state_vector(star_graph(2)));
    for (int site : {0, 1}) {
        const auto red = orc::partial_trace(k2, {site});
        CHECK((red - 0.5 * orc::DensityMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
    }

    // product state |0> x |psi>: tracing qubit 0 returns |psi>
    const auto psi = orc::graph_state_vector(star_graph(2));
    orc::StateVector prod = orc::StateVector::Zero(8);
    for (int b = 0; b < 4; ++b) prod[b << 1] = psi[b];  // qubit 0 = |0>
    const auto back = orc::partial_trace(orc::density(prod), {0});
    CHECK((back - orc::density(psi)).cwiseAbs().maxCoeff() < 1e-12);

    // trace is preserved
    const auto rho = orc::density(orc::graph_state_vector(cycle_graph(5)));
    CHECK(orc::partial_trace(rho, {1, 3}).trace().real() == doctest::Approx(1.0));

    CHECK_THROWS_AS(orc::partial_trace(k2, {}), std::invalid_argument);
    CHECK_THROWS_AS(orc::partial_trace(k2, {0, 1}), std::invalid_argument);
}

TEST_CASE("qfi_mixed") {
    // pure state as a density matrix
    const auto star4 = orc::graph_state_vector(star_graph(4));
    CHECK(orc::qfi_mixed(orc::density(star4)) == doctest::Approx(10).epsilon(1e-9));
    CHECK(orc::qfi_mixed(orc::density(star4)) ==
          doctest::Approx(orc::qfi_pure(star4)).epsilon(1e-8));

    // maximally mixed single qubit carries no information
    CHECK(orc::qfi_mixed(0.5 * orc::DensityMatrix::Identity(2, 2)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // path(3) with an end vertex traced out
    const auto p3 = orc::density(orc::graph_state_vector(path_graph(3)));
    CHECK(orc::qfi_mixed(orc::partial_trace(p3, {0})) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(orc::qfi_mixed(orc::partial_trace(p3, {1})) == doctest::Approx(0.0).epsilon(1e-9));

    // invalid inputs
    orc::DensityMatrix bad = orc::DensityMatrix::Identity(2, 2);
    bad(0, 1) = 0.2;
    CHECK_THROWS_AS(orc::qfi_mixed(bad), std::invalid_argument);
    CHECK_THROWS_AS(orc::qfi_mixed(orc::DensityMatrix::Identity(2, 2)),
                    std::invalid_argument);  // trace 2
}

TEST_CASE("twin clifford") {
    // empty set: identity
    const auto psi = orc::graph_state_vector(star_graph(2));
    CHECK((orc::apply_twin_clifford(psi, {}) - psi).norm() < 1e-14);

    // K2 on both vertices: +XX becomes a stabilizer
    const auto rotated = orc::apply_twin_clifford(psi, {0, 1});
    CHECK(orc::pauli_expectation(rotated, Pauli::from_string("XX")) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // complete(4), all vertices: Heisenberg limit
    const auto k4 = orc::apply_twin_clifford(orc::graph_state_vector(complete_graph(4)),
                                             {0, 1, 2, 3});
    CHECK(orc::qfi_pure(k4) == doctest::Approx(16).epsilon(1e-10));

    CHECK_THROWS_AS(orc::apply_twin_clifford(psi, {7}), std::out_of_range);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(orc::graph_state_vector(path_graph(15)), std::domain_error);
    orc::DensityMatrix big = orc::DensityMatrix::Identity(1 << 11, 1 << 11);
    CHECK_THROWS_AS(orc::apply_dephasing(big, 0.1), std::domain_error);
    CHECK_THROWS_AS(orc::qubit_count(3), std::invalid_argument);
}
