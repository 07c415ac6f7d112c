#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphqfi/graph.hpp"
#include "graphqfi/pauli.hpp"
#include "graphqfi/stabilizer.hpp"

namespace graphqfi {

// Fixed local measurement: a +1-sign stabilizer observable whose letters are
// Y/Z on every phase-carrying qubit. For extended plans the graph is G+ (one
// helper vertex appended) and the phase acts on the original qubits only.
struct MeasurementPlan {
    Graph graph;
    Pauli observable;
    bool extended = false;
    double theta_max = 0.1;  // small-phase operating range

    // Qubits carrying the phase encoding.
    std::vector<int> active_qubits() const;
};

// Lexicographically smallest +1-sign group element made of Y/Z letters only,
// found by full group enumeration (n <= 24).
std::optional<Pauli> find_yz_stabilizer(const StabilizerGroup& s);

// All +1-sign elements S where every open class carries letters entirely in
// {Y, Z} or entirely in {X, I}; lexicographic order, identity last.
std::vector<Pauli> pairing_candidates(const Graph& g);

// First pairing candidate (prefers non-identity).
std::optional<Pauli> find_pairing_stabilizer(const Graph& g);

// Appends vertex n adjacent to C_S = {q : letter of s in {X, I}} and returns
// (G+, S_M~) where S_M~ is the group element g_{n+1} * image(s) of the
// extended graph: Y/Z letters on 0..n-1, X or Y on the new vertex. The
// returned sign can be -1; plan construction skips such candidates.
std::pair<Graph, Pauli> extend_graph_plus(const Graph& g, const Pauli& s);

// Direct Y/Z plan when one exists, otherwise the G+ fallback. Set
// force_extended to exercise the fallback even when a Y/Z stabilizer exists.
MeasurementPlan make_measurement_plan(const Graph& g, bool force_extended = false);

// <S_M>(theta) after exp(-i theta/2 sum_{active} X).
std::vector<double> expectation_curve(const MeasurementPlan& plan,
                                      const std::vector<double>& thetas);

// Error-propagation variance (1 - <S>^2)/|d<S>/dtheta|^2, derivative by
// central difference with step 1e-5. Rejects operating points where the
// derivative vanishes.
std::vector<double> precision_curve(const MeasurementPlan& plan,
                                    const std::vector<double>& thetas);

}  // namespace graphqfi
