#pragma once

#include <stdexcept>
#include <string>

#include "graphqfi/graph.hpp"
#include "graphqfi/pauli.hpp"
#include "graphqfi/stabilizer.hpp"

namespace graphqfi {

// QFI under the phase encoding exp(-i theta/2 sum_j X_j), tagged with the
// formula that produced it.
struct QfiValue {
    double value = 0.0;
    std::string method;
};

struct IsolatedVertexError : std::domain_error {
    explicit IsolatedVertexError(int v)
        : std::domain_error("graph has isolated vertex " + std::to_string(v)), vertex(v) {}
    int vertex;
};

struct BadXFormError : std::domain_error {
    explicit BadXFormError(Pauli w)
        : std::domain_error("stabilizer group contains " + w.str() +
                            "; X-pair counting formula does not apply"),
          witness(std::move(w)) {}
    Pauli witness;
};

inline void require_no_isolated(const Graph& g) {
    if (auto v = g.first_isolated()) throw IsolatedVertexError(*v);
}

// Sum of squared open-class sizes.
QfiValue qfi_graph(const Graph& g);

// Local-Clifford boosted value: open-class squares plus closed-class squares
// minus n (open and closed classes overlap only on singletons).
QfiValue qfi_graph_lc(const Graph& g);

// n plus the number of ordered pairs i != j with +X_i X_j in the group.
// Throws BadXFormError when a +-X_i or -X_i X_j stabilizer is present.
QfiValue qfi_stabilizer(const StabilizerGroup& s);

// Lower bound n^2/k for an n-qubit state in k bundles.
double bundle_bound(int n, int k);

}  // namespace graphqfi
