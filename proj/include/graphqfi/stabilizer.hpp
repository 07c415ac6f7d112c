#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "graphqfi/graph.hpp"
#include "graphqfi/pauli.hpp"

namespace graphqfi {

// Full group enumeration is gated to keep runs desk-scale.
inline constexpr int kGroupEnumerationMaxQubits = 24;

// Stabilizer group of an n-qubit state, held as n independent, pairwise
// commuting Hermitian generators. A GF(2) echelon form of the generators'
// symplectic vectors supports membership solves without enumeration.
class StabilizerGroup {
public:
    explicit StabilizerGroup(std::vector<Pauli> generators);

    int qubits() const { return n_; }
    const std::vector<Pauli>& generators() const { return gens_; }

    // The unique group element with the given masks, or nullopt when the
    // masks are outside the generated symplectic span. Sign comes out exact.
    std::optional<Pauli> element_with_masks(const BitVec& x, const BitVec& z) const;

    // Membership including the sign.
    bool contains(const Pauli& p) const;

    // Generator-subset exponents reproducing the given masks.
    std::optional<BitVec> solve_combination(const BitVec& x, const BitVec& z) const;

    // Product of generators selected by `combo`, with exact phase.
    Pauli product_of(const BitVec& combo) const;

    // Streams all 2^n elements in Gray-code order starting at identity.
    void for_each_element(const std::function<void(const Pauli&)>& fn) const;

    // Materialized enumeration; prefer for_each_element for large n.
    std::vector<Pauli> elements() const;

private:
    int n_ = 0;
    std::vector<Pauli> gens_;
    // Row-echelon form over GF(2) of generator symplectic vectors [x|z],
    // with the generator combination that produced each row.
    std::vector<BitVec> rows_;
    std::vector<BitVec> row_combo_;
    std::vector<int> pivot_;
};

// Graph-state generators: g_i = X_i Z_{N(i)}, sign +1.
StabilizerGroup generators_from_graph(const Graph& g);

struct XFormReport {
    long count_xixj = 0;          // unordered pairs i<j with +X_i X_j in the group
    bool has_bad_form = false;    // some +-X_i or -X_i X_j present
    std::optional<Pauli> bad_witness;
};

// Polynomial-time scan over single sites and pairs via membership solves.
XFormReport classify_x_forms(const StabilizerGroup& s);

}  // namespace graphqfi
