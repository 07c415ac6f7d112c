#pragma once

#include <vector>

#include "graphqfi/bitvec.hpp"
#include "graphqfi/graph.hpp"
#include "graphqfi/qfi.hpp"

namespace graphqfi {

// Exact-average enumeration is gated at C(n, e) subsets.
inline constexpr long long kErasureEnumerationGuard = 2'000'000;

// Identified lost qubits y_1..y_e.
struct ErasurePattern {
    std::vector<int> sites;  // distinct, sorted on construction

    explicit ErasurePattern(std::vector<int> s);
    int count() const { return static_cast<int>(sites.size()); }
};

// L_y: the lost qubits together with all of their neighborhoods.
BitVec erasure_light_cone(const Graph& g, const ErasurePattern& pat);

// Per-pattern closed form: each open class contributes
//   v^2  when neither its neighborhood nor the class is inside L_y,
//   v    when only the class is inside L_y,
//   0    when the neighborhood is inside L_y.
// This evaluates the QFI of the fully-L_y-dephased n-qubit state with the
// full generator, which lower-bounds (and does not always equal) the
// partial-trace value.
QfiValue qfi_erasure_pattern(const Graph& g, const ErasurePattern& pat);

// Mean of qfi_erasure_pattern over all C(n, e) erasure subsets.
double qfi_erasure_average_exact(const Graph& g, int e);

// Closed-form single-erasure average
//   sum_l v_l^2 (n - v_l - N_l)/n + sum_l v_l N_l / n;
// overcounts whenever one light cone already covers a class neighborhood
// (e.g. path(3): 4/3 against the exact 2/3).
double qfi_erasure_single_avg_formula(const Graph& g);

// Bundled star, k bundles of j = n/k, e erasures:
//   [C(n-j, e) j + C(j, e) (n-j)] / C(n, e),
// binomials vanishing when the upper index is exceeded. Exact for
// e < min(j, n-j); at e = j or e = n-j it misses the fully-erased-bundle
// patterns and overcounts.
double qfi_erasure_star_formula(int n, int k, int e);

// Bundled cycle, k >= 5 bundles of j = n/k, 1 <= e < 2j (as printed, with
// vanishing binomials); diverges from the exact average once e > j.
double qfi_erasure_cyclic_formula(int n, int k, int e);

}  // namespace graphqfi
