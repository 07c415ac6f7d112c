#pragma once

#include <Eigen/Dense>
#include <vector>

#include "graphqfi/graph.hpp"
#include "graphqfi/pauli.hpp"
#include "graphqfi/stabilizer.hpp"

// Dense brute-force engine: ground truth for every closed-form expression in
// the library. Qubit q is bit q of the computational-basis index.
namespace graphqfi::oracle {

using StateVector = Eigen::VectorXcd;
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr int kStateVectorMaxQubits = 14;
inline constexpr int kDensityMaxQubits = 10;

// Number of qubits for a dimension 2^n; throws unless dim is a power of two.
int qubit_count(Eigen::Index dim);

// |G> built by preparing |+>^n and applying CZ per edge.
StateVector graph_state_vector(const Graph& g);

// Unique +1 eigenstate via the projector product prod_i (I + g_i)/2; the
// global phase is fixed by making the first nonzero amplitude positive real.
StateVector stabilizer_state_vector(const StabilizerGroup& s);

// P|psi>.
StateVector apply_pauli(const Pauli& p, const StateVector& psi);

// <psi|P|psi>, real part (exact for Hermitian P).
double pauli_expectation(const StateVector& psi, const Pauli& p);

// exp(-i theta/2 sum_{q in active} X_q) |psi>.
StateVector apply_phase_encoding(const StateVector& psi, double theta,
                                 const std::vector<int>& active);
StateVector apply_phase_encoding(const StateVector& psi, double theta);

// diag(1, i) on each listed qubit: X -> Y, Y -> -X, Z -> Z. Applied to all
// members of closed-twin classes it turns Y_iY_j stabilizers into +X_iX_j.
StateVector apply_twin_clifford(const StateVector& psi, const std::vector<int>& vertices);

// 4 Var(H) with H = 1/2 sum_{q in active} X_q.
double qfi_pure(const StateVector& psi, const std::vector<int>& active);
double qfi_pure(const StateVector& psi);

DensityMatrix density(const StateVector& psi);

// iid phase flips with probability p on every qubit; off-diagonal element
// (a, b) is damped by (1-2p)^{popcount(a xor b)}, the exact closed form of
// the Kraus mixture over all flip patterns.
DensityMatrix apply_dephasing(const DensityMatrix& rho, double p);
DensityMatrix apply_dephasing(const StateVector& psi, double p);

// Full dephasing (p = 1/2 per listed qubit): mixes over all Z patterns
// supported on `sites`. This is the erasure model behind the closed-form
// h_l expression, kept distinct from the literal partial trace.
DensityMatrix apply_full_dephasing_on(const DensityMatrix& rho, const std::vector<int>& sites);

// Reduced state after tracing out `sites`; surviving qubits keep their
// relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& sites);

// Eq.-(2)-style spectral QFI: eigendecompose rho, sum
// 2 (l_j - l_k)^2 / (l_j + l_k) |<j|H|k>|^2 over pairs with l_j + l_k > 1e-10,
// H = 1/2 sum_{q in active} X_q. Every call self-checks the decomposition
// (reconstruction 1e-9, orthonormality 1e-10) and the density-matrix
// invariants (Hermitian, unit trace, eigenvalues >= -1e-10).
double qfi_mixed(const DensityMatrix& rho, const std::vector<int>& active);
double qfi_mixed(const DensityMatrix& rho);

}  // namespace graphqfi::oracle
