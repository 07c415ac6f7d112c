#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "graphqfi/stabilizer.hpp"

namespace graphqfi {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr int kCensusMaxQubits = 3;

BigCount binomial_exact(int n, int k);

// Number of n-qubit stabilizer states: N_n = 2^n prod_{k=1}^{n} (2^k + 1).
BigCount stabilizer_state_count(int n);

struct MetrologyBound {
    BigCount full;    // sum_{j=k}^{n} C(n-1, j-1) 2^j N_{n-j}
    BigCount simple;  // the j = k term alone
    int k = 0;        // ceil(n^{1 - eps/2})
};

// Lower bounds on the number of n-qubit stabilizer states with QFI at least
// n^{2-eps}; needs n >= 2 and 0 < eps <= 2.
MetrologyBound metrology_bound(int n, double epsilon);

struct CensusResult {
    long total = 0;     // distinct stabilizer states enumerated
    long at_least = 0;  // those with oracle QFI >= threshold
};

// Exhaustive enumeration of all n-qubit stabilizer states (canonical
// generator matrices in reduced echelon form, one per symplectic subspace,
// times all sign assignments), each scored by the dense oracle. n <= 3.
CensusResult empirical_census(int n, double threshold);

// The generator set <X_0 X_1, ..., X_0 X_{k-1}, P, P g_1, ..., P g_{n-k}>
// with P all-Y on the first k qubits and g_i the generators of a path state
// on the remaining qubits. Carries no +-X_i / -X_i X_j forms and has QFI
// n + k(k-1) >= k^2.
StabilizerGroup high_qfi_stabilizer_group(int n, int k);

// "1.080e+03"-style approximation of an exact count.
std::string approx_scientific(const BigCount& value);

}  // namespace graphqfi
