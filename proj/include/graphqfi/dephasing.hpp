#pragma once

#include "graphqfi/graph.hpp"
#include "graphqfi/qfi.hpp"

namespace graphqfi {

// Class-size factor f(v, p) = v^2 (1-2p)^2 + 4 v p (1-p).
double dephasing_f(int v, double p);

// Neighborhood factor: the exact binomial sum
//   g(N, p) = sum_j C(N,j) (r_j - s_j)^2 / (r_j + s_j),
//   r_j = p^{N-j}(1-p)^j, s_j = p^j(1-p)^{N-j},
// with vanishing denominators treated as removable (g = 2 at p in {0,1}).
double dephasing_g(int big_n, double p);

// 2 - 2 (2p(1-p) + 1/2)^N <= g(N, p).
double g_lower_bound(int big_n, double p);

// Exact closed form 1/2 sum_l f(v_l, p) g(N_l, p) over open classes.
QfiValue qfi_dephasing_exact(const Graph& g, double p);

// Large-neighborhood approximation (1-2p)^2 Q(G) + 4 n p (1-p).
QfiValue qfi_dephasing_approx(const Graph& g, double p);

}  // namespace graphqfi
