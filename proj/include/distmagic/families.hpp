// Constructors for the named graph families, all under one fixed vertex
// ordering v_0..v_{n-1} so that structural identities between families can
// be tested as plain edge-set equality.
#pragma once

#include "distmagic/graph.hpp"

namespace distmagic {

// Harary graph H_{m,n}: m-connected, n vertices, ceil(mn/2) edges.
// Three parity cases:
//   m even          : i ~ j iff cyclic distance <= m/2
//   m odd, n even   : H_{m-1,n} plus the antipodal matching {i, i+n/2}
//   m odd, n odd    : H_{m-1,n} plus {0,(n-1)/2}, {0,(n+1)/2} and
//                     {i, i+(n+1)/2} for 1 <= i < (n-1)/2
// Requires 2 <= m < n.
Graph harary(int m, int n);

// m-th power of the cycle C_n: i ~ j iff cyclic distance <= m. K_n once
// m >= floor(n/2). Requires n >= 3, m >= 1.
Graph cycle_power(int n, int m);

Graph complete(int n);

// K_n minus the perfect matching {i, i+n/2}; n must be even.
Graph complete_minus_matching(int n);

Graph empty_graph(int n);

// (K_{n-1} - M) + K_1 for odd n: v_0 universal, v_i ~ v_j for
// 1 <= i,j <= n-1 except the matched pairs {i, i+(n-1)/2}.
Graph cal_g(int n);

} // namespace distmagic
