// Closed-form labelings: each constructor returns the target graph together
// with its labeling so callers cannot pair a formula with the wrong family
// instance. The expected weight profile of each family is exposed alongside.
#pragma once

#include "distmagic/graph.hpp"

namespace distmagic {

// Parity / threshold helpers used by several label formulas.
int alpha(long long i);           // 0 for even i, 1 for odd i
int beta(long long n, long long i); // 0 for i < n+1, 1 for i >= n+1

struct LabeledGraph {
    Graph graph;
    Labeling labels;
};

// H_{2n,2n+2}: f(v_i) = 2n+2-i for i <= n, i-n above; magic constant 2n^2+3n.
LabeledGraph label_h_even(int n);

// H_{2n+1,2n+3}: f(v_i) = 2n+3-i for i <= n+1, i-(n+1) above; magic 2n^2+5n+3.
LabeledGraph label_h_odd(int n);

// H_{2n,2n+3}: weights form the progression {a, a+1, ...} with a = 2n^2+3n-1.
LabeledGraph label_antimagic_2n_2n3(int n);

// H_{4n+1,4n+4}: progression with a = 8n^2+10n+1, d = 1.
LabeledGraph label_antimagic_4n1_4n4(int n);

// H_{4,n} for n = 3 mod 4, n >= 7: progression with a = (3n+5)/2, d = 1.
// Built in two phases: a modular base labeling with f(v_{n-4}) = n, then a
// flip f(v_i) -> n - f(v_i) on the residue classes i = 0,3 mod 4 (up to
// n-7) and on v_{n-1}. Bijectivity is checked per instance.
LabeledGraph label_antimagic_h4(int n);

// The 20-vertex labeling of cal_g(5) x C_4 with magic constant 70.
LabeledGraph label_direct_c4_5();

} // namespace distmagic
