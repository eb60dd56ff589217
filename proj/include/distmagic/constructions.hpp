// Graph surgery: subgraph replacement by an independent set, the two magic-
// preserving replacement constructions built on it, the +K1 extension for
// antimagic labelings, and the tournament-schedule export.
#pragma once

#include "distmagic/graph.hpp"
#include "distmagic/labelings.hpp"

#include <span>
#include <vector>

namespace distmagic {

// Remove every edge inside s, append k new mutually non-adjacent vertices,
// and join each of them to all of s.
Graph replace_subgraph(const Graph& g, std::span<const int> s, int k);

// g must be |s|-regular (= 2n) and distance magic under f, the subgraph
// induced on s must be K_{2n} minus a perfect matching, and each matched
// twin pair must have label sum |V(g)|+1. Replaces s's edges by 2n-2 new
// vertices and relabels; the result is 2n-regular with magic constant
// 2n^2 + mn - n (m = |V(g)|). Verified before returning.
LabeledGraph dagger_even(const Graph& g, const Labeling& f, std::span<const int> s);

// dagger_even applied to label_h_even(n) with the canonical choice
// s = V minus the twin pair {v_0, v_{n+1}}.
LabeledGraph dagger_even_canonical(int n);

// Starts from label_h_odd(n), replaces everything but the universal vertex
// v_0 by 2n new vertices, and relabels. Non-regular, order 4n+3, magic
// constant 4n^2 + 7n + 3. Verified before returning.
LabeledGraph dagger_odd(int n);

// g must be (n-k)-regular on n vertices with 2 <= k <= (1+sqrt(8n-7))/2 and
// f an (a, k-2)-progression labeling with a = (n^2 - 2kn + 3n - 2)/2 (for
// k = 2 that means distance magic). Joins one new vertex labeled n+1; the
// result is an (a+n+1, k-2)-progression labeling. Verified before returning.
LabeledGraph plus_k1_extension(const Graph& g, const Labeling& f);

// Equalized incomplete tournament: teams named by label, each playing its
// labeled neighbors; requires a regular distance magic input.
struct EitSchedule {
    int teams = 0;
    int rounds = 0;          // regularity r
    long long strength = 0;  // common opponent-strength
    std::vector<std::vector<int>> opponents; // opponents[t] = foes of team t+1
};

EitSchedule eit_export(const Graph& g, const Labeling& f);

} // namespace distmagic
