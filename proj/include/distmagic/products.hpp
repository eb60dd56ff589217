// Graph join and the two products used for the C_4 constructions. Product
// vertices (j,i) are laid out block-by-block as j*|V(h)| + i, so block A_j
// of a C_4 product occupies indices 4j..4j+3.
#pragma once

#include "distmagic/graph.hpp"

namespace distmagic {

constexpr int block_index(int j, int i, int h_order) { return j * h_order + i; }

// Disjoint union of g (vertices first) and h, plus all cross edges.
Graph join(const Graph& g, const Graph& h);

// (j,i) ~ (k,l) iff j~k in g, or j=k and i~l in h.
Graph lexicographic(const Graph& g, const Graph& h);

// (j,i) ~ (k,l) iff j~k in g and i~l in h.
Graph direct_product(const Graph& g, const Graph& h);

} // namespace distmagic
