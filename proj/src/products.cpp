#include "distmagic/products.hpp"

namespace distmagic {

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order();
    const int nh = h.order();
    Graph out(ng + nh);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    return out;
}

Graph lexicographic(const Graph& g, const Graph& h) {
    const int nh = h.order();
    Graph out(g.order() * nh);
    for (auto [j, k] : g.edges())
        for (int i = 0; i < nh; ++i)
            for (int l = 0; l < nh; ++l)
                out.add_edge(block_index(j, i, nh), block_index(k, l, nh));
    for (int j = 0; j < g.order(); ++j)
        for (auto [i, l] : h.edges())
            out.add_edge(block_index(j, i, nh), block_index(j, l, nh));
    return out;
}

Graph direct_product(const Graph& g, const Graph& h) {
    const int nh = h.order();
    Graph out(g.order() * nh);
    for (auto [j, k] : g.edges())
        for (auto [i, l] : h.edges()) {
            out.add_edge(block_index(j, i, nh), block_index(k, l, nh));
            out.add_edge(block_index(j, l, nh), block_index(k, i, nh));
        }
    return out;
}

} // namespace distmagic
