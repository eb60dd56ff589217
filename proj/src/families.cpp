#include "distmagic/families.hpp"

#include <stdexcept>
#include <string>

namespace distmagic {

namespace {

void add_circulant_band(Graph& g, int n, int half) {
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= half; ++k) g.add_edge(i, (i + k) % n);
}

} // namespace

Graph harary(int m, int n) {
    if (m < 2 || m >= n)
        throw std::invalid_argument("harary: requires 2 <= m < n, got m=" +
                                    std::to_string(m) + " n=" + std::to_string(n));
    Graph g(n);
    if (m % 2 == 0) {
        add_circulant_band(g, n, m / 2);
    } else if (n % 2 == 0) {
        add_circulant_band(g, n, (m - 1) / 2);
        for (int i = 1; i <= n / 2; ++i) g.add_edge(i, (i + n / 2) % n);
    } else {
        add_circulant_band(g, n, (m - 1) / 2);
        g.add_edge(0, (n - 1) / 2);
        g.add_edge(0, (n + 1) / 2);
        for (int i = 1; i < (n - 1) / 2; ++i) g.add_edge(i, i + (n + 1) / 2);
    }
    return g;
}

Graph cycle_power(int n, int m) {
    if (n < 3) throw std::invalid_argument("cycle_power: requires n >= 3");
    if (m < 1) throw std::invalid_argument("cycle_power: requires m >= 1");
    Graph g(n);
    add_circulant_band(g, n, std::min(m, n / 2));
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_minus_matching(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("complete_minus_matching: order must be even, got " +
                                    std::to_string(n));
    Graph g = complete(n);
    for (int i = 0; i < n / 2; ++i) g.remove_edge(i, i + n / 2);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cal_g(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("cal_g: order must be odd and >= 3, got " +
                                    std::to_string(n));
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    const int half = (n - 1) / 2;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i != half) g.add_edge(i, j);
    return g;
}

} // namespace distmagic
