#include "distmagic/constructions.hpp"

#include "distmagic/families.hpp"
#include "distmagic/products.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace distmagic {

Graph replace_subgraph(const Graph& g, std::span<const int> s, int k) {
    if (k < 1) throw std::invalid_argument("replace_subgraph: requires k >= 1");
    const int m = g.order();
    std::vector<char> in_s(m, 0);
    for (int v : s) {
        if (v < 0 || v >= m) throw std::out_of_range("replace_subgraph: vertex out of range");
        in_s[v] = 1;
    }
    Graph out(m + k);
    for (auto [u, v] : g.edges())
        if (!in_s[u] || !in_s[v]) out.add_edge(u, v);
    for (int j = 0; j < k; ++j)
        for (int v : s) out.add_edge(m + j, v);
    return out;
}

namespace {

// Twin pairs of s under the induced subgraph, required to be the matched
// (non-adjacent) pairs of a K_{2n}-minus-matching pattern.
std::vector<std::pair<int, int>> matching_pairs_of(const Graph& g, std::span<const int> s) {
    const int size = static_cast<int>(s.size());
    Graph ind = induced_subgraph(g, s);
    for (int i = 0; i < size; ++i)
        if (ind.degree(i) != size - 2)
            throw std::invalid_argument(
                "dagger_even: induced subgraph is not complete-minus-matching "
                "(vertex " + std::to_string(s[i]) + " has induced degree " +
                std::to_string(ind.degree(i)) + ", want " + std::to_string(size - 2) + ")");
    auto twins = find_twin_pairs(ind);
    if (static_cast<int>(twins.size()) != size / 2)
        throw std::invalid_argument("dagger_even: twin pairs do not partition the subgraph");
    std::vector<std::pair<int, int>> out;
    out.reserve(twins.size());
    for (auto [i, j] : twins) out.emplace_back(s[i], s[j]);
    return out;
}

} // namespace

LabeledGraph dagger_even(const Graph& g, const Labeling& f, std::span<const int> s) {
    require_valid_labeling(g, f);
    const int m = g.order();
    const int size = static_cast<int>(s.size());
    if (size < 4 || size % 2 != 0)
        throw std::invalid_argument("dagger_even: |s| must be even and >= 4");
    const int n = size / 2;

    const auto r = is_regular(g);
    if (!r || *r != size)
        throw std::invalid_argument("dagger_even: graph must be " + std::to_string(size) +
                                    "-regular");
    if (classify(g, f).kind != WeightProfile::Kind::Magic)
        throw std::invalid_argument("dagger_even: input labeling is not distance magic");

    for (auto [u, v] : matching_pairs_of(g, s))
        if (f[u] + f[v] != m + 1)
            throw std::invalid_argument("dagger_even: twin pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") has label sum " +
                                        std::to_string(f[u] + f[v]) + ", want " +
                                        std::to_string(m + 1));

    Graph out = replace_subgraph(g, s, 2 * n - 2);
    Labeling fd(m + 2 * n - 2);
    for (int x = 0; x < m; ++x) fd[x] = n + f[x] - 1;
    for (int j = 0; j <= 2 * n - 3; ++j) fd[m + j] = m * beta(n - 2, j) + j + 1;

    const long long want = 2LL * n * n + static_cast<long long>(m) * n - n;
    if (!classify(out, fd).is_magic(want) || is_regular(out) != 2 * n)
        throw std::logic_error("dagger_even: constructed labeling failed verification");
    return {std::move(out), std::move(fd)};
}

LabeledGraph dagger_even_canonical(int n) {
    if (n < 2) throw std::invalid_argument("dagger_even_canonical: requires n >= 2");
    auto [g, f] = label_h_even(n);
    std::vector<int> s;
    for (int v = 0; v < g.order(); ++v)
        if (v != 0 && v != n + 1) s.push_back(v);
    return dagger_even(g, f, s);
}

LabeledGraph dagger_odd(int n) {
    if (n < 1) throw std::invalid_argument("dagger_odd: requires n >= 1");
    auto [g, f] = label_h_odd(n);

    std::vector<int> s(2 * n + 2);
    std::iota(s.begin(), s.end(), 1); // everything but the universal v_0
    Graph out = replace_subgraph(g, s, 2 * n);

    const int m = 2 * n + 3;
    Labeling fd(m + 2 * n);
    for (int i = 0; i <= 2 * n + 2; ++i) fd[i] = 2 * n + f[i] - n * beta(0, i);
    for (int j = 0; j <= 2 * n - 1; ++j) fd[m + j] = (f[0] - 1) * beta(n - 1, j) + j + 1;

    const long long want = 4LL * n * n + 7LL * n + 3;
    if (!classify(out, fd).is_magic(want))
        throw std::logic_error("dagger_odd: constructed labeling failed verification");
    return {std::move(out), std::move(fd)};
}

LabeledGraph plus_k1_extension(const Graph& g, const Labeling& f) {
    require_valid_labeling(g, f);
    const int n = g.order();
    const auto r = is_regular(g);
    if (!r) throw std::invalid_argument("plus_k1_extension: graph must be regular");
    const int k = n - *r;
    if (k < 2 || (2LL * k - 1) * (2LL * k - 1) > 8LL * n - 7)
        throw std::invalid_argument("plus_k1_extension: k = n - r = " + std::to_string(k) +
                                    " outside 2 <= k <= (1+sqrt(8n-7))/2");

    const long long want_a = (static_cast<long long>(n) * n - 2LL * k * n + 3LL * n - 2) / 2;
    if ((static_cast<long long>(n) * n - 2LL * k * n + 3LL * n - 2) % 2 != 0)
        throw std::invalid_argument("plus_k1_extension: (n^2-2kn+3n-2)/2 is not an integer");
    const long long d = k - 2;

    const WeightProfile prof = classify(g, f);
    const bool ok = (d == 0) ? prof.is_magic(want_a) : prof.is_progression(want_a, d);
    if (!ok)
        throw std::invalid_argument(
            "plus_k1_extension: labeling must have progression (a,d) = (" +
            std::to_string(want_a) + "," + std::to_string(d) + "), got " +
            to_string(prof.kind));

    Graph out = join(g, empty_graph(1));
    Labeling fd = f;
    fd.push_back(n + 1);

    const long long a2 = want_a + n + 1;
    const WeightProfile res = classify(out, fd);
    const bool res_ok = (d == 0) ? res.is_magic(a2) : res.is_progression(a2, d);
    // The new vertex carries the top term of the progression: n(n+1)/2.
    if (!res_ok || res.weights[n] != static_cast<long long>(n) * (n + 1) / 2)
        throw std::logic_error("plus_k1_extension: extension failed verification");
    return {std::move(out), std::move(fd)};
}

EitSchedule eit_export(const Graph& g, const Labeling& f) {
    require_valid_labeling(g, f);
    const auto r = is_regular(g);
    if (!r) throw std::invalid_argument("eit_export: graph must be regular");
    const WeightProfile prof = classify(g, f);
    if (prof.kind != WeightProfile::Kind::Magic)
        throw std::invalid_argument("eit_export: labeling must be distance magic");

    EitSchedule s;
    s.teams = g.order();
    s.rounds = *r;
    s.strength = prof.c;
    s.opponents.assign(g.order(), {});
    for (int v = 0; v < g.order(); ++v) {
        auto& foes = s.opponents[f[v] - 1];
        g.for_each_neighbor(v, [&](int u) { foes.push_back(f[u]); });
        std::sort(foes.begin(), foes.end());
    }
    return s;
}

} // namespace distmagic
