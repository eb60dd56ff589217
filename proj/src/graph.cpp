#include "distmagic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace distmagic {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                " out of range [0," + std::to_string(n_) + ")");
}

int Graph::edge_count() const {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return static_cast<int>(total / 2);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops not allowed");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
    int deg = 0;
    for (int w = 0; w < words_; ++w) deg += std::popcount(row[w]);
    return deg;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
}

bool Graph::same_neighborhood(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    return std::equal(ru, ru + words_, rv);
}

int Graph::shared_neighbor_count(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    int count = 0;
    for (int w = 0; w < words_; ++w) count += std::popcount(ru[w] & rv[w]);
    return count;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    if (n_ > 64) throw std::logic_error("Graph::neighbor_mask requires n <= 64");
    return bits_[static_cast<std::size_t>(v) * words_];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

bool is_bijective_labeling(int n, const Labeling& f) {
    if (static_cast<int>(f.size()) != n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : f) {
        if (x < 1 || x > n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

void require_valid_labeling(const Graph& g, const Labeling& f) {
    if (static_cast<int>(f.size()) != g.order())
        throw std::invalid_argument("labeling length " + std::to_string(f.size()) +
                                    " does not match graph order " +
                                    std::to_string(g.order()));
    if (!is_bijective_labeling(g.order(), f))
        throw std::invalid_argument("labeling is not a bijection onto {1..n}");
}

long long vertex_weight(const Graph& g, const Labeling& f, int v) {
    require_valid_labeling(g, f);
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex_weight: vertex out of range");
    long long sum = 0;
    g.for_each_neighbor(v, [&](int u) { sum += f[u]; });
    return sum;
}

std::vector<long long> all_weights(const Graph& g, const Labeling& f) {
    require_valid_labeling(g, f);
    std::vector<long long> w(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        long long sum = 0;
        g.for_each_neighbor(v, [&](int u) { sum += f[u]; });
        w[v] = sum;
    }
    return w;
}

const char* to_string(WeightProfile::Kind kind) {
    switch (kind) {
        case WeightProfile::Kind::Magic: return "magic";
        case WeightProfile::Kind::Progression: return "progression";
        case WeightProfile::Kind::AllDistinct: return "all-distinct";
        case WeightProfile::Kind::Irregular: return "irregular";
    }
    return "?";
}

WeightProfile classify(const Graph& g, const Labeling& f) {
    WeightProfile p;
    p.weights = all_weights(g, f);
    const int n = g.order();

    auto sorted = p.weights;
    std::sort(sorted.begin(), sorted.end());
    const long long lo = sorted.front();
    const long long hi = sorted.back();

    if (n == 1 || lo == hi) {
        p.kind = WeightProfile::Kind::Magic;
        p.c = lo;
        return p;
    }

    // The difference is forced by the extremes; n > 1 and hi > lo here.
    if ((hi - lo) % (n - 1) == 0) {
        const long long d = (hi - lo) / (n - 1);
        bool match = true;
        for (int i = 0; i < n; ++i)
            if (sorted[i] != lo + d * i) { match = false; break; }
        if (match) {
            p.kind = WeightProfile::Kind::Progression;
            p.a = lo;
            p.d = d;
            return p;
        }
    }

    bool distinct = true;
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) { distinct = false; break; }
    p.kind = distinct ? WeightProfile::Kind::AllDistinct : WeightProfile::Kind::Irregular;
    return p;
}

std::vector<std::pair<int, int>> find_twin_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.same_neighborhood(u, v)) out.emplace_back(u, v);
    return out;
}

bool is_balanced_distance_magic(const Graph& g, const Labeling& f, TwinPairing* pairing) {
    require_valid_labeling(g, f);
    const int n = g.order();
    if (n % 2 != 0) return false;
    if (!is_regular(g)) return false;
    if (classify(g, f).kind != WeightProfile::Kind::Magic) return false;

    // With f a bijection, the partner of u is forced: the vertex carrying
    // label n+1-f(u). It must be a twin of u.
    std::vector<int> by_label(static_cast<std::size_t>(n) + 1, -1);
    for (int v = 0; v < n; ++v) by_label[f[v]] = v;

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        const int v = by_label[n + 1 - f[u]];
        if (v == u) return false;
        if (!g.same_neighborhood(u, v)) return false;
        if (u < v) pairs.emplace_back(u, v);
    }
    if (pairing) pairing->pairs = std::move(pairs);
    return true;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

std::optional<int> is_regular(const Graph& g) {
    const int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != r) return std::nullopt;
    return r;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation length mismatch");
    std::vector<char> seen(n, 0);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[x])
            throw std::invalid_argument("relabel: not a permutation");
        seen[x] = 1;
    }
    Graph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> verts) {
    const int k = static_cast<int>(verts.size());
    if (k < 1) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < k; ++i) {
        if (verts[i] < 0 || verts[i] >= g.order())
            throw std::out_of_range("induced_subgraph: vertex out of range");
        if (pos[verts[i]] != -1)
            throw std::invalid_argument("induced_subgraph: repeated vertex");
        pos[verts[i]] = i;
    }
    Graph out(k);
    for (int i = 0; i < k; ++i)
        g.for_each_neighbor(verts[i], [&](int u) {
            if (pos[u] > i) out.add_edge(i, pos[u]);
        });
    return out;
}

} // namespace distmagic
