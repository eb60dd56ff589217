// Core graph and labeling model: simple undirected graphs with bitset
// adjacency rows, vertex weights (neighbor-label sums), and classification
// of a labeling as magic / arithmetic-progression / all-distinct.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace distmagic {

// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
// bitset row per vertex, packed into 64-bit words, so neighborhood
// comparisons and intersections are word-parallel.
class Graph {
public:
    explicit Graph(int n);

    int order() const noexcept { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    template <typename F>
    void for_each_neighbor(int v, F&& fn) const {
        const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                fn(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    // open neighborhoods N(u), N(v) compared as bit rows
    bool same_neighborhood(int u, int v) const;
    int shared_neighbor_count(int u, int v) const;

    // adjacency row as a single word; only valid for n <= 64
    std::uint64_t neighbor_mask(int v) const;

    std::vector<std::pair<int, int>> edges() const; // i<j, lexicographic

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// A labeling is f(v) = labels[v] with values 1..n; valid labelings are
// bijections onto {1..n}.
using Labeling = std::vector<int>;

bool is_bijective_labeling(int n, const Labeling& f);
void require_valid_labeling(const Graph& g, const Labeling& f);

// Sum of labels over the open neighborhood of v; isolated vertices get 0.
long long vertex_weight(const Graph& g, const Labeling& f, int v);
std::vector<long long> all_weights(const Graph& g, const Labeling& f);

struct WeightProfile {
    enum class Kind { Magic, Progression, AllDistinct, Irregular };

    Kind kind = Kind::Irregular;
    long long c = 0;        // Kind::Magic
    long long a = 0;        // Kind::Progression: first term
    long long d = 0;        // Kind::Progression: common difference, >= 1
    std::vector<long long> weights;

    bool is_magic(long long want) const { return kind == Kind::Magic && c == want; }
    bool is_progression(long long want_a, long long want_d) const {
        return kind == Kind::Progression && a == want_a && d == want_d;
    }
};

const char* to_string(WeightProfile::Kind kind);

// Magic if all weights equal; else progression with the forced difference
// d = (max-min)/(n-1) when the sorted weights match a, a+d, ..., a+(n-1)d;
// else AllDistinct if pairwise distinct; else Irregular. n=1 is Magic.
WeightProfile classify(const Graph& g, const Labeling& f);

// All unordered pairs u<v with N(u) = N(v) (open neighborhoods).
std::vector<std::pair<int, int>> find_twin_pairs(const Graph& g);

struct TwinPairing {
    std::vector<std::pair<int, int>> pairs; // covers every vertex exactly once
};

// True iff g is regular, classify(g,f) is Magic, and the vertices split into
// twin pairs (equal open neighborhoods) whose label sums are all n+1.
bool is_balanced_distance_magic(const Graph& g, const Labeling& f,
                                TwinPairing* pairing = nullptr);

std::vector<int> degree_sequence(const Graph& g); // ascending
std::optional<int> is_regular(const Graph& g);
int max_degree(const Graph& g);

// New graph with vertex v renamed perm[v]; perm must be a permutation.
Graph relabel(const Graph& g, std::span<const int> perm);

// Subgraph induced on verts, renumbered by position in verts.
Graph induced_subgraph(const Graph& g, std::span<const int> verts);

} // namespace distmagic
