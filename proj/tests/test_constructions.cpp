#include "distmagic/constructions.hpp"
#include "distmagic/families.hpp"
#include "distmagic/products.hpp"

#include <doctest.h>

#include <stdexcept>

#include <numeric>

using namespace distmagic;

TEST_CASE("replace_subgraph") {
    // blowing away all edges of a 4-cycle leaves a star on the new vertex
    const Graph star = replace_subgraph(cycle_power(4, 1), std::vector<int>{0, 1, 2, 3}, 1);
    CHECK(star.order() == 5);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(4) == 4);

    const Graph g = replace_subgraph(harary(3, 5), std::vector<int>{1, 2, 3, 4}, 2);
    CHECK(g.order() == 7);
    for (int hub : {0, 5, 6}) CHECK(g.neighbors(hub) == std::vector<int>{1, 2, 3, 4});
    for (int v = 1; v <= 4; ++v) CHECK(g.degree(v) == 3);

    const Graph iso = replace_subgraph(complete(3), std::vector<int>{}, 1);
    CHECK(iso.order() == 4);
    CHECK(iso.edge_count() == 3);
    CHECK(iso.degree(3) == 0);

    CHECK_THROWS_AS(replace_subgraph(complete(3), std::vector<int>{0}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(replace_subgraph(complete(3), std::vector<int>{5}, 1), std::out_of_range);
}

TEST_CASE("dagger_even canonical pipeline") {
    auto [g2, f2] = dagger_even_canonical(2);
    CHECK(g2.order() == 8);
    CHECK(is_regular(g2) == 4);
    CHECK(classify(g2, f2).is_magic(18));

    auto [g3, f3] = dagger_even_canonical(3);
    CHECK(classify(g3, f3).is_magic(39));
    CHECK(g3.order() == 12);

    // label set is {1..n-1} + {n..m+n-1} + {m+n..m+2n-2}
    for (int n = 2; n <= 6; ++n) {
        auto [g, f] = dagger_even_canonical(n);
        CHECK(is_bijective_labeling(g.order(), f));
    }
}

TEST_CASE("dagger_even new vertices weigh the whole replaced block") {
    const int n = 2;
    auto [g, f] = label_h_even(n);
    std::vector<int> s;
    for (int v = 0; v < g.order(); ++v)
        if (v != 0 && v != n + 1) s.push_back(v);
    long long block = 0;
    for (int v : s) block += f[v];

    auto [gd, fd] = dagger_even(g, f, s);
    const long long new_vertex_weight = vertex_weight(gd, fd, g.order());
    CHECK(new_vertex_weight == 2 * n * (n - 1) + block);
}

TEST_CASE("dagger_even accepts any conforming twin block") {
    auto [g, f] = label_h_even(2);
    // {0,1,3,4} also induces a 4-cycle with twin sums m+1 inside H(4,6)
    auto [gd, fd] = dagger_even(g, f, std::vector<int>{0, 1, 3, 4});
    CHECK(classify(gd, fd).is_magic(18));

    // a bipartite host works too when the matched labels pair to m+1
    const Graph k44 = join(empty_graph(4), empty_graph(4));
    const Labeling good{1, 8, 2, 7, 3, 6, 4, 5};
    auto [gk, fk] = dagger_even(k44, good, std::vector<int>{0, 1, 4, 5});
    CHECK(classify(gk, fk).is_magic(22));
    CHECK(gk.order() == 10);
}

TEST_CASE("dagger_even rejects bad inputs with the offending detail") {
    auto [g, f] = label_h_even(2);

    // induced block is not complete-minus-matching
    CHECK_THROWS_WITH_AS(dagger_even(g, f, std::vector<int>{0, 1, 2, 3}),
                         doctest::Contains("induced degree"), std::invalid_argument);

    // |s| must match the regularity
    CHECK_THROWS_AS(dagger_even(g, f, std::vector<int>{0, 1, 3, 4, 2, 5}),
                    std::invalid_argument);

    // twin labels must pair to m+1
    const Graph k44 = join(empty_graph(4), empty_graph(4));
    const Labeling bad{1, 4, 6, 7, 2, 3, 5, 8}; // magic, but twin sums vary
    REQUIRE(classify(k44, bad).kind == WeightProfile::Kind::Magic);
    CHECK_THROWS_WITH_AS(dagger_even(k44, bad, std::vector<int>{0, 1, 4, 5}),
                         doctest::Contains("label sum"), std::invalid_argument);

    // not distance magic at all
    const Labeling not_magic{1, 2, 3, 4, 5, 6};
    REQUIRE(classify(g, not_magic).kind != WeightProfile::Kind::Magic);
    CHECK_THROWS_AS(dagger_even(g, not_magic, std::vector<int>{1, 2, 4, 5}),
                    std::invalid_argument);
}

TEST_CASE("dagger_odd") {
    auto [g1, f1] = dagger_odd(1);
    CHECK(g1.order() == 7);
    CHECK(f1 == Labeling{7, 5, 4, 2, 3, 1, 6});
    CHECK(classify(g1, f1).is_magic(14));
    CHECK_FALSE(is_regular(g1));

    auto [g2, f2] = dagger_odd(2);
    CHECK(g2.order() == 11);
    CHECK(classify(g2, f2).is_magic(33));

    auto [g6, f6] = dagger_odd(6);
    CHECK(classify(g6, f6).is_magic(189));

    CHECK_THROWS_AS(dagger_odd(0), std::invalid_argument);
}

TEST_CASE("dagger_odd weights agree for old and new vertices") {
    for (int n = 1; n <= 20; ++n) {
        auto [g, f] = dagger_odd(n);
        const auto w = all_weights(g, f);
        for (long long x : w) CHECK(x == w[0]);
        CHECK(g.order() == 4 * n + 3);
    }
}

TEST_CASE("plus_k1_extension") {
    auto [c5, f5] = label_antimagic_2n_2n3(1);
    auto [g6, f6] = plus_k1_extension(c5, f5);
    CHECK(g6.order() == 6);
    CHECK(classify(g6, f6).is_progression(10, 1));

    auto [h58, f58] = label_antimagic_4n1_4n4(1);
    auto [g9, f9] = plus_k1_extension(h58, f58);
    CHECK(g9.order() == 9);
    CHECK(classify(g9, f9).is_progression(28, 1));

    // k = 2 is the distance magic case
    auto [g5, fm] = plus_k1_extension(complete_minus_matching(4), Labeling{1, 2, 4, 3});
    CHECK(classify(g5, fm).is_magic(10));
    CHECK(relabel(g5, std::vector<int>{1, 2, 3, 4, 0}) == cal_g(5));
}

TEST_CASE("plus_k1_extension rejects bad inputs") {
    auto [h35, f35] = label_h_odd(1);
    CHECK_THROWS_AS(plus_k1_extension(h35, f35), std::invalid_argument); // not regular

    CHECK_THROWS_AS(plus_k1_extension(complete(4), Labeling{1, 2, 3, 4}),
                    std::invalid_argument); // k = 1 out of range

    const Graph c5 = cycle_power(5, 1);
    CHECK_THROWS_AS(plus_k1_extension(c5, Labeling{1, 3, 2, 4, 5}),
                    std::invalid_argument); // irregular weights
}

TEST_CASE("eit export") {
    auto [c4, f4] = label_h_even(1);
    const EitSchedule s = eit_export(c4, f4);
    CHECK(s.teams == 4);
    CHECK(s.rounds == 2);
    CHECK(s.strength == 5);
    for (int t = 0; t < s.teams; ++t)
        for (int foe : s.opponents[t]) {
            const auto& back = s.opponents[foe - 1];
            CHECK(std::find(back.begin(), back.end(), t + 1) != back.end());
        }

    auto [h46, f46] = label_h_even(2);
    const EitSchedule s6 = eit_export(h46, f46);
    CHECK(s6.teams == 6);
    CHECK(s6.rounds == 4);
    CHECK(s6.strength == 14);

    auto [h35, f35] = label_h_odd(1);
    CHECK_THROWS_AS(eit_export(h35, f35), std::invalid_argument); // not regular
    auto [c5, fp] = label_antimagic_2n_2n3(1);
    CHECK_THROWS_AS(eit_export(c5, fp), std::invalid_argument); // not magic
}
