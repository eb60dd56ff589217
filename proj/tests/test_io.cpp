#include "distmagic/families.hpp"
#include "distmagic/family_spec.hpp"
#include "distmagic/io.hpp"
#include "distmagic/labelings.hpp"
#include "distmagic/products.hpp"
#include "distmagic/recipes.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace distmagic;
using nlohmann::json;

TEST_CASE("graph json round trip preserves edge sets") {
    for (const char* spec :
         {"harary:5,8", "cpow:9,3", "calg:9", "kn:1", "lex(calg:3,cpow:4,1)", "harary:7,64"}) {
        const Graph g = build_graph_spec(spec);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
    // sweep the family shapes across the whole supported order range
    for (int n = 3; n <= 64; ++n) {
        for (int m : {2, n / 2, n - 1}) {
            if (m < 2 || m >= n) continue;
            const Graph g = harary(m, n);
            CHECK(graph_from_json(graph_to_json(g)) == g);
        }
        if (n % 2 == 0) {
            const Graph g = complete_minus_matching(n);
            CHECK(graph_from_json(graph_to_json(g)) == g);
        }
    }
}

TEST_CASE("graph json validation") {
    CHECK_THROWS_AS(graph_from_json(json{{"edges", json::array()}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"edges", {{1, 0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"edges", {{0, 1}, {0, 1}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"edges", {{0, 5}}}}), std::out_of_range);
    CHECK_THROWS_AS(graph_from_json(json{{"n", 3}, {"edges", {{0}}}}), std::invalid_argument);
}

TEST_CASE("labeling json round trip and validation") {
    const Labeling f{4, 3, 1, 2};
    CHECK(labeling_from_json(labeling_to_json(f)) == f);
    CHECK_THROWS_AS(labeling_from_json(json{{"labels", {1, "x"}}}), std::invalid_argument);
    CHECK_THROWS_AS(labeling_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("dot export carries labels") {
    auto [g, f] = label_h_even(1);
    const std::string dot = to_dot(g, &f);
    CHECK(dot.find("v0 [label=\"v0\\nf=4\"]") != std::string::npos);
    CHECK(dot.find("v0 -- v1;") != std::string::npos);

    const std::string bare = to_dot(g);
    CHECK(bare.find("f=") == std::string::npos);
}

TEST_CASE("eit json schema") {
    auto [g, f] = label_h_even(1);
    const json j = eit_to_json(eit_export(g, f));
    CHECK(j["teams"] == 4);
    CHECK(j["rounds"] == 2);
    CHECK(j["strength"] == 5);
    CHECK(j["opponents"]["4"] == json({2, 3}));
    CHECK(j["opponents"]["1"] == json({2, 3}));
}

TEST_CASE("verdict and profile json") {
    const json v = verdict_to_json(check_shared_neighborhood(harary(3, 7)));
    CHECK(v["verdict"] == "infeasible");
    bool has25 = false;
    for (const auto& p : v["witness_pairs"])
        if (p[0] == 2 && p[1] == 5) has25 = true;
    CHECK(has25);

    auto [g, f] = label_h_even(2);
    const json p = profile_to_json(classify(g, f));
    CHECK(p["kind"] == "magic");
    CHECK(p["c"] == 14);
}
