// Name-indexed access to every closed-form labeling, including the two
// replacement pipelines, together with the weight profile each one is
// supposed to produce. Used by the CLI and the verification suites.
#pragma once

#include "distmagic/constructions.hpp"
#include "distmagic/labelings.hpp"

#include <string>
#include <vector>

namespace distmagic {

struct RecipeResult {
    LabeledGraph lg;
    WeightProfile::Kind expected_kind;
    long long expected_c = 0; // magic constant
    long long expected_a = 0; // progression first term
    long long expected_d = 0;
};

// Known names: h_even, h_odd, anti_2n_2n3, anti_4n1_4n4, anti_h4,
// direct_c4_5, dagger_even, dagger_odd. Throws on unknown names or
// out-of-range parameters.
RecipeResult apply_recipe(const std::string& name, int n);

std::vector<std::string> recipe_names();

} // namespace distmagic
