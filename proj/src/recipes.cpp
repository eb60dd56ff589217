#include "distmagic/recipes.hpp"

#include <stdexcept>

namespace distmagic {

RecipeResult apply_recipe(const std::string& name, int n) {
    using Kind = WeightProfile::Kind;
    const long long nn = n;
    if (name == "h_even")
        return {label_h_even(n), Kind::Magic, 2 * nn * nn + 3 * nn, 0, 0};
    if (name == "h_odd")
        return {label_h_odd(n), Kind::Magic, 2 * nn * nn + 5 * nn + 3, 0, 0};
    if (name == "anti_2n_2n3")
        return {label_antimagic_2n_2n3(n), Kind::Progression, 0, 2 * nn * nn + 3 * nn - 1, 1};
    if (name == "anti_4n1_4n4")
        return {label_antimagic_4n1_4n4(n), Kind::Progression, 0, 8 * nn * nn + 10 * nn + 1, 1};
    if (name == "anti_h4")
        return {label_antimagic_h4(n), Kind::Progression, 0, (3 * nn + 5) / 2, 1};
    if (name == "direct_c4_5") {
        if (n != 0 && n != 5)
            throw std::invalid_argument("recipe direct_c4_5 is fixed at n=5");
        return {label_direct_c4_5(), Kind::Magic, 70, 0, 0};
    }
    if (name == "dagger_even")
        return {dagger_even_canonical(n), Kind::Magic, 2 * nn * nn + (2 * nn + 2) * nn - nn, 0, 0};
    if (name == "dagger_odd")
        return {dagger_odd(n), Kind::Magic, 4 * nn * nn + 7 * nn + 3, 0, 0};
    throw std::invalid_argument("unknown recipe '" + name + "'");
}

std::vector<std::string> recipe_names() {
    return {"h_even",  "h_odd",       "anti_2n_2n3", "anti_4n1_4n4",
            "anti_h4", "direct_c4_5", "dagger_even", "dagger_odd"};
}

} // namespace distmagic
