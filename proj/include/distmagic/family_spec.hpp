// Textual graph specifications used by the CLI and tests:
//   harary:m,n   cpow:n,m   kn:n   knm:n   calg:n   empty:n
// plus nested products lex(a,b), dir(a,b), join(a,b).
#pragma once

#include "distmagic/graph.hpp"

#include <string>

namespace distmagic {

// A named parameterized family instance.
struct FamilySpec {
    enum class Kind { Harary, CyclePower, Complete, CompleteMinusMatching, Empty, CalG };

    Kind kind = Kind::Complete;
    int a = 0; // first parameter (m for harary, n elsewhere)
    int b = 0; // second parameter where applicable

    // Parses "name:args" (no product expressions); throws on bad syntax.
    static FamilySpec parse(const std::string& text);

    // Builds the graph, validating parameter ranges.
    Graph build() const;

    std::string to_string() const;
};

// Full spec grammar: a family, or lex(a,b) / dir(a,b) / join(a,b) with
// nested specs. Parses and builds in one step; throws std::invalid_argument
// on bad syntax or parameters.
Graph build_graph_spec(const std::string& spec);

} // namespace distmagic
