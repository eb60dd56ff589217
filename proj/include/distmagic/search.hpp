// Exact backtracking search for magic / progression / all-distinct
// labelings on small graphs. This is the ground-truth engine: every Found
// labeling is re-verified through classify before it is returned, and
// Decide outcomes are proofs (the full tree was exhausted) unless the node
// budget ran out.
#pragma once

#include "distmagic/graph.hpp"

#include <optional>

namespace distmagic {

struct SearchSpec {
    enum class Target { Magic, Progression, AllDistinct };
    enum class Mode { FindOne, Decide, CountAll };

    Target target = Target::Magic;
    Mode mode = Mode::FindOne;

    std::optional<long long> magic_c;  // pin the constant; else derived/iterated
    std::optional<int> d;              // progression difference; nullopt = any d >= 0

    long long node_budget = 100'000'000;
    int threads = 1;       // > 1 fans out over the first vertex's labels
    int decide_ceiling = 16;
    int count_ceiling = 12;
};

struct SearchStats {
    long long nodes = 0;
    long long prune_weight = 0;  // completed neighborhood missed the target
    long long prune_forced = 0;  // one open neighbor, required label unavailable
    long long prune_bound = 0;   // two open neighbors, sum bracket empty
};

struct SearchResult {
    enum class Outcome { Found, ExhaustedNone, BudgetExceeded };

    Outcome outcome = Outcome::ExhaustedNone;
    std::optional<Labeling> labeling;       // set when Found
    std::optional<WeightProfile> profile;   // classification of the found labeling
    long long count = 0;                    // CountAll mode
    SearchStats stats;

    bool found() const { return outcome == Outcome::Found; }
    bool exhausted_none() const { return outcome == Outcome::ExhaustedNone; }
};

const char* to_string(SearchResult::Outcome o);

SearchResult search(const Graph& g, const SearchSpec& spec);

// search() with a Progression target and the given difference.
SearchResult search_progression(const Graph& g, int d, SearchSpec spec = {});

// Exact number of labelings meeting the target, counting all n! assignments
// as distinct. Requires order <= spec.count_ceiling.
long long count_labelings(const Graph& g, SearchSpec spec);

} // namespace distmagic
