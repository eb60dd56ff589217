// Analytic feasibility checks. Each returns a verdict plus a machine-
// checkable witness (offending vertex pairs, failed integrality values,
// violated inequalities) so the ruling can be audited without re-deriving it.
#pragma once

#include "distmagic/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace distmagic {

enum class Verdict { Infeasible, FeasibleUnknown, CharacterizedYes, CharacterizedNo };

const char* to_string(Verdict v);

struct CriterionVerdict {
    std::string criterion;
    Verdict verdict = Verdict::FeasibleUnknown;
    std::vector<std::pair<int, int>> witness_pairs;
    std::optional<long long> forced_a;
    std::vector<std::string> trace;                       // derivation, one line per step
    std::vector<std::pair<std::string, long long>> data;  // numeric witness payload

    bool no() const { return verdict == Verdict::Infeasible || verdict == Verdict::CharacterizedNo; }
    bool yes() const { return verdict == Verdict::CharacterizedYes; }
};

// No odd-regular graph is distance magic.
CriterionVerdict check_odd_regular(const Graph& g);

// If some pair u,v has |N(u) n N(v)| = d(u)-1 = d(v)-1, the graph is not
// distance magic. All offending pairs are reported.
CriterionVerdict check_shared_neighborhood(const Graph& g);

// For an r-regular graph on n vertices, an (a,d) labeling forces
// a = (r(n+1) - d(n-1))/2 and d <= r(n-r)/(n-1); infeasible if a is not an
// integer or d exceeds the bound. Feasible verdicts carry the forced a.
CriterionVerdict check_ad_regular_bounds(int r, int n, int d);

// (n-3)-regular graphs of even order n admit (a,d) labelings only for d = 1.
CriterionVerdict check_nminus3_regular(int n, int d);

// Distance magic characterizations for cycle powers C_n^m: yes for
// n = 2m+2; for odd m yes iff 2m(m+1) = 0 mod n, n >= 2m+2 and
// n/gcd(n,m+1) even; for m = 2 yes iff n = 6; otherwise unknown.
CriterionVerdict check_cpow(int n, int m);

// cal_g(n) o C_4 is never distance magic: equal opposite-pair sums force
// a = 3b and a = 3n(4n+1)/(n+2), which exceeds the maximum 8n-1.
CriterionVerdict check_lex_c4(int n);

// cal_g(n) x C_4 is distance magic iff n = 5: the forced block sum
// a_0 = 2n(4n+1)/(n+1) is an integer only there.
CriterionVerdict check_direct_c4(int n);

// A graph with a vertex of full degree n-1 is distance magic iff n is odd
// and it is a universal vertex joined to complete-minus-perfect-matching.
CriterionVerdict check_delta_full(const Graph& g);

} // namespace distmagic
