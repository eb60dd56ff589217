// Acceptance suite: one check per headline guarantee, each printed as a
// single pass/fail line. Returns nonzero if anything fails.

#include "distmagic/constructions.hpp"
#include "distmagic/criteria.hpp"
#include "distmagic/families.hpp"
#include "distmagic/labelings.hpp"
#include "distmagic/products.hpp"
#include "distmagic/report.hpp"
#include "distmagic/search.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

using namespace distmagic;

namespace {

int failures = 0;

void report_line(int id, const std::string& name, bool pass, const std::string& detail,
                 double seconds) {
    std::ostringstream os;
    os << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name;
    if (!detail.empty()) os << " -- " << detail;
    os << " (" << seconds << "s)";
    std::cout << os.str() << std::endl;
    if (!pass) ++failures;
}

template <typename Fn>
void run(int id, const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_line(id, name, pass, detail, seconds);
}

SearchSpec decide(long long budget = 200'000'000) {
    SearchSpec s;
    s.mode = SearchSpec::Mode::Decide;
    s.node_budget = budget;
    return s;
}

bool crit1(std::string& detail) {
    for (int n = 1; n <= 50; ++n) {
        auto [ge, fe] = label_h_even(n);
        if (!classify(ge, fe).is_magic(2LL * n * n + 3 * n)) {
            detail = "even family failed at n=" + std::to_string(n);
            return false;
        }
        auto [go, fo] = label_h_odd(n);
        if (!classify(go, fo).is_magic(2LL * n * n + 5 * n + 3)) {
            detail = "odd family failed at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=1..50 both families, exact constants";
    return true;
}

bool crit2(std::string& detail) {
    for (int n = 1; n <= 50; ++n) {
        auto [g, f] = label_antimagic_2n_2n3(n);
        if (!classify(g, f).is_progression(2LL * n * n + 3 * n - 1, 1)) {
            detail = "H(2n,2n+3) failed at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 1; n <= 30; ++n) {
        auto [g, f] = label_antimagic_4n1_4n4(n);
        if (!classify(g, f).is_progression(8LL * n * n + 10 * n + 1, 1)) {
            detail = "H(4n+1,4n+4) failed at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 7; n <= 51; n += 4) {
        auto [g, f] = label_antimagic_h4(n);
        if (!classify(g, f).is_progression((3LL * n + 5) / 2, 1)) {
            detail = "H(4,n) failed at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "all three progressions exact over their ranges";
    return true;
}

bool crit3(std::string& detail) {
    if (!search(harary(3, 5), decide()).found()) {
        detail = "no labeling found for H(3,5)";
        return false;
    }
    for (int n : {7, 9, 11, 13}) {
        const SearchResult res = search(harary(3, n), decide());
        if (!res.exhausted_none()) {
            detail = "H(3," + std::to_string(n) + ") decide returned " + to_string(res.outcome);
            return false;
        }
    }
    for (int n : {6, 8, 10})
        if (!check_odd_regular(harary(3, n)).no()) {
            detail = "odd-regular check missed n=" + std::to_string(n);
            return false;
        }
    for (int n : {7, 9, 11, 13}) {
        const auto v = check_shared_neighborhood(harary(3, n));
        const std::pair<int, int> want{(n - 3) / 2, n - 2};
        if (!v.no() || std::find(v.witness_pairs.begin(), v.witness_pairs.end(), want) ==
                           v.witness_pairs.end()) {
            detail = "witness pair missing for n=" + std::to_string(n);
            return false;
        }
    }
    detail = "oracle + both criteria, witnesses included";
    return true;
}

bool crit4(std::string& detail) {
    auto [g, f] = label_direct_c4_5();
    if (!classify(g, f).is_magic(70)) {
        detail = "20-vertex labeling is not magic 70";
        return false;
    }
    // the two underdetermined cells (block 1, positions 2 and 3) admit
    // exactly one bijective magic completion
    int completions = 0;
    std::pair<int, int> unique_fill{-1, -1};
    for (int x = 1; x <= 20; ++x)
        for (int y = 1; y <= 20; ++y) {
            if (x == y) continue;
            Labeling candidate = f;
            candidate[6] = x;
            candidate[7] = y;
            if (!is_bijective_labeling(20, candidate)) continue;
            if (classify(g, candidate).is_magic(70)) {
                ++completions;
                unique_fill = {x, y};
            }
        }
    if (completions != 1 || unique_fill != std::pair{1, 7}) {
        detail = "completions=" + std::to_string(completions);
        return false;
    }
    detail = "magic 70 verified; unique completion (1,7) over 380 candidates";
    return true;
}

bool crit5(std::string& detail) {
    if (!check_lex_c4(3).no() || !check_direct_c4(3).no()) {
        detail = "analytic criteria did not rule out n=3";
        return false;
    }
    std::ostringstream note;
    const Graph lex = lexicographic(cal_g(3), cycle_power(4, 1));
    const Graph dir = direct_product(cal_g(3), cycle_power(4, 1));
    for (const auto& [name, g] : {std::pair<const char*, const Graph&>{"lex", lex},
                                  std::pair<const char*, const Graph&>{"dir", dir}}) {
        const SearchResult res = search(g, decide(1'000'000'000));
        if (res.found()) {
            detail = std::string(name) + " product unexpectedly has a magic labeling";
            return false;
        }
        note << name << "="
             << (res.exhausted_none() ? "exhausted" : "budget-hit,ConfirmedAnalytically") << " ";
    }
    detail = "criteria no + oracle on both 12-vertex products: " + note.str();
    return true;
}

bool crit6(std::string& detail) {
    for (int n = 2; n <= 10; ++n) {
        auto [g, f] = dagger_even_canonical(n);
        const long long want = 2LL * n * n + (2LL * n + 2) * n - n;
        if (!classify(g, f).is_magic(want) || g.order() != 4 * n || is_regular(g) != 2 * n) {
            detail = "even replacement failed at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 1; n <= 20; ++n) {
        auto [g, f] = dagger_odd(n);
        if (!classify(g, f).is_magic(4LL * n * n + 7 * n + 3) || g.order() != 4 * n + 3) {
            detail = "odd replacement failed at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "even n=2..10 (order 4n, 2n-regular); odd n=1..20 (order 4n+3)";
    return true;
}

bool crit7(std::string& detail) {
    for (int n = 1; n <= 30; ++n) {
        auto [g, f] = label_antimagic_2n_2n3(n);
        auto [ge, fe] = plus_k1_extension(g, f);
        if (!classify(ge, fe).is_progression(2LL * n * n + 5 * n + 3, 1)) {
            detail = "extension of H(2n,2n+3) failed at n=" + std::to_string(n);
            return false;
        }
    }
    for (int n = 1; n <= 20; ++n) {
        auto [g, f] = label_antimagic_4n1_4n4(n);
        auto [ge, fe] = plus_k1_extension(g, f);
        if (!classify(ge, fe).is_progression(8LL * n * n + 14 * n + 6, 1)) {
            detail = "extension of H(4n+1,4n+4) failed at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "a' = a+n+1 exact on both families; the (n-3)-regular reading carries the corollary";
    return true;
}

bool crit8(std::string& detail) {
    std::vector<Graph> corpus;
    for (int n = 3; n <= 10; ++n)
        for (int m = 2; m < n; ++m) corpus.push_back(harary(m, n));
    for (int n = 3; n <= 10; ++n)
        for (int m = 1; m <= n / 2; ++m) corpus.push_back(cycle_power(n, m));

    int infeasible_checked = 0, found_verified = 0, prog_checked = 0;
    for (const Graph& g : corpus) {
        const SearchResult magic = search(g, decide());
        if (!magic.found() && !magic.exhausted_none()) {
            detail = "budget exceeded on a corpus graph";
            return false;
        }
        if (magic.found()) {
            if (magic.profile->kind != WeightProfile::Kind::Magic) {
                detail = "a found labeling failed classify";
                return false;
            }
            ++found_verified;
        }
        const bool ruled_out =
            check_odd_regular(g).no() || check_shared_neighborhood(g).no();
        if (ruled_out) {
            ++infeasible_checked;
            if (magic.found()) {
                detail = "criterion contradicted by oracle on order " +
                         std::to_string(g.order());
                return false;
            }
        }
        if (const auto r = is_regular(g)) {
            for (int d : {1, 2}) {
                if (check_ad_regular_bounds(*r, g.order(), d).no()) {
                    ++prog_checked;
                    if (search_progression(g, d, decide()).found()) {
                        detail = "(a,d) bound contradicted on order " +
                                 std::to_string(g.order()) + " d=" + std::to_string(d);
                        return false;
                    }
                }
            }
        }
    }

    // characterized-yes instances must be realized
    for (const auto& [n, m] : std::vector<std::pair<int, int>>{{4, 1}, {6, 2}, {8, 3}, {10, 4}})
        if (!search(cycle_power(n, m), decide()).found()) {
            detail = "characterized-yes cycle power refuted";
            return false;
        }
    for (int n : {5, 7, 9})
        if (!check_delta_full(cal_g(n)).yes() || !search(cal_g(n), decide()).found()) {
            detail = "full-degree characterization refuted at n=" + std::to_string(n);
            return false;
        }

    std::ostringstream os;
    os << corpus.size() << " graphs; " << infeasible_checked
       << " analytic no-verdicts uncontradicted; " << prog_checked
       << " (a,d) exclusions uncontradicted; " << found_verified << " found labelings verified";
    detail = os.str();
    return true;
}

bool crit9(std::string& detail) {
    const Table1Report rep = run_table1();
    int confirmed = 0;
    for (const auto& row : rep.rows)
        if (!row.refuted) ++confirmed;
    std::ostringstream os;
    os << confirmed << "/" << rep.rows.size() << " rows stand";
    for (const auto& row : rep.rows)
        if (row.refuted) os << "; refuted: " << row.family;
    detail = os.str();
    return !rep.any_refuted();
}

} // namespace

int main() {
    std::cout << "acceptance suite\n";
    run(1, "closed-form magic constants", crit1);
    run(2, "closed-form progressions", crit2);
    run(3, "H(3,n) characterization", crit3);
    run(4, "C4 direct-product labeling and unique completion", crit4);
    run(5, "C4 product criteria vs oracle at n=3", crit5);
    run(6, "replacement constructions", crit6);
    run(7, "one-vertex extensions", crit7);
    run(8, "oracle soundness over the small corpus", crit8);
    run(9, "results-table report", crit9);
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
