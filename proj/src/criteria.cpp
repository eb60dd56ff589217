#include "distmagic/criteria.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace distmagic {

namespace {

std::string num(long long x) { return std::to_string(x); }

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Infeasible: return "infeasible";
        case Verdict::FeasibleUnknown: return "feasible-unknown";
        case Verdict::CharacterizedYes: return "yes";
        case Verdict::CharacterizedNo: return "no";
    }
    return "?";
}

CriterionVerdict check_odd_regular(const Graph& g) {
    CriterionVerdict v;
    v.criterion = "odd_regular";
    const auto r = is_regular(g);
    if (r && *r % 2 == 1) {
        v.verdict = Verdict::Infeasible;
        v.data.emplace_back("r", *r);
        v.trace.push_back("graph is " + num(*r) + "-regular with odd degree");
    } else {
        v.verdict = Verdict::FeasibleUnknown;
    }
    return v;
}

CriterionVerdict check_shared_neighborhood(const Graph& g) {
    CriterionVerdict v;
    v.criterion = "shared_neighborhood";
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b) {
            const int da = g.degree(a), db = g.degree(b);
            if (da == db && g.shared_neighbor_count(a, b) == da - 1)
                v.witness_pairs.emplace_back(a, b);
        }
    if (v.witness_pairs.empty()) {
        v.verdict = Verdict::FeasibleUnknown;
    } else {
        v.verdict = Verdict::Infeasible;
        const auto [a, b] = v.witness_pairs.front();
        v.trace.push_back("|N(v" + num(a) + ") n N(v" + num(b) + ")| = d-1 = " +
                          num(g.degree(a) - 1));
    }
    return v;
}

CriterionVerdict check_ad_regular_bounds(int r, int n, int d) {
    if (r >= n || r < 0 || n < 1 || d < 0)
        throw std::invalid_argument("check_ad_regular_bounds: requires 0 <= r < n, d >= 0");
    CriterionVerdict v;
    v.criterion = "ad_regular_bounds";
    const long long num_a = static_cast<long long>(r) * (n + 1) - static_cast<long long>(d) * (n - 1);
    v.data.emplace_back("r", r);
    v.data.emplace_back("n", n);
    v.data.emplace_back("d", d);

    // d <= r(n-r)/(n-1), compared exactly
    if (n > 1 && static_cast<long long>(d) * (n - 1) > static_cast<long long>(r) * (n - r)) {
        v.verdict = Verdict::Infeasible;
        v.trace.push_back("d = " + num(d) + " exceeds r(n-r)/(n-1) = " + num(r) + "*" +
                          num(n - r) + "/" + num(n - 1));
        return v;
    }
    if (num_a % 2 != 0) {
        v.verdict = Verdict::Infeasible;
        v.trace.push_back("a = (r(n+1) - d(n-1))/2 = " + num(num_a) +
                          "/2 is not an integer (r and d have opposite parity)");
        return v;
    }
    v.verdict = Verdict::FeasibleUnknown;
    v.forced_a = num_a / 2;
    v.trace.push_back("forced a = " + num(*v.forced_a));
    return v;
}

CriterionVerdict check_nminus3_regular(int n, int d) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("check_nminus3_regular: requires even n >= 4");
    CriterionVerdict v;
    v.criterion = "nminus3_regular";
    v.data.emplace_back("n", n);
    v.data.emplace_back("d", d);
    if (d == 1) {
        v.verdict = Verdict::FeasibleUnknown;
        return v;
    }
    v.verdict = Verdict::CharacterizedNo;
    if (d >= 3) {
        v.trace.push_back("d <= 3(n-3)/(n-1) < 3 rules out d = " + num(d));
    } else {
        // r = n-3 is odd for even n, so even d fails the parity of
        // a = (r(n+1) - d(n-1))/2.
        v.trace.push_back("r = n-3 odd and d = " + num(d) + " even make a non-integral");
    }
    return v;
}

CriterionVerdict check_cpow(int n, int m) {
    if (n < 3 || m < 1 || m > n / 2)
        throw std::invalid_argument("check_cpow: requires n >= 3, 1 <= m <= n/2");
    CriterionVerdict v;
    v.criterion = "cpow";
    v.data.emplace_back("n", n);
    v.data.emplace_back("m", m);

    if (m % 2 == 1) {
        const long long crit = 2LL * m * (m + 1);
        const bool div_ok = crit % n == 0;
        const bool size_ok = n >= 2 * m + 2;
        const bool even_ok = (n / std::gcd(n, m + 1)) % 2 == 0;
        v.data.emplace_back("2m(m+1) mod n", crit % n);
        v.data.emplace_back("n/gcd(n,m+1)", n / std::gcd(n, m + 1));
        if (div_ok && size_ok && even_ok) {
            v.verdict = Verdict::CharacterizedYes;
        } else {
            v.verdict = Verdict::CharacterizedNo;
            if (!div_ok) v.trace.push_back("2m(m+1) = " + num(crit) + " not divisible by n");
            if (!size_ok) v.trace.push_back("n < 2m+2");
            if (!even_ok) v.trace.push_back("n/gcd(n,m+1) is odd");
        }
        return v;
    }
    if (n == 2 * m + 2) {
        v.verdict = Verdict::CharacterizedYes;
        v.trace.push_back("n = 2m+2: complete minus a perfect matching");
        return v;
    }
    if (m == 2) {
        v.verdict = n == 6 ? Verdict::CharacterizedYes : Verdict::CharacterizedNo;
        if (n != 6) v.trace.push_back("squares of cycles are distance magic only at n = 6");
        return v;
    }
    v.verdict = Verdict::FeasibleUnknown;
    return v;
}

CriterionVerdict check_lex_c4(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("check_lex_c4: requires odd n >= 3");
    CriterionVerdict v;
    v.criterion = "lex_c4";
    v.verdict = Verdict::CharacterizedNo;

    const long long need_num = 3LL * n * (4 * n + 1);
    const long long need_den = n + 2;
    const long long a_max = 8LL * n - 1;
    v.data.emplace_back("a_num", need_num);
    v.data.emplace_back("a_den", need_den);
    v.data.emplace_back("a_max", a_max);
    v.trace.push_back("equal weights inside each block force one opposite-pair sum b");
    v.trace.push_back("comparing hub and block weights forces a = 3b");
    v.trace.push_back("label total then gives a = 3n(4n+1)/(n+2) = " + num(need_num) + "/" +
                      num(need_den));
    v.trace.push_back("but a <= (4n) + (4n-1) = " + num(a_max) + " and " + num(need_num) +
                      " > " + num(a_max * need_den));
    return v;
}

CriterionVerdict check_direct_c4(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("check_direct_c4: requires odd n >= 3");
    CriterionVerdict v;
    v.criterion = "direct_c4";
    const long long num_a0 = 2LL * n * (4 * n + 1);
    const long long den_a0 = n + 1;
    v.data.emplace_back("a0_num", num_a0);
    v.data.emplace_back("a0_den", den_a0);
    // 2n(4n+1)/(n+1) = 8n-6 + 6/(n+1), so integrality is exactly (n+1) | 6.
    if (num_a0 % den_a0 == 0) {
        v.verdict = Verdict::CharacterizedYes;
        v.forced_a = num_a0 / den_a0;
        v.trace.push_back("a0 = 2n(4n+1)/(n+1) = " + num(*v.forced_a));
    } else {
        v.verdict = Verdict::CharacterizedNo;
        v.trace.push_back("a0 = 2n(4n+1)/(n+1) = 8n-6 + 6/(n+1) is not an integer");
    }
    return v;
}

CriterionVerdict check_delta_full(const Graph& g) {
    const int n = g.order();
    if (max_degree(g) != n - 1)
        throw std::invalid_argument("check_delta_full: requires max degree n-1");
    CriterionVerdict v;
    v.criterion = "delta_full";
    v.data.emplace_back("n", n);

    if (n == 1) {
        v.verdict = Verdict::CharacterizedYes;
        return v;
    }
    if (n % 2 == 0) {
        v.verdict = Verdict::CharacterizedNo;
        v.trace.push_back("order is even");
        return v;
    }
    // Need exactly one universal vertex and every other vertex missing
    // exactly one neighbor; the misses then pair up into a matching.
    int universal = -1;
    for (int u = 0; u < n; ++u) {
        const int deg = g.degree(u);
        if (deg == n - 1) {
            if (universal != -1) {
                v.verdict = Verdict::CharacterizedNo;
                v.witness_pairs.emplace_back(universal, u);
                v.trace.push_back("two vertices of full degree");
                return v;
            }
            universal = u;
        } else if (deg != n - 2) {
            v.verdict = Verdict::CharacterizedNo;
            v.witness_pairs.emplace_back(u, u);
            v.trace.push_back("vertex v" + num(u) + " has degree " + num(deg) +
                              ", want n-2 = " + num(n - 2));
            return v;
        }
    }
    v.verdict = Verdict::CharacterizedYes;
    v.trace.push_back("universal vertex v" + num(universal) +
                      "; non-edges of the rest form a perfect matching");
    return v;
}

} // namespace distmagic
