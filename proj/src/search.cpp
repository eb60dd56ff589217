#include "distmagic/search.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace distmagic {

namespace {

using Target = SearchSpec::Target;
using Mode = SearchSpec::Mode;

// One concrete target for an inner run: Magic{c}, Progression{a,d} with
// d >= 1, or AllDistinct.
struct FixedTarget {
    Target kind = Target::Magic;
    long long c = 0;
    long long a = 0;
    long long d = 1;
};

struct RunOutput {
    bool found = false;
    bool budget_hit = false;
    Labeling labeling;
    long long count = 0;
    SearchStats stats;
};

void accumulate(SearchStats& into, const SearchStats& from) {
    into.nodes += from.nodes;
    into.prune_weight += from.prune_weight;
    into.prune_forced += from.prune_forced;
    into.prune_bound += from.prune_bound;
}

std::uint64_t low_labels_mask(int count) {
    return count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1);
}

// Backtracking over vertices in decreasing-degree order (ties by index),
// labels tried ascending. Pruning per assignment, applied to each affected
// neighbor u:
//   rem[u] == 0: the now-complete weight must hit the target exactly
//   rem[u] == 1: the single missing label is forced; it must be available
//   rem[u] == 2: the two missing labels must be able to bracket the target
class Engine {
public:
    Engine(const Graph& g, const FixedTarget& t, bool count_all, long long budget,
           int first_label_cap, int forced_first_label)
        : n_(g.order()),
          t_(t),
          count_all_(count_all),
          budget_(budget),
          first_cap_(first_label_cap),
          forced_first_(forced_first_label) {
        nbr_.resize(n_);
        degree_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            nbr_[v] = g.neighbor_mask(v);
            degree_[v] = g.degree(v);
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [this](int u, int v) { return degree_[u] > degree_[v]; });
        sum_.assign(n_, 0);
        rem_ = degree_;
        label_.assign(n_, 0);
        avail_ = low_labels_mask(n_);
        if (t_.kind == Target::AllDistinct) {
            const int dmax = *std::max_element(degree_.begin(), degree_.end());
            max_weight_ = static_cast<long long>(dmax) * (2 * n_ - dmax + 1) / 2;
            seen_.assign(static_cast<std::size_t>(max_weight_) + 1, 0);
        }
    }

    RunOutput run() {
        RunOutput out;
        if (precheck_isolated()) {
            dfs(0);
        }
        out.found = found_;
        out.budget_hit = budget_hit_;
        out.labeling = std::move(result_);
        out.count = count_;
        out.stats = stats_;
        return out;
    }

private:
    // Zero-degree vertices carry weight 0 from the start; their target
    // checks never trigger through assignments, so settle them here.
    bool precheck_isolated() {
        for (int v = 0; v < n_; ++v)
            if (degree_[v] == 0 && !claim_weight(0)) return false;
        return true;
    }

    bool claim_weight(long long w) {
        switch (t_.kind) {
            case Target::Magic:
                return w == t_.c;
            case Target::Progression: {
                if (w < t_.a) return false;
                const long long q = w - t_.a;
                if (q % t_.d != 0) return false;
                const long long slot = q / t_.d;
                if (slot >= n_ || (claimed_ >> slot) & 1) return false;
                claimed_ |= std::uint64_t{1} << slot;
                return true;
            }
            case Target::AllDistinct:
                if (seen_[w]) return false;
                seen_[w] = 1;
                return true;
        }
        return false;
    }

    void unclaim_weight(long long w) {
        if (t_.kind == Target::Progression)
            claimed_ &= ~(std::uint64_t{1} << ((w - t_.a) / t_.d));
        else if (t_.kind == Target::AllDistinct)
            seen_[w] = 0;
    }

    bool forced_ok(int u) const {
        if (t_.kind == Target::Magic) {
            const long long need = t_.c - sum_[u];
            return need >= 1 && need <= n_ && ((avail_ >> (need - 1)) & 1);
        }
        if (t_.kind == Target::Progression) {
            for (int slot = 0; slot < n_; ++slot) {
                if ((claimed_ >> slot) & 1) continue;
                const long long need = t_.a + t_.d * slot - sum_[u];
                if (need >= 1 && need <= n_ && ((avail_ >> (need - 1)) & 1)) return true;
            }
            return false;
        }
        return true;
    }

    bool pair_bound_ok(int u) const {
        if (t_.kind == Target::AllDistinct) return true;
        const std::uint64_t rest = avail_ & (avail_ - 1);
        const long long lo2 = (std::countr_zero(avail_) + 1) + (std::countr_zero(rest) + 1);
        const long long hi1 = 64 - std::countl_zero(avail_);
        const long long hi2 = hi1 + 64 - std::countl_zero(avail_ & ~(std::uint64_t{1} << (hi1 - 1)));
        if (t_.kind == Target::Magic) {
            const long long need = t_.c - sum_[u];
            return need >= lo2 && need <= hi2;
        }
        return sum_[u] + lo2 <= t_.a + t_.d * (n_ - 1) && sum_[u] + hi2 >= t_.a;
    }

    bool dfs(int depth) {
        if (depth == n_) {
            if (count_all_) {
                ++count_;
                return false;
            }
            found_ = true;
            result_ = label_;
            return true;
        }
        const int v = order_[depth];
        std::uint64_t options = avail_;
        if (depth == 0) {
            if (forced_first_ > 0)
                options &= std::uint64_t{1} << (forced_first_ - 1);
            else if (first_cap_ > 0)
                options &= low_labels_mask(first_cap_);
        }
        while (options) {
            const int lab = std::countr_zero(options) + 1;
            options &= options - 1;
            if (++stats_.nodes > budget_) {
                budget_hit_ = true;
                return true;
            }

            avail_ &= ~(std::uint64_t{1} << (lab - 1));
            label_[v] = lab;
            std::uint64_t nb = nbr_[v];
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                sum_[u] += lab;
                --rem_[u];
            }

            bool ok = true;
            int nclaims = 0;
            long long claims[64];
            nb = nbr_[v];
            while (nb && ok) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (rem_[u] == 0) {
                    if (claim_weight(sum_[u])) {
                        claims[nclaims++] = sum_[u];
                    } else {
                        ok = false;
                        ++stats_.prune_weight;
                    }
                } else if (rem_[u] == 1) {
                    if (!forced_ok(u)) {
                        ok = false;
                        ++stats_.prune_forced;
                    }
                } else if (rem_[u] == 2) {
                    if (!pair_bound_ok(u)) {
                        ok = false;
                        ++stats_.prune_bound;
                    }
                }
            }

            if (ok && dfs(depth + 1)) return true;

            for (int i = nclaims - 1; i >= 0; --i) unclaim_weight(claims[i]);
            nb = nbr_[v];
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                sum_[u] -= lab;
                ++rem_[u];
            }
            label_[v] = 0;
            avail_ |= std::uint64_t{1} << (lab - 1);
            if (budget_hit_) return true;
        }
        return false;
    }

    int n_;
    FixedTarget t_;
    bool count_all_;
    long long budget_;
    int first_cap_;
    int forced_first_;

    std::vector<std::uint64_t> nbr_;
    std::vector<int> degree_;
    std::vector<int> order_;
    std::vector<long long> sum_;
    std::vector<int> rem_;
    Labeling label_;
    std::uint64_t avail_ = 0;
    std::uint64_t claimed_ = 0;    // progression slots
    std::vector<char> seen_;       // all-distinct weights
    long long max_weight_ = 0;

    bool found_ = false;
    bool budget_hit_ = false;
    Labeling result_;
    long long count_ = 0;
    SearchStats stats_;
};

// Fan out over the first vertex's label choices in ascending waves; results
// merge in canonical (ascending-label) order so the outcome is independent
// of scheduling. Each branch may spend up to the full remaining budget.
RunOutput run_fixed(const Graph& g, const FixedTarget& t, bool count_all,
                    long long budget, int first_cap, int threads) {
    if (threads <= 1 || g.order() <= 1) {
        return Engine(g, t, count_all, budget, first_cap, 0).run();
    }
    const int top = first_cap > 0 ? first_cap : g.order();
    RunOutput merged;
    for (int base = 1; base <= top; base += threads) {
        std::vector<std::future<RunOutput>> wave;
        for (int lab = base; lab < base + threads && lab <= top; ++lab)
            wave.push_back(std::async(std::launch::async, [&g, &t, count_all, budget, lab] {
                return Engine(g, t, count_all, budget, 0, lab).run();
            }));
        for (auto& fut : wave) {
            RunOutput r = fut.get();
            accumulate(merged.stats, r.stats);
            merged.count += r.count;
            merged.budget_hit = merged.budget_hit || r.budget_hit;
            if (r.found && !merged.found) {
                merged.found = true;
                merged.labeling = std::move(r.labeling);
            }
        }
        if (merged.found && !count_all) break;
    }
    return merged;
}

long long floor_div(long long a, long long b) {
    return a / b - ((a % b != 0 && (a < 0) != (b < 0)) ? 1 : 0);
}
long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

// Range of S = sum f(v) deg(v) over all bijections (rearrangement bounds).
std::pair<long long, long long> label_degree_sum_range(const Graph& g) {
    const int n = g.order();
    auto ds = degree_sequence(g);
    long long lo = 0, hi = 0;
    for (int i = 0; i < n; ++i) {
        hi += static_cast<long long>(i + 1) * ds[i];
        lo += static_cast<long long>(n - i) * ds[i];
    }
    return {lo, hi};
}

// Candidate magic constants: forced to r(n+1)/2 on regular graphs; else the
// integer range allowed by n*c = sum f(v) deg(v).
std::vector<long long> magic_candidates(const Graph& g, const std::optional<long long>& pin) {
    const int n = g.order();
    const auto reg = is_regular(g);
    std::vector<long long> out;
    if (reg) {
        const long long num = static_cast<long long>(*reg) * (n + 1);
        if (num % 2 == 0 && (!pin || *pin == num / 2)) out.push_back(num / 2);
        return out;
    }
    auto [lo, hi] = label_degree_sum_range(g);
    for (long long c = ceil_div(lo, n); c <= floor_div(hi, n); ++c)
        if (!pin || *pin == c) out.push_back(c);
    return out;
}

// Candidate first terms for a given difference d >= 1.
std::vector<long long> progression_candidates(const Graph& g, long long d) {
    const int n = g.order();
    const auto reg = is_regular(g);
    std::vector<long long> out;
    if (reg) {
        const long long num = static_cast<long long>(*reg) * (n + 1) - d * (n - 1);
        if (num % 2 == 0 && num >= 0) out.push_back(num / 2);
        return out;
    }
    auto [lo, hi] = label_degree_sum_range(g);
    const long long shift = d * static_cast<long long>(n) * (n - 1) / 2;
    const long long a_lo = std::max<long long>(0, ceil_div(lo - shift, n));
    const long long a_hi = floor_div(hi - shift, n);
    for (long long a = a_lo; a <= a_hi; ++a) out.push_back(a);
    return out;
}

bool profile_matches(const WeightProfile& p, const FixedTarget& t, int n) {
    switch (t.kind) {
        case Target::Magic: return p.is_magic(t.c);
        case Target::Progression: return p.is_progression(t.a, t.d);
        case Target::AllDistinct:
            return p.kind == WeightProfile::Kind::AllDistinct ||
                   p.kind == WeightProfile::Kind::Progression ||
                   (n == 1 && p.kind == WeightProfile::Kind::Magic);
    }
    return false;
}

} // namespace

const char* to_string(SearchResult::Outcome o) {
    switch (o) {
        case SearchResult::Outcome::Found: return "found";
        case SearchResult::Outcome::ExhaustedNone: return "exhausted-none";
        case SearchResult::Outcome::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchResult search(const Graph& g, const SearchSpec& spec) {
    const int n = g.order();
    if (n > 64) throw std::invalid_argument("search: supports at most 64 vertices");
    if (spec.mode == Mode::Decide && n > spec.decide_ceiling)
        throw std::invalid_argument("search: order exceeds the Decide ceiling of " +
                                    std::to_string(spec.decide_ceiling));
    if (spec.mode == Mode::CountAll && n > spec.count_ceiling)
        throw std::invalid_argument("search: order exceeds the CountAll ceiling of " +
                                    std::to_string(spec.count_ceiling));
    if (spec.node_budget <= 0) throw std::invalid_argument("search: budget must be positive");

    const bool count_all = spec.mode == Mode::CountAll;
    const auto reg = is_regular(g);

    // Expand the request into concrete targets, tried in canonical order.
    std::vector<FixedTarget> targets;
    auto push_magic = [&](const std::optional<long long>& pin) {
        for (long long c : magic_candidates(g, pin))
            targets.push_back({Target::Magic, c, 0, 1});
    };
    auto push_progression = [&](long long d) {
        if (d == 0) {
            push_magic(std::nullopt);
            return;
        }
        for (long long a : progression_candidates(g, d))
            targets.push_back({Target::Progression, 0, a, d});
    };

    switch (spec.target) {
        case Target::Magic:
            push_magic(spec.magic_c);
            break;
        case Target::Progression:
            if (spec.d) {
                push_progression(*spec.d);
            } else {
                // d is open: sweep every difference that leaves the first
                // term non-negative (a parity miss at one d does not rule
                // out larger d)
                long long d_max = 0;
                if (n > 1) {
                    auto [lo, hi] = label_degree_sum_range(g);
                    (void)lo;
                    d_max = hi / (static_cast<long long>(n) * (n - 1) / 2);
                }
                for (long long d = 0; d <= d_max; ++d) push_progression(d);
            }
            break;
        case Target::AllDistinct:
            targets.push_back({Target::AllDistinct, 0, 0, 1});
            break;
    }

    SearchResult res;
    long long budget_left = spec.node_budget;
    for (const FixedTarget& t : targets) {
        if (budget_left <= 0) {
            res.outcome = SearchResult::Outcome::BudgetExceeded;
            return res;
        }
        // Complement symmetry f -> n+1-f fixes Magic profiles on regular
        // graphs, so the first vertex's label can be capped. Not valid when
        // counting.
        int cap = 0;
        if (t.kind == Target::Magic && reg && !count_all &&
            2 * t.c == static_cast<long long>(*reg) * (n + 1))
            cap = (n + 1) / 2;

        RunOutput out = run_fixed(g, t, count_all, budget_left, cap, spec.threads);
        accumulate(res.stats, out.stats);
        budget_left -= out.stats.nodes;
        res.count += out.count;

        if (out.budget_hit) {
            res.outcome = SearchResult::Outcome::BudgetExceeded;
            return res;
        }
        if (!count_all && out.found) {
            WeightProfile prof = classify(g, out.labeling);
            if (!profile_matches(prof, t, n))
                throw std::logic_error("search: found labeling failed re-verification");
            res.outcome = SearchResult::Outcome::Found;
            res.labeling = std::move(out.labeling);
            res.profile = std::move(prof);
            return res;
        }
    }
    res.outcome = SearchResult::Outcome::ExhaustedNone;
    return res;
}

SearchResult search_progression(const Graph& g, int d, SearchSpec spec) {
    if (d < 0) throw std::invalid_argument("search_progression: d must be >= 0");
    spec.target = Target::Progression;
    spec.d = d;
    return search(g, spec);
}

long long count_labelings(const Graph& g, SearchSpec spec) {
    spec.mode = Mode::CountAll;
    SearchResult res = search(g, spec);
    if (res.outcome == SearchResult::Outcome::BudgetExceeded)
        throw std::runtime_error("count_labelings: node budget exceeded");
    return res.count;
}

} // namespace distmagic
