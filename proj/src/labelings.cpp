#include "distmagic/labelings.hpp"

#include "distmagic/families.hpp"
#include "distmagic/products.hpp"

#include <stdexcept>
#include <string>

namespace distmagic {

int alpha(long long i) { return static_cast<int>(i & 1); }

int beta(long long n, long long i) { return i >= n + 1 ? 1 : 0; }

LabeledGraph label_h_even(int n) {
    if (n < 1) throw std::invalid_argument("label_h_even: requires n >= 1");
    const int order = 2 * n + 2;
    Labeling f(order);
    for (int i = 0; i <= n; ++i) f[i] = 2 * n + 2 - i;
    for (int i = n + 1; i <= 2 * n + 1; ++i) f[i] = i - n;
    return {harary(2 * n, order), std::move(f)};
}

LabeledGraph label_h_odd(int n) {
    if (n < 1) throw std::invalid_argument("label_h_odd: requires n >= 1");
    const int order = 2 * n + 3;
    Labeling f(order);
    for (int i = 0; i <= n + 1; ++i) f[i] = 2 * n + 3 - i;
    for (int i = n + 2; i <= 2 * n + 2; ++i) f[i] = i - (n + 1);
    return {harary(2 * n + 1, order), std::move(f)};
}

LabeledGraph label_antimagic_2n_2n3(int n) {
    if (n < 1) throw std::invalid_argument("label_antimagic_2n_2n3: requires n >= 1");
    const int order = 2 * n + 3;
    Labeling f(order);
    for (int i = 0; i <= n + 1; ++i) f[i] = 2 * n + 3 - i;
    f[2 * n + 2] = 1; // 2n+3 - (2n+2)
    for (int i = n + 2; i <= 2 * n + 1; ++i) f[i] = i - n;
    return {harary(2 * n, order), std::move(f)};
}

LabeledGraph label_antimagic_4n1_4n4(int n) {
    if (n < 1) throw std::invalid_argument("label_antimagic_4n1_4n4: requires n >= 1");
    const int order = 4 * n + 4;
    Labeling f(order);
    for (int i = 0; i <= 2 * n + 1; ++i) f[i] = 4 * n + 4 - i;
    for (int i = 2 * n + 2; i <= 4 * n + 3; ++i) f[i] = i - 2 * n - 2 * alpha(i);
    return {harary(4 * n + 1, order), std::move(f)};
}

LabeledGraph label_antimagic_h4(int n) {
    if (n < 7 || n % 4 != 3)
        throw std::invalid_argument("label_antimagic_h4: requires n = 3 mod 4, n >= 7, got " +
                                    std::to_string(n));
    const int k = (n + 1) / 4;

    // Base labeling: v_{n-4} takes n; elsewhere (k*i+1) mod n, which never
    // hits 0 off v_{n-4} because 4k = 1 mod n places the zero residue there.
    Labeling f(n);
    for (int i = 0; i < n; ++i) {
        if (i == n - 4) {
            f[i] = n;
        } else {
            f[i] = static_cast<int>((static_cast<long long>(k) * i + 1) % n);
            if (f[i] == 0)
                throw std::logic_error("label_antimagic_h4: base labeling hit residue 0");
        }
    }

    for (int i = 0; i <= n - 7; ++i)
        if (i % 4 == 0 || i % 4 == 3) f[i] = n - f[i];
    f[n - 1] = n - f[n - 1];

    if (!is_bijective_labeling(n, f))
        throw std::logic_error("label_antimagic_h4: flipped labeling is not a bijection");
    return {harary(4, n), std::move(f)};
}

LabeledGraph label_direct_c4_5() {
    // Blocks A_j = {v_j^0..v_j^3} at indices 4j..4j+3. Two of the twenty
    // entries (v_1^2 and v_1^3) are pinned down by requiring a bijection
    // with constant weight 70; that completion is unique.
    static const int table[20] = {
        16, 15, 19, 20, // A_0
        18, 6,  1,  7,  // A_1
        11, 2,  9,  17, // A_2
        3,  14, 13, 8,  // A_3
        10, 12, 5,  4,  // A_4
    };
    Graph g = direct_product(cal_g(5), cycle_power(4, 1));
    return {std::move(g), Labeling(table, table + 20)};
}

} // namespace distmagic
