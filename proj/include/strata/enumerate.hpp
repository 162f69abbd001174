#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "strata/pattern.hpp"

namespace strata {

/// Bounds for exhaustive pattern enumeration. The order sum alone does not
/// make the pattern set finite (poles and marked points can be added in
/// compensating or neutral numbers), so pole and marked-point counts carry
/// explicit caps.
struct EnumerationOptions {
    long long max_sum = 8;
    long long max_poles = 4;
    long long max_marked = 0;
    std::vector<long long> alphabet;  // allowed positive orders; empty = all
};

/// All valid quadratic patterns with order sum <= max_sum, at most max_poles
/// entries -1 and at most max_marked entries 0, ordered by (order sum, then
/// lexicographically on the canonical order sequence).
inline std::vector<Pattern> enumerate_quadratic(const EnumerationOptions& opt) {
    std::vector<Pattern> out;
    const long long budget = opt.max_sum + opt.max_poles;  // positive-part sum bound
    if (budget < 0) return out;

    std::vector<long long> parts;
    if (opt.alphabet.empty()) {
        for (long long v = budget; v >= 1; --v) parts.push_back(v);
    } else {
        parts = opt.alphabet;
        std::erase_if(parts, [&](long long v) { return v < 1 || v > budget; });
        std::sort(parts.rbegin(), parts.rend());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    }

    std::vector<long long> current;
    auto emit = [&](long long positive_sum) {
        for (long long poles = 0; poles <= opt.max_poles; ++poles) {
            const long long total = positive_sum - poles;
            if (total > opt.max_sum || total < -4 || detail::mod_nonneg(total, 4) != 0) continue;
            for (long long marked = 0; marked <= opt.max_marked; ++marked) {
                std::vector<long long> orders = current;
                orders.insert(orders.end(), static_cast<std::size_t>(poles), -1);
                orders.insert(orders.end(), static_cast<std::size_t>(marked), 0);
                out.push_back(Pattern::quadratic(orders));
            }
        }
    };

    // Non-increasing positive multisets with sum <= budget.
    std::function<void(std::size_t, long long)> dfs = [&](std::size_t first_part, long long sum) {
        emit(sum);
        for (std::size_t i = first_part; i < parts.size(); ++i) {
            if (sum + parts[i] > budget) continue;
            current.push_back(parts[i]);
            dfs(i, sum + parts[i]);
            current.pop_back();
        }
    };
    dfs(0, 0);

    std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) {
        const long long sa = a.order_sum(), sb = b.order_sum();
        if (sa != sb) return sa < sb;
        return Pattern::lex_less(a, b);
    });
    return out;
}

}  // namespace strata
