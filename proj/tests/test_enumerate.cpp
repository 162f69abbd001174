#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "strata/enumerate.hpp"
#include "strata/stratum.hpp"

using namespace strata;

TEST_CASE("enumeration is duplicate-free, valid and deterministically ordered") {
    EnumerationOptions opt;
    opt.max_sum = 8;
    const auto patterns = enumerate_quadratic(opt);
    REQUIRE(!patterns.empty());

    std::set<std::string> seen;
    long long previous_sum = -100;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        const Pattern& p = patterns[i];
        CHECK(seen.insert(format_pattern(p)).second);
        CHECK(p.order_sum() <= 8);
        CHECK(p.order_sum() >= -4);
        CHECK(p.count_of(-1) <= 4);
        CHECK(p.marked_point_count() == 0);
        CHECK(p.order_sum() >= previous_sum);
        if (i > 0 && patterns[i - 1].order_sum() == p.order_sum())
            CHECK(Pattern::lex_less(patterns[i - 1], p));
        previous_sum = p.order_sum();
    }
    CHECK(patterns.front() == parse_pattern("Q(-1^4)"));

    // determinism
    CHECK(enumerate_quadratic(opt) == patterns);
}

TEST_CASE("enumeration covers the expected patterns") {
    EnumerationOptions opt;
    opt.max_sum = 8;
    const auto patterns = enumerate_quadratic(opt);
    auto contains = [&](const char* text) {
        const Pattern wanted = parse_pattern(text);
        for (const auto& p : patterns)
            if (p == wanted) return true;
        return false;
    };
    CHECK(contains("Q()"));
    CHECK(contains("Q(1,-1)"));
    CHECK(contains("Q(4)"));
    CHECK(contains("Q(1,3)"));
    CHECK(contains("Q(8)"));
    CHECK(contains("Q(1^4,-1^4)"));
    CHECK(contains("Q(5,-1)"));
    CHECK_FALSE(contains("Q(12)"));      // beyond max_sum
    CHECK_FALSE(contains("Q(1,-1^5)"));  // beyond the pole cap
}

TEST_CASE("exactly four enumerated strata are empty") {
    EnumerationOptions opt;
    opt.max_sum = 8;
    std::vector<std::string> empties;
    for (const auto& p : enumerate_quadratic(opt))
        if (!is_nonempty(p)) empties.push_back(format_pattern(p));
    std::sort(empties.begin(), empties.end());
    CHECK(empties == std::vector<std::string>{"Q()", "Q(1,-1)", "Q(3,1)", "Q(4)"});
}

TEST_CASE("alphabet and marked-point options") {
    EnumerationOptions opt;
    opt.max_sum = 8;
    opt.max_poles = 2;
    opt.max_marked = 1;
    opt.alphabet = {1, 3, 4};
    for (const auto& p : enumerate_quadratic(opt)) {
        for (const auto& e : p.entries()) {
            const bool allowed = e.order == -1 || e.order == 0 || e.order == 1 || e.order == 3 || e.order == 4;
            CHECK(allowed);
        }
        CHECK(p.marked_point_count() <= 1);
        CHECK(p.count_of(-1) <= 2);
    }
}
