#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "strata/enumerate.hpp"
#include "strata/pattern.hpp"

using namespace strata;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::domain;
}

}  // namespace

TEST_CASE("exponential notation expands to repeated entries") {
    const Pattern p = parse_pattern("Q(1^4,8,2,3^2)");
    CHECK(p == Pattern::quadratic({1, 1, 1, 1, 8, 2, 3, 3}));
    CHECK(p.size() == 8);
    CHECK(p.order_sum() == 20);
}

TEST_CASE("parsing accepts whitespace, empty patterns and marked points") {
    CHECK(parse_pattern(" Q( 1 ^ 4 , 8 , 2 , 3^2 ) ") == parse_pattern("Q(1^4,8,2,3^2)"));
    CHECK(parse_pattern("Q()") == Pattern::empty(Flavor::Quadratic));
    CHECK(parse_pattern("H()") == Pattern::empty(Flavor::Abelian));
    CHECK(parse_pattern("H(0)") == Pattern::abelian({0}));
    CHECK(parse_pattern("Q(4,0^2)").marked_point_count() == 2);
    CHECK(parse_pattern("Q(4,0^2)").size() == 3);
}

TEST_CASE("patterns are multisets: entry order does not matter") {
    CHECK(parse_pattern("Q(1,3)") == parse_pattern("Q(3,1)"));
    CHECK(parse_pattern("Q(1,1,-1,-1)") == parse_pattern("Q(-1,1,-1,1)"));
    CHECK_FALSE(parse_pattern("Q(1,3)") == parse_pattern("Q(1,3,0)"));
}

TEST_CASE("parse errors carry distinct categories") {
    CHECK(kind_of([] { parse_pattern("X(1)"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_pattern("Q(1,)"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_pattern("Q(1^0)"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_pattern("Q(1) junk"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_pattern("q(4)"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_pattern("Q(-2,2)"); }) == ErrorKind::order);
    CHECK(kind_of([] { parse_pattern("H(-2)"); }) == ErrorKind::order);
    CHECK(kind_of([] { parse_pattern("Q(4,-1)"); }) == ErrorKind::sum);   // 3 != 0 mod 4
    CHECK(kind_of([] { parse_pattern("Q(-1^8)"); }) == ErrorKind::sum);   // below -4
    CHECK(kind_of([] { parse_pattern("H(1,2)"); }) == ErrorKind::sum);    // odd sum
}

TEST_CASE("syntax errors report a 1-based position") {
    try {
        parse_pattern("Q(1,?)");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::syntax);
        CHECK(e.position() == 5);
    }
}

TEST_CASE("formatting is canonical and collapses exponents") {
    CHECK(format_pattern(Pattern::quadratic({9, -1})) == "Q(9,-1)");
    CHECK(format_pattern(Pattern::quadratic({1, 1, 1, 1, 8, 2, 3, 3})) == "Q(8,3^2,2,1^4)");
    CHECK(format_pattern(Pattern::empty(Flavor::Abelian)) == "H()");
    CHECK(format_pattern(parse_pattern("H(2,4)")) == "H(4,2)");
}

TEST_CASE("format/parse round-trips on an enumerated corpus") {
    EnumerationOptions opt;
    opt.max_sum = 12;
    opt.max_poles = 6;
    opt.max_marked = 2;
    for (const Pattern& p : enumerate_quadratic(opt)) {
        const std::string text = format_pattern(p);
        CHECK(parse_pattern(text) == p);
        CHECK(format_pattern(parse_pattern(text)) == text);
    }
}

TEST_CASE("format/parse round-trips on random Abelian patterns") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> orders;
        const int n = static_cast<int>(rng() % 6);
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            orders.push_back(static_cast<long long>(rng() % 9));
            sum += orders.back();
        }
        if (sum % 2 != 0) orders.push_back(1);
        const Pattern p = Pattern::abelian(orders);
        CHECK(parse_pattern(format_pattern(p)) == p);
    }
}

TEST_CASE("genus follows the Gauss-Bonnet sum rule") {
    CHECK(genus(parse_pattern("Q(-1,9)")) == 3);
    CHECK(genus(parse_pattern("Q(-1,-1,-1,-1)")) == 0);
    CHECK(genus(parse_pattern("H(2,4)")) == 4);
    CHECK(genus(parse_pattern("Q()")) == 1);
    CHECK(genus(parse_pattern("H()")) == 1);

    EnumerationOptions opt;
    opt.max_sum = 16;
    opt.max_poles = 6;
    for (const Pattern& p : enumerate_quadratic(opt)) CHECK(4 * genus(p) - 4 == p.order_sum());
}

TEST_CASE("dimension counts marked points") {
    CHECK(dimension(parse_pattern("Q(1,1,1,1)")) == 6);
    CHECK(dimension(parse_pattern("Q(-1,9)")) == 6);
    CHECK(dimension(parse_pattern("H(2,2)")) == 7);
    CHECK(dimension(parse_pattern("Q(-1,9,0)")) == 7);
    CHECK(dimension(parse_pattern("Q()")) == 0);
}

TEST_CASE("merge forms the disjoint union") {
    const Pattern a = parse_pattern("Q(4)");
    const Pattern b = parse_pattern("Q(4,3,1)");
    CHECK(Pattern::merge(a, b) == parse_pattern("Q(4^2,3,1)"));
    CHECK_THROWS_AS(Pattern::merge(a, parse_pattern("H(4)")), Error);
}

TEST_CASE("run-length storage handles astronomically large multiplicities") {
    const Pattern p = Pattern::from_entries(Flavor::Abelian, {{2, 5'000'000'000'000'000'000LL}});
    CHECK(p.size() == 5'000'000'000'000'000'000LL);
    CHECK(format_pattern(p) == "H(2^5000000000000000000)");
    CHECK_THROWS_AS(p.expanded(), Error);
    CHECK_THROWS_AS(p.order_sum(), Error);  // 1e19 overflows the 64-bit report
    CHECK(parse_pattern(format_pattern(p)) == p);
}
