#include <catch2/catch_amalgamated.hpp>

#include "strata/enumerate.hpp"
#include "strata/stratum.hpp"

using namespace strata;

TEST_CASE("exactly the four exceptional quadratic strata are empty") {
    CHECK_FALSE(is_nonempty(parse_pattern("Q()")));
    CHECK_FALSE(is_nonempty(parse_pattern("Q(1,-1)")));
    CHECK_FALSE(is_nonempty(parse_pattern("Q(4)")));
    CHECK_FALSE(is_nonempty(parse_pattern("Q(1,3)")));

    CHECK(is_nonempty(parse_pattern("Q(-1,9)")));
    CHECK(is_nonempty(parse_pattern("Q(-1,-1,-1,-1)")));
    CHECK(is_nonempty(parse_pattern("Q(2,2)")));
    CHECK(is_nonempty(parse_pattern("Q(8)")));
}

TEST_CASE("marked points are ignored by the emptiness comparison") {
    CHECK_FALSE(is_nonempty(parse_pattern("Q(4,0)")));
    CHECK_FALSE(is_nonempty(parse_pattern("Q(1,3,0^2)")));
    CHECK_FALSE(is_nonempty(parse_pattern("Q(0^3)")));  // marked torus: still the empty Q() stratum
    CHECK(is_nonempty(parse_pattern("Q(8,0)")));
}

TEST_CASE("non-emptiness is a quadratic-only fact") {
    CHECK_THROWS_AS(is_nonempty(parse_pattern("H(2)")), Error);
}

TEST_CASE("connectedness facts") {
    CHECK(connectedness_facts(parse_pattern("Q(-1,-1,-1,-1)")) == Connectedness::connected());
    CHECK(connectedness_facts(parse_pattern("Q(-1^4,0)")) == Connectedness::connected());
    CHECK(connectedness_facts(parse_pattern("Q(12)")) == Connectedness::multi(2));
    CHECK(connectedness_facts(parse_pattern("Q(-1,9)")) == Connectedness::multi(2));
    CHECK(connectedness_facts(parse_pattern("Q(12,0)")) == Connectedness::multi(2));
    CHECK(connectedness_facts(parse_pattern("Q(1,1,1,1)")) == Connectedness::unknown());
    CHECK(connectedness_facts(parse_pattern("Q(8,4)")) == Connectedness::unknown());
}

TEST_CASE("stratum facts are internally consistent") {
    const StratumFacts facts = stratum_facts(parse_pattern("Q(-1,9)"));
    CHECK(facts.genus == 3);
    CHECK(facts.dimension == 6);
    CHECK(facts.nonempty == true);
    CHECK(facts.connectedness == Connectedness::multi(2));

    const StratumFacts abelian = stratum_facts(parse_pattern("H(2,4)"));
    CHECK(abelian.genus == 4);
    CHECK(abelian.dimension == 9);
    CHECK_FALSE(abelian.nonempty.has_value());
    CHECK(abelian.connectedness == Connectedness::unknown());
}

TEST_CASE("dimension is at least 1 on non-empty strata of positive genus") {
    EnumerationOptions opt;
    opt.max_sum = 16;
    opt.max_poles = 6;
    opt.max_marked = 1;
    for (const Pattern& p : enumerate_quadratic(opt)) {
        const StratumFacts facts = stratum_facts(p);
        CHECK(facts.dimension == 2 * facts.genus + p.size() - 2);
        if (facts.genus >= 1 && facts.nonempty.value()) CHECK(facts.dimension >= 1);
    }
}
