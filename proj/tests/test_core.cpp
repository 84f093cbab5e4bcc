#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace th;

TEST_CASE("measures of a system with one empty-LHS rule") {
    const auto s = sys({{{}, 5}});
    const Measures m = measures(s);
    CHECK(m.n == 0);
    CHECK(m.d == 0);
    CHECK(m.k == 0);
    CHECK(m.attrs.empty());
}

TEST_CASE("measures collect attribute sets and value sets") {
    const auto s = sys({{{eq(1, 0), eq(2, 1)}, 1}, {{eq(1, 1)}, 2}});
    const Measures m = measures(s);
    CHECK(m.n == 2);
    CHECK(m.d == 2);
    CHECK(m.k == 2);
    CHECK(m.values.at(AttributeId{1}) == std::vector<Nat>{0, 1});
    CHECK(m.values.at(AttributeId{2}) == std::vector<Nat>{1});
}

TEST_CASE("measures of a single unit rule") {
    const auto s = sys({{{eq(3, 7)}, 0}});
    const Measures m = measures(s);
    CHECK(m.n == 1);
    CHECK(m.d == 1);
    CHECK(m.k == 1);
    CHECK(m.values.at(AttributeId{3}) == std::vector<Nat>{7});
}

TEST_CASE("measures invariants on random systems") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        SplitMix64 rng(seed);
        GenParams p;
        p.attrs = 1 + rng.bounded(6);
        p.max_len = 1 + rng.bounded(p.attrs);
        p.min_len = 1;
        p.rules = 1 + rng.bounded(6);
        p.values = 1 + rng.bounded(3);
        p.seed = seed;
        const Measures m = measures(random_system(p));
        CHECK(m.d <= m.n);
        if (m.n > 0) CHECK(m.k >= 1);
    }
}

TEST_CASE("equation system consistency") {
    CHECK(eqs({}).consistent());

    // duplicates collapse under set semantics
    const auto dup = eqs({set_to(1, 0), set_to(2, 1), set_to(1, 0)});
    CHECK(dup.consistent());
    CHECK(dup.size() == 2);

    // star differs from every concrete value
    CHECK_FALSE(eqs({set_to(1, 0), set_star(1)}).consistent());
}

TEST_CASE("consistency ignores insertion order and duplication") {
    SplitMix64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Assignment> entries;
        const std::size_t count = 1 + rng.bounded(6);
        for (std::size_t i = 0; i < count; ++i) {
            const Nat attr = static_cast<Nat>(1 + rng.bounded(3));
            entries.push_back(rng.bounded(4) == 0
                                  ? set_star(attr)
                                  : set_to(attr, static_cast<Nat>(rng.bounded(2))));
        }
        const bool expected = eqs(entries).consistent();

        std::vector<Assignment> shuffled = entries;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.bounded(i)]);
        shuffled.push_back(shuffled[rng.bounded(shuffled.size())]);  // duplicate one
        CHECK(eqs(shuffled).consistent() == expected);
    }
}

TEST_CASE("realizable rules by direct containment") {
    const auto s = sys({{{eq(1, 0), eq(2, 1)}, 1}, {{eq(1, 1)}, 2}});
    CHECK(realizable_rules(s, tup({set_to(1, 0), set_to(2, 1)})) == std::vector<RuleId>{0});
    CHECK(realizable_rules(s, tup({set_star(1), set_star(2)})).empty());
}

TEST_CASE("empty left-hand sides are realizable for every tuple") {
    const auto s = sys({{{}, 5}, {{eq(1, 0)}, 1}});
    CHECK(realizable_rules(s, tup({set_star(1)})) == std::vector<RuleId>{0});
}

TEST_CASE("realizability shrinks when values are starred out") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        SplitMix64 rng(seed * 7 + 1);
        GenParams p;
        p.attrs = 1 + rng.bounded(5);
        p.max_len = 1 + rng.bounded(p.attrs);
        p.min_len = 1;
        p.rules = 1 + rng.bounded(5);
        p.values = 1 + rng.bounded(3);
        p.seed = seed;
        const RuleSystem s = random_system(p);
        const Measures m = measures(s);

        SplitMix64 trng(seed);
        const ExtendedTuple full = random_tuple(m, trng);
        std::vector<Assignment> starred;
        for (const auto& e : full.assignments())
            starred.push_back(rng.bounded(2) == 0 ? Assignment{e.attr, ExtendedValue::star()}
                                                  : e);
        const auto fewer = realizable_rules(s, ExtendedTuple(starred));
        const auto more = realizable_rules(s, full);
        CHECK(std::includes(more.begin(), more.end(), fewer.begin(), fewer.end()));
    }
}

TEST_CASE("degenerate answer returns every rule id") {
    CHECK(degenerate_answer(sys({{{}, 1}})) == std::vector<RuleId>{0});
    CHECK(degenerate_answer(sys({{{}, 1}, {{}, 2}})) == std::vector<RuleId>{0, 1});
    CHECK_THROWS_AS(degenerate_answer(sys({{{eq(1, 0)}, 1}})), DomainError);
}

TEST_CASE("rules reject repeated attributes") {
    CHECK_THROWS_AS(sys({{{eq(1, 0), eq(1, 1)}, 2}}), DomainError);
}

TEST_CASE("rule systems must be nonempty") {
    CHECK_THROWS_AS(RuleSystem(std::vector<DecisionRule>{}), DomainError);
}

TEST_CASE("extended value ordering and equality") {
    CHECK(ExtendedValue::star() == ExtendedValue::star());
    CHECK(ExtendedValue::of(3) == ExtendedValue::of(3));
    CHECK(ExtendedValue::star() != ExtendedValue::of(0));
    CHECK(ExtendedValue::of(2) != ExtendedValue::of(3));
    CHECK_THROWS_AS(ExtendedValue::star().value(), DomainError);
}
