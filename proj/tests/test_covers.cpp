#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace th;

namespace {

bool is_cover(const RuleSystem& s, const std::vector<AttributeId>& attrs) {
    for (const auto& r : s.rules()) {
        if (r.lhs_empty()) continue;
        bool hit = false;
        for (auto a : attrs) hit = hit || r.mentions(a);
        if (!hit) return false;
    }
    return true;
}

RuleSystem random_small(std::uint64_t seed, std::size_t max_attrs = 6) {
    SplitMix64 rng(seed);
    GenParams p;
    p.attrs = 1 + rng.bounded(max_attrs);
    p.max_len = 1 + rng.bounded(p.attrs);
    p.min_len = 1;
    p.rules = 1 + rng.bounded(8);
    p.values = 1 + rng.bounded(3);
    p.seed = seed;
    return random_system(p);
}

}  // namespace

TEST_CASE("greedy cover breaks count ties by minimum attribute index") {
    const auto cover = greedy_cover(sys({{{eq(1, 0), eq(2, 1)}, 1}}));
    CHECK(cover.attributes() == std::vector<AttributeId>{AttributeId{1}});
}

TEST_CASE("greedy cover picks the attribute covering the most rules") {
    const auto cover = greedy_cover(sys({{{eq(1, 0)}, 1}, {{eq(1, 1)}, 2}, {{eq(2, 0)}, 3}}));
    CHECK(cover.attributes() == std::vector<AttributeId>{AttributeId{1}, AttributeId{2}});
}

TEST_CASE("greedy cover finds a shared attribute") {
    const auto cover = greedy_cover(sys({{{eq(2, 0), eq(3, 0)}, 1}, {{eq(3, 1), eq(4, 1)}, 2}}));
    CHECK(cover.attributes() == std::vector<AttributeId>{AttributeId{3}});
}

TEST_CASE("rule cover takes whole rules in id order") {
    CHECK(rule_cover(sys({{{eq(1, 0), eq(2, 1)}, 1}})).attributes() ==
          std::vector<AttributeId>{AttributeId{1}, AttributeId{2}});
    // id order wins even when storage order differs
    const RuleSystem shuffled({DecisionRule(1, {eq(3, 0)}, 0), DecisionRule(0, {eq(2, 0)}, 0)});
    CHECK(rule_cover(shuffled).attributes() ==
          std::vector<AttributeId>{AttributeId{2}, AttributeId{3}});
    CHECK(rule_cover(sys({{{eq(1, 0)}, 1}, {{eq(1, 1)}, 2}})).attributes() ==
          std::vector<AttributeId>{AttributeId{1}});
    CHECK(rule_cover(sys({{{eq(1, 0)}, 1}, {{eq(2, 0), eq(3, 0)}, 2}})).attributes() ==
          std::vector<AttributeId>{AttributeId{1}, AttributeId{2}, AttributeId{3}});
}

TEST_CASE("exact minimum cover") {
    const auto empty = exact_min_cover(sys({{{}, 1}}));
    CHECK(empty.beta == 0);
    CHECK(empty.cover.attributes().empty());

    const auto disjoint = exact_min_cover(sys({{{eq(1, 0)}, 1}, {{eq(2, 0)}, 2}}));
    CHECK(disjoint.beta == 2);
    CHECK(disjoint.cover.attributes() ==
          std::vector<AttributeId>{AttributeId{1}, AttributeId{2}});

    const auto shared = exact_min_cover(sys({{{eq(1, 0), eq(2, 0)}, 1}, {{eq(2, 0), eq(3, 0)}, 2}}));
    CHECK(shared.beta == 1);
    CHECK(shared.cover.attributes() == std::vector<AttributeId>{AttributeId{2}});

    // ties among minimum covers resolve to the lexicographically smallest
    const auto tie = exact_min_cover(sys({{{eq(1, 0), eq(2, 0)}, 1}}));
    CHECK(tie.beta == 1);
    CHECK(tie.cover.attributes() == std::vector<AttributeId>{AttributeId{1}});
}

TEST_CASE("cover constructions reject attribute-free systems") {
    const auto s = sys({{{}, 1}});
    CHECK_THROWS_AS(greedy_cover(s), DomainError);
    CHECK_THROWS_AS(rule_cover(s), DomainError);
}

TEST_CASE("exact cover enforces its attribute budget") {
    GenParams p;
    p.attrs = 25;
    p.rules = 5;
    p.min_len = 1;
    p.max_len = 25;
    p.values = 2;
    p.seed = 3;
    const RuleSystem s = random_system(p);
    if (measures(s).n > 20) CHECK_THROWS_AS(exact_min_cover(s), BudgetError);
    CHECK_THROWS_AS(exact_min_cover(s, 2), BudgetError);
}

TEST_CASE("all three constructions produce valid covers") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const RuleSystem s = random_small(seed);
        const auto g = greedy_cover(s);
        const auto r = rule_cover(s);
        const auto e = exact_min_cover(s);
        CHECK(is_cover(s, g.attributes()));
        CHECK(is_cover(s, r.attributes()));
        CHECK(is_cover(s, e.cover.attributes()));
        CHECK(e.beta <= g.size());
        CHECK(e.beta <= r.size());
    }
}

TEST_CASE("cover constructions are deterministic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const RuleSystem s = random_small(seed);
        CHECK(greedy_cover(s).attributes() == greedy_cover(s).attributes());
        CHECK(rule_cover(s).attributes() == rule_cover(s).attributes());
        CHECK(exact_min_cover(s).cover.attributes() == exact_min_cover(s).cover.attributes());
    }
}

TEST_CASE("greedy cover of the reduct respects the set-cover bound") {
    // |B| <= beta * ln|reduct| + 1
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const RuleSystem reduct = max_reduct(random_small(seed));
        if (measures(reduct).n == 0) continue;
        const auto greedy = greedy_cover(reduct);
        const auto exact = exact_min_cover(reduct);
        const double bound =
            static_cast<double>(exact.beta) * std::log(static_cast<double>(reduct.size())) + 1.0;
        CHECK(static_cast<double>(greedy.size()) <= bound);
    }
}

TEST_CASE("node cover construction validates the cover property") {
    const auto s = sys({{{eq(1, 0)}, 1}, {{eq(2, 0)}, 2}});
    CHECK_THROWS_AS(NodeCover({AttributeId{1}}, s), DomainError);
}
