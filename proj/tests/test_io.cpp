#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace th;

TEST_CASE("rule lines parse into sorted left-hand sides") {
    const auto s = sys("a2=1 & a1=0 -> 1");
    REQUIRE(s.size() == 1);
    CHECK(s.rules()[0].lhs() == std::vector<Equation>{eq(1, 0), eq(2, 1)});
    CHECK(s.rules()[0].decision() == 1);
}

TEST_CASE("empty left-hand sides, comments and blank lines") {
    const auto s = sys("# header comment\n\n-> 5\na1=0 -> 1  # trailing comment\n\n");
    REQUIRE(s.size() == 2);
    CHECK(s.rules()[0].lhs_empty());
    CHECK(s.rules()[0].decision() == 5);
    CHECK(s.rules()[1].lhs() == std::vector<Equation>{eq(1, 0)});
}

TEST_CASE("whitespace around separators is optional") {
    CHECK(sys("a1=0&a2=1->1") == sys("a1=0 & a2=1 -> 1"));
}

TEST_CASE("parse errors carry line and column positions") {
    try {
        parse_rules("a1=0 -> 1\na1=0 & a1=1 -> 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 8);
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("repeated attribute"));
    }

    CHECK_THROWS_AS(parse_rules("a1=0 -> "), ParseError);
    CHECK_THROWS_AS(parse_rules("a1 -> 1"), ParseError);
    CHECK_THROWS_AS(parse_rules("a1=0 -> 1 junk"), ParseError);
    CHECK_THROWS_AS(parse_rules("a1=99999999999 -> 1"), ParseError);
    CHECK_THROWS_AS(parse_rules(""), ParseError);
    CHECK_THROWS_AS(parse_rules("# only a comment\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity on random systems") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        SplitMix64 rng(seed);
        GenParams p;
        p.attrs = 1 + rng.bounded(8);
        p.max_len = 1 + rng.bounded(p.attrs);
        p.min_len = 1;
        p.rules = 1 + rng.bounded(10);
        p.values = 1 + rng.bounded(4);
        p.seed = seed;
        const RuleSystem s = random_system(p);
        CHECK(parse_rules(serialize_rules(s)) == s);
    }
}

TEST_CASE("parse then serialize is the identity on canonical text") {
    const std::string canonical = "a1=0 & a2=1 -> 1\n-> 5\na3=2 -> 0\n";
    CHECK(serialize_rules(parse_rules(canonical)) == canonical);
}

TEST_CASE("tuple strings must cover the attribute set exactly") {
    const auto s = sys("a1=0 & a2=1 -> 1\na1=1 -> 2\n");
    CHECK(parse_tuple(s, "a1=0,a2=1") == tup({set_to(1, 0), set_to(2, 1)}));
    CHECK(parse_tuple(s, "a2=*,a1=1") == tup({set_to(1, 1), set_star(2)}));

    // values the system never mentions fold to star
    CHECK(parse_tuple(s, "a1=9,a2=1") == tup({set_star(1), set_to(2, 1)}));

    CHECK_THROWS_WITH(parse_tuple(s, "a1=0,a2=1,a3=0"),
                      Catch::Matchers::ContainsSubstring("unknown attribute"));
    CHECK_THROWS_WITH(parse_tuple(s, "a1=0"),
                      Catch::Matchers::ContainsSubstring("missing attribute"));
    CHECK_THROWS_WITH(parse_tuple(s, "a1=0,a1=1,a2=1"),
                      Catch::Matchers::ContainsSubstring("repeated attribute"));
    CHECK_THROWS_AS(parse_tuple(s, "a1=0, a2=1,"), ParseError);
}

TEST_CASE("tuple serialization round-trips") {
    const auto s = sys("a1=0 & a2=1 -> 1\na1=1 -> 2\n");
    const auto t = parse_tuple(s, "a1=1,a2=*");
    CHECK(serialize_tuple(t) == "a1=1,a2=*");
    CHECK(parse_tuple(s, serialize_tuple(t)) == t);
}

TEST_CASE("simulation results serialize to the documented JSON shape") {
    const auto s = sys("a1=0 & a2=1 -> 1\na1=1 -> 2\n");
    const auto res =
        simulate(s, tuple_provider(parse_tuple(s, "a1=0,a2=1")), CoverStrategy::greedy);
    std::ifstream golden(std::string(RULESIM_DOCS_DIR) + "/simulate_result.golden.json");
    REQUIRE(golden.is_open());
    std::ostringstream buf;
    buf << golden.rdbuf();
    CHECK(to_json(res).dump(2) + "\n" == buf.str());
}

TEST_CASE("csv rows format optionals as empty cells") {
    CHECK(csv_header() ==
          "seed,n,d,k,rules,tuple_id,strategy,depth,rounds,h_exact,depth_ub,answer_size");

    CsvRow row;
    row.seed = 42;
    row.n = 3;
    row.d = 2;
    row.k = 2;
    row.rules = 4;
    row.tuple_id = 7;
    row.strategy = CoverStrategy::rule;
    row.depth = 3;
    row.rounds = 2;
    row.answer_size = 1;
    CHECK(to_csv_row(row) == "42,3,2,2,4,7,rule,3,2,,,1");

    row.strategy = CoverStrategy::greedy;
    row.h_exact = 2;
    row.depth_ub = 10.788898;
    CHECK(to_csv_row(row) == "42,3,2,2,4,7,greedy,3,2,2,10.788898,1");
}

TEST_CASE("loading a missing rule file is a domain error") {
    CHECK_THROWS_AS(load_rules("/nonexistent/rules.txt"), DomainError);
}
