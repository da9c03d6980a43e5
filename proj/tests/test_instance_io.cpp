#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace domvote;
using testsupport::order_of;
using testsupport::Rng;

TEST_CASE("parse the smallest complete instance") {
  const InstanceFile file = parse_instance("m 3\nn 1\norder 1 2 3\n");
  CHECK(file.m == 3);
  CHECK(file.n == 1);
  REQUIRE(file.ballots.size() == 1);
  CHECK(std::get<LinearOrder>(file.ballots[0]) == order_of({0, 1, 2}));
  CHECK(!file.rule);
}

TEST_CASE("parse a partial ballot") {
  const InstanceFile file = parse_instance("m 3\nn 1\npartial 1\npair 2 3\n");
  REQUIRE(file.ballots.size() == 1);
  const PartialOrder& po = std::get<PartialOrder>(file.ballots[0]);
  CHECK(po.holds(1, 2));
  CHECK(po.pair_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  SECTION("cycle in a partial ballot") {
    try {
      parse_instance("m 3\nn 1\npartial 2\npair 1 2\npair 2 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 5);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("cycle"));
    }
  }
  SECTION("unknown directive") {
    try {
      parse_instance("m 3\nn 0\nballots 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("unknown directive"));
    }
  }
  SECTION("index out of range") {
    try {
      parse_instance("m 3\nn 1\norder 1 2 4\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
      CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("out of range"));
    }
  }
  SECTION("wrong pair count") {
    CHECK_THROWS_AS(parse_instance("m 3\nn 1\npartial 2\npair 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("m 3\nn 1\npartial 1\npair 1 2\npair 2 3\n"), ParseError);
  }
  SECTION("missing ballots") {
    CHECK_THROWS_AS(parse_instance("m 3\nn 2\norder 1 2 3\n"), ParseError);
  }
  SECTION("duplicate trailing directive") {
    CHECK_THROWS_AS(parse_instance("m 2\nn 0\nrule borda\nrule veto\n"), ParseError);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const InstanceFile file =
      parse_instance("# generated\nm 2\n\nn 1  # one voter\norder 2 1\nrule veto\n");
  CHECK(file.m == 2);
  REQUIRE(file.rule);
  CHECK(file.rule->kind == RuleKind::Veto);
}

TEST_CASE("trailing vote directives") {
  const InstanceFile file = parse_instance(
      "m 3\nn 1\norder 1 2 3\nrule plurality\nvm 3 2 1\nu 2 3 1\n");
  REQUIRE(file.vm);
  CHECK(*file.vm == order_of({2, 1, 0}));
  REQUIRE(file.u);
  CHECK(*file.u == order_of({1, 2, 0}));
  CHECK(!file.v);
}

TEST_CASE("rule names round-trip") {
  for (const char* name : {"plurality", "veto", "borda", "copeland", "maximin", "rankedpairs",
                           "stv", "tree", "score:3,1,0", "tree:((1,2),3)"}) {
    CHECK(rule_to_string(rule_from_string(name)) == name);
  }
  CHECK_THROWS_AS(rule_from_string("schulze"), ValidationError);
  CHECK_THROWS_AS(rule_from_string("tree:((1,2)"), ValidationError);
  CHECK_THROWS_AS(rule_from_string("score:"), ValidationError);
}

TEST_CASE("serialization round-trips") {
  SECTION("hand-built mixed instance") {
    InstanceFile file;
    file.m = 3;
    file.n = 2;
    file.ballots.emplace_back(order_of({2, 0, 1}));
    file.ballots.emplace_back(transitive_close({{0, 2}, {1, 2}}, 3));
    file.rule = VotingRule::scoring({3, 1, 0});
    file.vm = order_of({2, 1, 0});
    file.u = order_of({1, 2, 0});
    const InstanceFile reparsed = parse_instance(serialize_instance(file));
    CHECK(reparsed == file);
    // serialization is a fixed point
    CHECK(serialize_instance(reparsed) == serialize_instance(file));
  }

  SECTION("generated instances") {
    const GeneratedBordaInstance gen =
        gen_borda_domination(X3CInstance{3, {{0, 1, 2}, {0, 1, 2}}});
    InstanceFile file;
    file.m = gen.certificate.alt_count;
    file.n = gen.certificate.ballot_count;
    for (const PartialOrder& po : gen.instance.partial_profile) file.ballots.emplace_back(po);
    file.rule = gen.instance.rule;
    file.vm = gen.instance.prefs;
    file.v = gen.instance.baseline;
    file.u = gen.instance.candidate;
    const InstanceFile reparsed = parse_instance(serialize_instance(file));
    CHECK(reparsed == file);
    CHECK(reparsed.as_partial_profile() == gen.instance.partial_profile);
  }

  SECTION("random instances") {
    Rng rng(81);
    for (int round = 0; round < 40; ++round) {
      InstanceFile file;
      file.m = 2 + rng.below(4);
      file.n = 1 + rng.below(4);
      for (int i = 0; i < file.n; ++i) {
        if (rng.below(2))
          file.ballots.emplace_back(rng.random_order(file.m));
        else
          file.ballots.emplace_back(rng.random_poset(file.m, 3));
      }
      if (rng.below(2)) file.vm = rng.random_order(file.m);
      const InstanceFile reparsed = parse_instance(serialize_instance(file));
      CHECK(reparsed == file);
    }
  }
}

TEST_CASE("command-line order strings") {
  CHECK(parse_order_arg("3>2>1") == order_of({2, 1, 0}));
  CHECK(parse_order_arg("1>2") == order_of({0, 1}));
  CHECK_THROWS_AS(parse_order_arg("1>1>2"), ValidationError);
  CHECK_THROWS_AS(parse_order_arg("a>b"), ValidationError);
  CHECK_THROWS_AS(parse_order_arg(""), ValidationError);
}
