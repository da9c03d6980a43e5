#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace domvote;
using testsupport::order_of;
using testsupport::Rng;

TEST_CASE("make_linear_order validates and ranks") {
  const LinearOrder identity = make_linear_order({0, 1, 2});
  CHECK(identity.rank_of(0) == 0);
  CHECK(identity.rank_of(2) == 2);
  CHECK(identity.prefers(0, 2));

  const LinearOrder reversal = make_linear_order({2, 1, 0});
  CHECK(reversal.top() == 2);
  CHECK(reversal.bottom() == 0);
  CHECK(reversal.prefers(2, 0));

  CHECK_THROWS_WITH(make_linear_order({0, 0, 2}),
                    Catch::Matchers::ContainsSubstring("duplicate alternative 0"));
  CHECK_THROWS_AS(make_linear_order({0, 1, 5}), ValidationError);
  CHECK_THROWS_AS(make_linear_order({}), ValidationError);
}

TEST_CASE("transitive_close closes chains and rejects cycles") {
  const PartialOrder chain = transitive_close({{0, 1}, {1, 2}}, 3);
  CHECK(chain.holds(0, 1));
  CHECK(chain.holds(1, 2));
  CHECK(chain.holds(0, 2));
  CHECK(chain.pair_count() == 3);
  CHECK(chain.undetermined_pair_count() == 0);

  const PartialOrder empty = transitive_close({}, 3);
  CHECK(empty.pair_count() == 0);
  CHECK(empty.undetermined_pair_count() == 3);

  CHECK_THROWS_WITH(transitive_close({{0, 1}, {1, 0}}, 2),
                    Catch::Matchers::ContainsSubstring("cycle 0->1->0"));
  CHECK_THROWS_AS(transitive_close({{0, 0}}, 2), ValidationError);
  CHECK_THROWS_AS(transitive_close({{0, 3}}, 3), ValidationError);
  // indirect cycle through the closure
  CHECK_THROWS_AS(transitive_close({{0, 1}, {1, 2}, {2, 0}}, 3), ValidationError);
}

TEST_CASE("tie_break_argmax picks the lowest index among maxima") {
  CHECK(tie_break_argmax({3, 3, 1}) == 0);
  CHECK(tie_break_argmax({1, 2, 3}) == 2);
  CHECK(tie_break_argmax({0, 0, 0}) == 0);
  CHECK_THROWS_AS(tie_break_argmax({}), ValidationError);
}

TEST_CASE("tie_break_argmax postcondition holds on random inputs") {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const int size = 1 + rng.below(8);
    std::vector<int> scores;
    for (int i = 0; i < size; ++i) scores.push_back(rng.below(5));
    const int winner = tie_break_argmax(scores);
    for (int i = 0; i < size; ++i) {
      CHECK(scores[winner] >= scores[i]);
      if (i < winner) CHECK(scores[winner] > scores[i]);
    }
  }
}

TEST_CASE("exactly one of prefers(a,b) and prefers(b,a) holds") {
  Rng rng(12);
  for (int round = 0; round < 100; ++round) {
    const int m = 2 + rng.below(5);
    const LinearOrder order = rng.random_order(m);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        CHECK(order.prefers(a, b) != order.prefers(b, a));
  }
}

TEST_CASE("transitive_close is idempotent") {
  Rng rng(13);
  for (int round = 0; round < 100; ++round) {
    const PartialOrder po = rng.random_poset(2 + rng.below(5), 10);
    const PartialOrder reclosed = transitive_close(po.pairs(), po.m());
    CHECK(reclosed == po);
  }
}

TEST_CASE("a total partial order determines exactly one linear order") {
  Rng rng(14);
  for (int round = 0; round < 50; ++round) {
    const LinearOrder order = rng.random_order(2 + rng.below(5));
    const PartialOrder chain = PartialOrder::chain(order);
    CHECK(chain.undetermined_pair_count() == 0);
    REQUIRE(chain.as_linear_order().has_value());
    CHECK(*chain.as_linear_order() == order);
    CHECK(linear_extensions(chain).size() == 1);
  }
  const PartialOrder loose = transitive_close({{0, 1}}, 3);
  CHECK(!loose.as_linear_order().has_value());
}

TEST_CASE("incremental pair insertion matches batch closure") {
  Rng rng(15);
  for (int round = 0; round < 50; ++round) {
    const int m = 3 + rng.below(3);
    const PartialOrder target = rng.random_poset(m, 10);
    PartialOrder incremental(m);
    for (const auto& [a, b] : target.pairs()) incremental.add_pair(a, b);
    CHECK(incremental == target);
  }
}
