#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// generators and independent oracles. The oracles deliberately avoid the
// library's implementation paths so the two sides of every comparison stay
// independent.

#include <numeric>
#include <random>

#include "domvote/domvote.hpp"

namespace testsupport {

using namespace domvote;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound).
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }

  LinearOrder random_order(int m) {
    std::vector<int> ranking(m);
    std::iota(ranking.begin(), ranking.end(), 0);
    for (int i = m - 1; i > 0; --i) std::swap(ranking[i], ranking[below(i + 1)]);
    return LinearOrder(std::move(ranking));
  }

  // A random partial order with at most max_undetermined unknown pairs:
  // start from a random chain and keep a random subset of its pairs.
  PartialOrder random_poset(int m, int max_undetermined) {
    const LinearOrder chain = random_order(m);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs.emplace_back(chain.alt_at(i), chain.alt_at(j));
    while (true) {
      std::vector<std::pair<int, int>> kept;
      for (const auto& pair : pairs)
        if (below(4) != 0) kept.push_back(pair);
      const PartialOrder po = PartialOrder::from_pairs(m, kept);
      if (po.undetermined_pair_count() <= max_undetermined) return po;
      // too loose; force more of the chain back in
      pairs = kept;
      for (const auto& pair : PartialOrder::chain(chain).pairs())
        if (!po.holds(pair.first, pair.second) && below(2) == 0) pairs.push_back(pair);
    }
  }

  Profile random_profile(int m, int n) {
    Profile profile;
    profile.reserve(n);
    for (int i = 0; i < n; ++i) profile.push_back(random_order(m));
    return profile;
  }

 private:
  std::mt19937_64 engine_;
};

// Exhaustive subset search for an exact cover.
inline bool x3c_solvable(const X3CInstance& x3c) {
  const int t = static_cast<int>(x3c.sets.size());
  for (int mask = 0; mask < (1 << t); ++mask) {
    std::vector<int> covered(x3c.universe_size, 0);
    bool clean = true;
    for (int j = 0; j < t && clean; ++j) {
      if (!(mask & (1 << j))) continue;
      for (int element : x3c.sets[j])
        if (++covered[element] > 1) clean = false;
    }
    if (!clean) continue;
    bool all = true;
    for (int count : covered)
      if (count != 1) all = false;
    if (all) return true;
  }
  return false;
}

// Independent ranked-pairs oracle: same documented pair order, but locking
// recomputes the full transitive closure from the locked edge list at every
// step instead of maintaining it incrementally.
inline Alternative ranked_pairs_oracle(const WeightedMajorityGraph& g) {
  const int m = g.m;
  if (m == 1) return 0;
  struct Entry {
    int margin, from, to;
  };
  std::vector<Entry> order;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) order.push_back({g.at(i, j), i, j});
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    if (a.margin != b.margin) return a.margin > b.margin;
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  });

  std::vector<std::pair<int, int>> locked;
  const auto closure = [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (const auto& [a, b] : edges) reach[a][b] = 1;
    for (int k = 0; k < m; ++k)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    return reach;
  };
  for (const Entry& e : order) {
    auto candidate = locked;
    candidate.emplace_back(e.from, e.to);
    const auto reach = closure(candidate);
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i)
      if (reach[i][i]) acyclic = false;
    if (acyclic) locked = std::move(candidate);
  }
  const auto reach = closure(locked);
  for (int i = 0; i < m; ++i) {
    bool top = true;
    for (int j = 0; j < m && top; ++j)
      if (j != i && !reach[i][j]) top = false;
    if (top) return i;
  }
  throw std::logic_error("oracle: no top");
}

// Independent max-flow oracle: plain Edmonds-Karp over an adjacency matrix.
inline long long max_flow_oracle(int vertices, const std::vector<std::array<long long, 3>>& edges,
                                 int source, int sink) {
  std::vector<std::vector<long long>> capacity(vertices, std::vector<long long>(vertices, 0));
  for (const auto& [from, to, cap] : edges)
    capacity[from][to] += cap;
  long long flow = 0;
  while (true) {
    std::vector<int> parent(vertices, -1);
    parent[source] = source;
    std::vector<int> queue{source};
    for (std::size_t head = 0; head < queue.size() && parent[sink] == -1; ++head) {
      const int v = queue[head];
      for (int w = 0; w < vertices; ++w)
        if (parent[w] == -1 && capacity[v][w] > 0) {
          parent[w] = v;
          queue.push_back(w);
        }
    }
    if (parent[sink] == -1) return flow;
    long long bottleneck = std::numeric_limits<long long>::max();
    for (int v = sink; v != source; v = parent[v])
      bottleneck = std::min(bottleneck, capacity[parent[v]][v]);
    for (int v = sink; v != source; v = parent[v]) {
      capacity[parent[v]][v] -= bottleneck;
      capacity[v][parent[v]] += bottleneck;
    }
    flow += bottleneck;
  }
}

inline LinearOrder order_of(std::initializer_list<int> ranking) {
  return LinearOrder(std::vector<int>(ranking));
}

// Copeland possible-winner instances with verified side conditions, used by
// the transformation tests. The first four admit c as a possible winner
// (one ballot leaves the top pair open and the tie-break hands the shifted
// graph to d*); the last two do not.
struct PwFixture {
  PossibleWinnerInstance pw;
  Alternative d_star;
  std::set<Alternative> members;
  bool c_possible;
};

inline std::vector<PwFixture> pw_fixtures() {
  const auto chain = [](std::vector<int> ranking) {
    return PartialOrder::chain(LinearOrder(std::move(ranking)));
  };
  const auto chain_without_top_pair = [](std::vector<int> ranking) {
    const int m = static_cast<int>(ranking.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (i != 0 || j != 1) pairs.emplace_back(ranking[i], ranking[j]);
    return PartialOrder::from_pairs(m, pairs);
  };

  std::vector<PwFixture> out;
  out.push_back({{VotingRule::copeland(),
                  {chain({0, 1, 2, 3}), chain({3, 2, 1, 0}), chain_without_top_pair({2, 0, 1, 3})},
                  2},
                 0,
                 {3},
                 true});
  out.push_back({{VotingRule::copeland(),
                  {chain({0, 1, 2, 3}), chain({3, 2, 1, 0}), chain_without_top_pair({1, 0, 2, 3})},
                  1},
                 0,
                 {3},
                 true});
  out.push_back({{VotingRule::copeland(),
                  {chain({0, 1, 2, 3, 4}), chain({4, 3, 2, 1, 0}),
                   chain_without_top_pair({2, 0, 1, 3, 4})},
                  2},
                 0,
                 {3},
                 true});
  out.push_back({{VotingRule::copeland(),
                  {chain({0, 1, 2, 3, 4}), chain({4, 3, 2, 1, 0}),
                   chain_without_top_pair({2, 0, 1, 3, 4})},
                  2},
                 0,
                 {3, 4},
                 true});
  out.push_back({{VotingRule::copeland(),
                  {PartialOrder::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {3, 1}, {3, 2}}),
                   PartialOrder::from_pairs(4, {{0, 1}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}})},
                  2},
                 0,
                 {1},
                 false});
  out.push_back({{VotingRule::copeland(),
                  {PartialOrder::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
                   PartialOrder::from_pairs(4, {{2, 0}, {2, 1}, {2, 3}, {3, 1}}),
                   PartialOrder::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {3, 1}, {3, 2}})},
                  1},
                 0,
                 {2},
                 false});
  return out;
}

// All posets on m alternatives with at most max_undetermined unknown pairs,
// found by brute force over orientations of the pair set.
inline std::vector<PartialOrder> all_posets(int m, int max_undetermined) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) slots.emplace_back(a, b);
  const int k = static_cast<int>(slots.size());
  std::vector<PartialOrder> out;
  std::vector<int> state(k, 0);  // 0: undetermined, 1: a>b, 2: b>a
  while (true) {
    std::vector<std::pair<int, int>> pairs;
    int undetermined = 0;
    for (int i = 0; i < k; ++i) {
      if (state[i] == 0)
        ++undetermined;
      else if (state[i] == 1)
        pairs.push_back(slots[i]);
      else
        pairs.emplace_back(slots[i].second, slots[i].first);
    }
    if (undetermined <= max_undetermined) {
      try {
        const PartialOrder po = PartialOrder::from_pairs(m, pairs);
        // keep only transitively closed orientations (the closure must not
        // add pairs, or the same poset would be emitted twice)
        if (po.pair_count() == static_cast<int>(pairs.size())) out.push_back(po);
      } catch (const ValidationError&) {
      }
    }
    int pos = k - 1;
    while (pos >= 0 && state[pos] == 2) state[pos--] = 0;
    if (pos < 0) break;
    ++state[pos];
  }
  return out;
}

}  // namespace testsupport
