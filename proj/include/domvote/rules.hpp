#pragma once

// Voting rules over complete profiles. Each rule maps a profile to a unique
// winner; all ties are resolved by the fixed ascending-index order. Rules
// that depend only on pairwise margins (Borda, Copeland, maximin, ranked
// pairs, voting trees) are computed from the weighted majority graph, which
// makes the "same WMG, same winner" property structural.

#include "core.hpp"

namespace domvote {

enum class RuleKind {
  Scoring,
  Plurality,
  Veto,
  Borda,
  Copeland,
  Maximin,
  RankedPairs,
  Stv,
  VotingTree,
};

// Binary tree with m leaves, each labeled by a distinct alternative. An
// empty tree means the default shape: left-to-right balanced over the
// alternatives in index order.
struct VotingTree {
  struct Node {
    int leaf = -1;  // alternative when >= 0, internal node otherwise
    int left = -1;
    int right = -1;
    friend bool operator==(const Node&, const Node&) = default;
  };
  std::vector<Node> nodes;
  int root = -1;

  bool empty() const { return nodes.empty(); }

  int add_leaf(Alternative a) {
    nodes.push_back({a, -1, -1});
    return static_cast<int>(nodes.size()) - 1;
  }
  int add_internal(int left, int right) {
    nodes.push_back({-1, left, right});
    return static_cast<int>(nodes.size()) - 1;
  }

  static VotingTree balanced(int m) {
    VotingTree tree;
    tree.root = tree.build_balanced(0, m);
    return tree;
  }

  void collect_leaves(int node, std::vector<int>& out) const {
    if (node < 0 || node >= static_cast<int>(nodes.size()))
      throw ValidationError("voting tree node index out of range");
    const Node& nd = nodes[node];
    if (nd.leaf >= 0) {
      out.push_back(nd.leaf);
      return;
    }
    collect_leaves(nd.left, out);
    collect_leaves(nd.right, out);
  }

  void validate(int m) const {
    if (empty()) return;  // default shape, always valid
    std::vector<int> leaves;
    collect_leaves(root, leaves);
    if (static_cast<int>(leaves.size()) != m)
      throw ValidationError("voting tree has " + std::to_string(leaves.size()) +
                            " leaves, expected " + std::to_string(m));
    std::vector<char> seen(m, 0);
    for (int leaf : leaves) {
      if (leaf < 0 || leaf >= m)
        throw ValidationError("voting tree leaf " + std::to_string(leaf) + " out of range");
      if (seen[leaf]) throw ValidationError("duplicate voting tree leaf " + std::to_string(leaf));
      seen[leaf] = 1;
    }
  }

  friend bool operator==(const VotingTree&, const VotingTree&) = default;

 private:
  int build_balanced(int lo, int hi) {
    if (hi - lo == 1) return add_leaf(lo);
    const int mid = lo + (hi - lo + 1) / 2;
    const int left = build_balanced(lo, mid);
    const int right = build_balanced(mid, hi);
    return add_internal(left, right);
  }
};

struct VotingRule {
  RuleKind kind = RuleKind::Plurality;
  std::vector<int> scores;  // Scoring only
  VotingTree tree;          // VotingTree only
  // Copeland pairwise ties score 0 by default; when enabled, wins count 2
  // and ties 1 so scores stay integral.
  bool copeland_half_point_ties = false;

  static VotingRule of(RuleKind kind_) {
    VotingRule rule;
    rule.kind = kind_;
    return rule;
  }
  static VotingRule plurality() { return of(RuleKind::Plurality); }
  static VotingRule veto() { return of(RuleKind::Veto); }
  static VotingRule borda() { return of(RuleKind::Borda); }
  static VotingRule copeland() { return of(RuleKind::Copeland); }
  static VotingRule maximin() { return of(RuleKind::Maximin); }
  static VotingRule ranked_pairs() { return of(RuleKind::RankedPairs); }
  static VotingRule stv() { return of(RuleKind::Stv); }
  static VotingRule scoring(std::vector<int> vec) {
    VotingRule rule = of(RuleKind::Scoring);
    rule.scores = std::move(vec);
    return rule;
  }
  static VotingRule voting_tree(VotingTree shape = {}) {
    VotingRule rule = of(RuleKind::VotingTree);
    rule.tree = std::move(shape);
    return rule;
  }

  friend bool operator==(const VotingRule&, const VotingRule&) = default;
};

// Scoring vectors must be non-increasing with first entry > last entry.
inline void validate_rule(const VotingRule& rule, int m) {
  if (rule.kind == RuleKind::Scoring) {
    if (static_cast<int>(rule.scores.size()) != m)
      throw ValidationError("scoring vector length " + std::to_string(rule.scores.size()) +
                            " does not match m=" + std::to_string(m));
    for (std::size_t i = 1; i < rule.scores.size(); ++i)
      if (rule.scores[i] > rule.scores[i - 1])
        throw ValidationError("scoring vector must be non-increasing");
    if (rule.scores.front() <= rule.scores.back())
      throw ValidationError("scoring vector must have first entry > last entry");
  }
  if (rule.kind == RuleKind::VotingTree) rule.tree.validate(m);
}

inline std::vector<int> scoring_vector_for(const VotingRule& rule, int m) {
  std::vector<int> vec(m, 0);
  switch (rule.kind) {
    case RuleKind::Plurality:
      vec[0] = 1;
      return vec;
    case RuleKind::Veto:
      std::fill(vec.begin(), vec.end() - 1, 1);
      return vec;
    case RuleKind::Borda:
      for (int i = 0; i < m; ++i) vec[i] = m - 1 - i;
      return vec;
    case RuleKind::Scoring:
      validate_rule(rule, m);
      return rule.scores;
    default:
      throw ValidationError("not a positional scoring rule");
  }
}

// Antisymmetric matrix of pairwise margins: at(i,j) is the number of votes
// ranking i above j minus the number ranking j above i.
struct WeightedMajorityGraph {
  int m = 0;
  std::vector<int> margin;  // m*m, row-major

  WeightedMajorityGraph() = default;
  explicit WeightedMajorityGraph(int m_) : m(m_), margin(static_cast<std::size_t>(m_) * m_, 0) {}

  int at(int i, int j) const { return margin[static_cast<std::size_t>(i) * m + j]; }
  int& at(int i, int j) { return margin[static_cast<std::size_t>(i) * m + j]; }

  WeightedMajorityGraph plus(const WeightedMajorityGraph& other) const {
    if (other.m != m) throw ValidationError("graph size mismatch");
    WeightedMajorityGraph sum(m);
    for (std::size_t k = 0; k < margin.size(); ++k) sum.margin[k] = margin[k] + other.margin[k];
    return sum;
  }

  friend bool operator==(const WeightedMajorityGraph&, const WeightedMajorityGraph&) = default;
  friend bool operator<(const WeightedMajorityGraph& a, const WeightedMajorityGraph& b) {
    return a.m != b.m ? a.m < b.m : a.margin < b.margin;
  }
};

namespace detail {

// A profile plus at most one appended vote, viewed without copying. Used so
// the enumeration loops can evaluate "P plus the manipulator's vote" cheaply.
struct ProfileView {
  const Profile* base;
  const LinearOrder* extra;

  int size() const { return static_cast<int>(base->size()) + (extra ? 1 : 0); }
  const LinearOrder& operator[](int i) const {
    return i < static_cast<int>(base->size()) ? (*base)[i] : *extra;
  }
  int m() const { return size() == 0 ? 0 : (*this)[0].m(); }
};

inline WeightedMajorityGraph wmg_of(const ProfileView& view) {
  const int m = view.m();
  WeightedMajorityGraph g(m);
  for (int v = 0; v < view.size(); ++v) {
    const LinearOrder& vote = view[v];
    if (vote.m() != m) throw ValidationError("profile mixes alternative universes");
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const int delta = vote.prefers(i, j) ? 1 : -1;
        g.at(i, j) += delta;
        g.at(j, i) -= delta;
      }
  }
  return g;
}

inline std::vector<int> scoring_totals_of(const std::vector<int>& vec, const ProfileView& view) {
  const int m = view.m();
  if (static_cast<int>(vec.size()) != m)
    throw ValidationError("scoring vector length does not match profile");
  std::vector<int> totals(m, 0);
  for (int v = 0; v < view.size(); ++v) {
    const LinearOrder& vote = view[v];
    for (int pos = 0; pos < m; ++pos) totals[vote.alt_at(pos)] += vec[pos];
  }
  return totals;
}

inline Alternative stv_winner(const ProfileView& view) {
  const int m = view.m();
  std::vector<char> active(m, 1);
  for (int round = 0; round < m - 1; ++round) {
    std::vector<int> counts(m, 0);
    for (int v = 0; v < view.size(); ++v) {
      const LinearOrder& vote = view[v];
      for (int pos = 0; pos < m; ++pos) {
        const Alternative a = vote.alt_at(pos);
        if (active[a]) {
          ++counts[a];
          break;
        }
      }
    }
    // Eliminate the lowest plurality score; among ties, the largest index
    // (the alternative last in the tie-break order) drops out.
    int out = -1;
    for (int a = 0; a < m; ++a) {
      if (!active[a]) continue;
      if (out == -1 || counts[a] <= counts[out]) out = a;
    }
    active[out] = 0;
  }
  for (int a = 0; a < m; ++a)
    if (active[a]) return a;
  throw std::logic_error("stv left no alternative");
}

}  // namespace detail

inline WeightedMajorityGraph weighted_majority_graph(const Profile& profile,
                                                     const LinearOrder* extra = nullptr) {
  if (profile.empty() && !extra) throw ValidationError("empty profile");
  return detail::wmg_of({&profile, extra});
}

// The unique alternative with a strictly positive margin against every
// other, when one exists.
inline std::optional<Alternative> condorcet_winner(const WeightedMajorityGraph& g) {
  for (int i = 0; i < g.m; ++i) {
    bool wins_all = true;
    for (int j = 0; j < g.m && wins_all; ++j)
      if (j != i && g.at(i, j) <= 0) wins_all = false;
    if (wins_all) return i;
  }
  return std::nullopt;
}

inline std::vector<int> scoring_totals(const std::vector<int>& vec, const Profile& profile,
                                       const LinearOrder* extra = nullptr) {
  if (profile.empty() && !extra) throw ValidationError("empty profile");
  return detail::scoring_totals_of(vec, {&profile, extra});
}

inline Alternative copeland_winner(const WeightedMajorityGraph& g,
                                   bool half_point_ties = false) {
  std::vector<int> scores(g.m, 0);
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.m; ++j) {
      if (j == i) continue;
      if (g.at(i, j) > 0)
        scores[i] += 2;
      else if (g.at(i, j) == 0 && half_point_ties)
        scores[i] += 1;
    }
  return tie_break_argmax(scores);
}

inline Alternative maximin_winner(const WeightedMajorityGraph& g) {
  if (g.m == 1) return 0;
  std::vector<int> scores(g.m, 0);
  for (int i = 0; i < g.m; ++i) {
    int worst = g.at(i, i == 0 ? 1 : 0);
    for (int j = 0; j < g.m; ++j)
      if (j != i) worst = std::min(worst, g.at(i, j));
    scores[i] = worst;
  }
  return tie_break_argmax(scores);
}

// Locks pairs from the strongest margin down, skipping pairs that would
// contradict the locked relation. Equal margins are processed by ascending
// (source, target); a reversed pair always sorts after its positive twin,
// and among margin-0 twins the lower (source, target) orientation is
// considered first.
inline Alternative ranked_pairs_winner(const WeightedMajorityGraph& g) {
  const int m = g.m;
  if (m == 1) return 0;
  struct Edge {
    int margin, from, to;
  };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * (m - 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) edges.push_back({g.at(i, j), i, j});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.margin != b.margin) return a.margin > b.margin;
    if (a.from != b.from) return a.from < b.from;
    return a.to < b.to;
  });

  std::vector<char> reach(static_cast<std::size_t>(m) * m, 0);
  auto reaches = [&](int a, int b) -> char& { return reach[static_cast<std::size_t>(a) * m + b]; };
  for (const Edge& e : edges) {
    if (reaches(e.to, e.from)) continue;  // would close a cycle
    if (reaches(e.from, e.to)) continue;  // already implied
    for (int x = 0; x < m; ++x) {
      if (x != e.from && !reaches(x, e.from)) continue;
      for (int y = 0; y < m; ++y) {
        if (y != e.to && !reaches(e.to, y)) continue;
        reaches(x, y) = 1;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    bool top = true;
    for (int j = 0; j < m && top; ++j)
      if (j != i && !reaches(i, j)) top = false;
    if (top) return i;
  }
  throw std::logic_error("ranked pairs produced no total order");
}

// Pairwise ties inside the tree resolve toward the lower index.
inline Alternative voting_tree_winner(const WeightedMajorityGraph& g, const VotingTree& tree) {
  const VotingTree shaped = tree.empty() ? VotingTree::balanced(g.m) : tree;
  shaped.validate(g.m);
  auto fight = [&](Alternative a, Alternative b) {
    if (g.at(a, b) > 0) return a;
    if (g.at(a, b) < 0) return b;
    return std::min(a, b);
  };
  auto eval = [&](auto&& self, int node) -> Alternative {
    const VotingTree::Node& nd = shaped.nodes[node];
    if (nd.leaf >= 0) return nd.leaf;
    return fight(self(self, nd.left), self(self, nd.right));
  };
  return eval(eval, shaped.root);
}

namespace detail {

inline Alternative evaluate_view(const VotingRule& rule, const ProfileView& view) {
  if (view.size() == 0) throw ValidationError("empty profile");
  const int m = view.m();
  switch (rule.kind) {
    case RuleKind::Scoring:
    case RuleKind::Plurality:
    case RuleKind::Veto:
    case RuleKind::Borda:
      return tie_break_argmax(scoring_totals_of(scoring_vector_for(rule, m), view));
    case RuleKind::Copeland:
      return copeland_winner(wmg_of(view), rule.copeland_half_point_ties);
    case RuleKind::Maximin:
      return maximin_winner(wmg_of(view));
    case RuleKind::RankedPairs:
      return ranked_pairs_winner(wmg_of(view));
    case RuleKind::VotingTree:
      return voting_tree_winner(wmg_of(view), rule.tree);
    case RuleKind::Stv:
      return stv_winner(view);
  }
  throw std::logic_error("unknown rule kind");
}

}  // namespace detail

// Winner of the profile, optionally with one appended vote (the appended
// vote is not copied into the profile).
inline Alternative evaluate(const VotingRule& rule, const Profile& profile,
                            const LinearOrder* extra = nullptr) {
  return detail::evaluate_view(rule, {&profile, extra});
}

// Rules whose winner is a function of the weighted majority graph alone.
// Borda qualifies: its winner is the argmax of WMG row sums.
inline bool is_wmg_based(const VotingRule& rule) {
  switch (rule.kind) {
    case RuleKind::Borda:
    case RuleKind::Copeland:
    case RuleKind::Maximin:
    case RuleKind::RankedPairs:
    case RuleKind::VotingTree:
      return true;
    default:
      return false;
  }
}

}  // namespace domvote
