#pragma once

// Hardness-instance machinery: the exact-cover-by-3-sets construction that
// embeds a cover question into a Borda domination instance, the grouping of
// extension WMGs by winner, and the transformations from restricted
// possible-winner instances to domination and dominating-manipulation
// instances for WMG-based rules.

#include <array>
#include <map>

#include "domination.hpp"

namespace domvote {

struct X3CInstance {
  int universe_size = 0;                   // q, divisible by 3
  std::vector<std::array<int, 3>> sets;    // 3-element subsets of {0..q-1}

  void validate() const {
    if (universe_size <= 0 || universe_size % 3 != 0)
      throw ValidationError("universe size " + std::to_string(universe_size) +
                            " is not a positive multiple of 3");
    for (const auto& set : sets) {
      for (int element : set)
        if (element < 0 || element >= universe_size)
          throw ValidationError("set element " + std::to_string(element) + " out of range");
      if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2])
        throw ValidationError("sets must contain 3 distinct elements");
    }
  }
};

struct DominationInstance {
  VotingRule rule;
  PartialProfile partial_profile;
  LinearOrder prefs;      // the manipulator's true preferences
  LinearOrder baseline;   // the vote V under test
  LinearOrder candidate;  // the vote U that may dominate V
};

struct DominatingManipulationInstance {
  VotingRule rule;
  PartialProfile partial_profile;
  LinearOrder prefs;
};

struct PossibleWinnerInstance {
  VotingRule rule;
  PartialProfile partial_profile;
  Alternative c;
};

// Score bookkeeping for a generated Borda instance. q_scores are the Borda
// totals of the canonical extension (every relaxed ballot restored to its
// source order) plus the padding and the baseline vote.
struct BordaScoreCertificate {
  int alt_count = 0;
  int ballot_count = 0;
  long long pad_shift = 0;  // uniform extra padding blocks added to keep counts nonnegative
  long long copies_c = 0;
  long long copies_w = 0;
  std::vector<long long> copies_v;
  std::vector<long long> q_scores;
  long long w_minus_c = 0;            // must equal 4q/3
  std::vector<long long> c_minus_v;   // must be all 1
  long long d_max_score = 0;          // d's score under the worst extension and vote
  long long rivals_min_score = 0;     // the smallest score any rival can fall to
};

struct GeneratedBordaInstance {
  DominationInstance instance;
  BordaScoreCertificate certificate;
};

// Builds a Borda domination instance whose answer matches the cover
// question: the candidate vote dominates the baseline iff some subfamily of
// the 3-sets covers each universe element exactly once.
//
// Alternatives: the distinguished pair c (index 0) and w (index 1), one
// alternative per universe element (indices 2..q+1), and a filler d (index
// q+2), so the fixed tie-break order is c, w, elements, d. One relaxed
// ballot per 3-set leaves exactly the four pairs between w and the set plus
// d undetermined; letting w fall below d in a ballot costs w four Borda
// points and grants one to each set member and to d. Padding vote pairs pin
// the totals so that c catches w exactly when the slipped ballots form an
// exact cover.
inline GeneratedBordaInstance gen_borda_domination(const X3CInstance& x3c) {
  x3c.validate();
  const int q = x3c.universe_size;
  const int t = static_cast<int>(x3c.sets.size());
  const int m = q + 3;
  const Alternative c = 0;
  const Alternative w = 1;
  const Alternative d = q + 2;
  const auto element_alt = [](int element) { return 2 + element; };

  PartialProfile pp;
  Profile canonical;  // the extension restoring each relaxed ballot
  for (const auto& set : x3c.sets) {
    std::array<int, 3> members = set;
    std::sort(members.begin(), members.end());
    std::vector<int> ranking{w};
    for (int element : members) ranking.push_back(element_alt(element));
    ranking.push_back(d);
    ranking.push_back(c);
    for (int element = 0; element < q; ++element)
      if (element != members[0] && element != members[1] && element != members[2])
        ranking.push_back(element_alt(element));
    const LinearOrder source(ranking);
    canonical.push_back(source);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const int high = source.alt_at(i);
        const int low = source.alt_at(j);
        const bool relaxed = high == w && (low == d || low == element_alt(members[0]) ||
                                           low == element_alt(members[1]) ||
                                           low == element_alt(members[2]));
        if (!relaxed) pairs.emplace_back(high, low);
      }
    pp.push_back(PartialOrder::from_pairs(m, pairs));
  }

  std::vector<int> prefs_ranking{w, c, d};
  std::vector<int> candidate_ranking{w, d, c};
  for (int element = 0; element < q; ++element) {
    prefs_ranking.push_back(element_alt(element));
    candidate_ranking.push_back(element_alt(element));
  }
  const LinearOrder prefs(prefs_ranking);
  const LinearOrder candidate(candidate_ranking);

  const std::vector<int> borda_vec = scoring_vector_for(VotingRule::borda(), m);
  const std::vector<int> q1_scores = scoring_totals(borda_vec, canonical, &prefs);

  // One vote pair per padded alternative a: {a > d > others, rev(others) > a > d}.
  // Each pair adds m to a, m-1 to every other non-d alternative, m-2 to d.
  const auto padding_pair = [&](Alternative a) {
    std::vector<int> others;
    for (int alt = 0; alt < m; ++alt)
      if (alt != a && alt != d) others.push_back(alt);
    std::vector<int> first{a, d};
    first.insert(first.end(), others.begin(), others.end());
    std::vector<int> second(others.rbegin(), others.rend());
    second.push_back(a);
    second.push_back(d);
    return std::make_pair(LinearOrder(std::move(first)), LinearOrder(std::move(second)));
  };

  const long long target = static_cast<long long>(t) * m;
  const long long quarter = 4LL * q / 3;
  std::vector<long long> copies(m, 0);
  copies[c] = target - q1_scores[c];
  copies[w] = target + quarter - q1_scores[w];
  for (int element = 0; element < q; ++element)
    copies[element_alt(element)] = target - 1 - q1_scores[element_alt(element)];

  // Tiny instances can push a count negative; adding one full block (one
  // pair per padded alternative) shifts every relevant total equally, so
  // the score identities survive a uniform bump.
  long long shift = 0;
  for (int alt = 0; alt < m; ++alt)
    if (alt != d) shift = std::max(shift, -copies[alt]);
  for (int alt = 0; alt < m; ++alt)
    if (alt != d) copies[alt] += shift;

  Profile padding;
  for (int alt = 0; alt < m; ++alt) {
    if (alt == d) continue;
    for (long long copy = 0; copy < copies[alt]; ++copy) {
      auto [first, second] = padding_pair(alt);
      padding.push_back(std::move(first));
      padding.push_back(std::move(second));
    }
  }
  for (const LinearOrder& vote : padding) pp.push_back(PartialOrder::chain(vote));

  Profile q_profile = canonical;
  q_profile.insert(q_profile.end(), padding.begin(), padding.end());
  const std::vector<int> q_scores_int = scoring_totals(borda_vec, q_profile, &prefs);

  BordaScoreCertificate cert;
  cert.alt_count = m;
  cert.ballot_count = static_cast<int>(pp.size());
  cert.pad_shift = shift;
  cert.copies_c = copies[c];
  cert.copies_w = copies[w];
  for (int element = 0; element < q; ++element)
    cert.copies_v.push_back(copies[element_alt(element)]);
  cert.q_scores.assign(q_scores_int.begin(), q_scores_int.end());
  cert.w_minus_c = cert.q_scores[w] - cert.q_scores[c];
  long long rivals_min = cert.q_scores[c] - 1;
  rivals_min = std::min(rivals_min, cert.q_scores[w] - 4LL * t);
  for (int element = 0; element < q; ++element) {
    cert.c_minus_v.push_back(cert.q_scores[c] - cert.q_scores[element_alt(element)]);
    rivals_min = std::min(rivals_min, cert.q_scores[element_alt(element)]);
  }
  cert.d_max_score = cert.q_scores[d] + t + 1;
  cert.rivals_min_score = rivals_min;

  DominationInstance instance{VotingRule::borda(), std::move(pp), prefs, prefs, candidate};
  return {std::move(instance), std::move(cert)};
}

// Groups the WMGs of all extensions of pp by winner. Winners that never
// occur are absent; each group is sorted and deduplicated.
inline std::map<Alternative, std::vector<WeightedMajorityGraph>> wmg_partition(
    const VotingRule& rule, const PartialProfile& pp,
    std::uint64_t cap = kDefaultEnumerationCap) {
  std::map<Alternative, std::vector<WeightedMajorityGraph>> groups;
  for_each_profile(
      InformationSet::partial(pp),
      [&](const Profile& p) {
        groups[evaluate(rule, p)].push_back(weighted_majority_graph(p));
        return true;
      },
      cap);
  for (auto& [winner, graphs] : groups) {
    std::sort(graphs.begin(), graphs.end());
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
  }
  return groups;
}

// The graph with a weight-2 edge from each member of the set toward the
// target and no other edges.
inline WeightedMajorityGraph shift_graph(int m, Alternative target,
                                         const std::set<Alternative>& members) {
  WeightedMajorityGraph g(m);
  for (Alternative member : members) {
    g.at(member, target) = 2;
    g.at(target, member) = -2;
  }
  return g;
}

// Any profile whose WMG equals g. All off-diagonal margins must share one
// parity. Even margins are built from canceling vote pairs that each move a
// single ordered pair by 2; odd margins start from one fixed vote.
inline Profile profile_from_wmg(const WeightedMajorityGraph& g) {
  const int m = g.m;
  if (m <= 0) throw ValidationError("graph has no alternatives");
  std::vector<int> identity(m);
  for (int i = 0; i < m; ++i) identity[i] = i;
  if (m == 1) return {LinearOrder(identity)};

  int parity = -1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int p = ((g.at(i, j) % 2) + 2) % 2;
      if (parity == -1)
        parity = p;
      else if (parity != p)
        throw ValidationError("margins mix parities; no profile has this WMG");
    }

  Profile out;
  WeightedMajorityGraph current(m);
  if (parity == 1) {
    out.push_back(LinearOrder(identity));
    current = weighted_majority_graph(out);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int delta = g.at(i, j) - current.at(i, j);
      const int a = delta > 0 ? i : j;
      const int b = delta > 0 ? j : i;
      std::vector<int> others;
      for (int alt = 0; alt < m; ++alt)
        if (alt != a && alt != b) others.push_back(alt);
      for (int step = 0; step < std::abs(delta) / 2; ++step) {
        std::vector<int> first{a, b};
        first.insert(first.end(), others.begin(), others.end());
        std::vector<int> second(others.rbegin(), others.rend());
        second.push_back(a);
        second.push_back(b);
        out.push_back(LinearOrder(std::move(first)));
        out.push_back(LinearOrder(std::move(second)));
      }
    }
  if (out.empty()) {
    out.push_back(LinearOrder(identity));
    out.push_back(out.front().reversed());
  }
  return out;
}

namespace detail {

inline void check_pw_arguments(const PossibleWinnerInstance& pw, Alternative d_star,
                               const std::set<Alternative>& members) {
  if (!is_wmg_based(pw.rule)) throw ValidationError("rule is not WMG-based");
  if (pw.partial_profile.empty()) throw ValidationError("empty partial profile");
  const int m = pw.partial_profile.front().m();
  if (pw.c < 0 || pw.c >= m || d_star < 0 || d_star >= m)
    throw ValidationError("alternative out of range");
  if (d_star == pw.c) throw ValidationError("d* must differ from c");
  if (members.empty()) throw ValidationError("the shifted set must be nonempty");
  for (Alternative member : members) {
    if (member < 0 || member >= m) throw ValidationError("alternative out of range");
    if (member == pw.c || member == d_star)
      throw ValidationError("the shifted set may not contain c or d*");
  }
}

inline LinearOrder pw_baseline_vote(int m, Alternative c, Alternative d_star,
                                    const std::set<Alternative>& members) {
  std::vector<int> ranking{d_star, c};
  for (Alternative member : members) ranking.push_back(member);
  for (int alt = 0; alt < m; ++alt)
    if (alt != c && alt != d_star && !members.count(alt)) ranking.push_back(alt);
  return LinearOrder(std::move(ranking));
}

inline LinearOrder pw_candidate_vote(int m, Alternative c, Alternative d_star,
                                     const std::set<Alternative>& members) {
  std::vector<int> ranking{d_star};
  for (Alternative member : members) ranking.push_back(member);
  ranking.push_back(c);
  for (int alt = 0; alt < m; ++alt)
    if (alt != c && alt != d_star && !members.count(alt)) ranking.push_back(alt);
  return LinearOrder(std::move(ranking));
}

}  // namespace detail

// Appends the reverse of the baseline vote to the profile, so that casting
// the baseline leaves every extension's WMG untouched while casting the
// candidate adds exactly the shift graph. Then the candidate dominates the
// baseline iff c can win some extension of the original instance.
inline DominationInstance pw1_to_domination(const PossibleWinnerInstance& pw, Alternative d_star,
                                            const std::set<Alternative>& members) {
  detail::check_pw_arguments(pw, d_star, members);
  const int m = pw.partial_profile.front().m();
  const LinearOrder baseline = detail::pw_baseline_vote(m, pw.c, d_star, members);
  const LinearOrder candidate = detail::pw_candidate_vote(m, pw.c, d_star, members);
  PartialProfile pp = pw.partial_profile;
  pp.push_back(PartialOrder::chain(baseline.reversed()));
  return {pw.rule, std::move(pp), baseline, baseline, candidate};
}

// Same transformed profile, posed as a dominating-manipulation question.
inline DominatingManipulationInstance pw2_to_dominating_manipulation(
    const PossibleWinnerInstance& pw, Alternative d_star, const std::set<Alternative>& members) {
  detail::check_pw_arguments(pw, d_star, members);
  const int m = pw.partial_profile.front().m();
  const LinearOrder prefs = detail::pw_baseline_vote(m, pw.c, d_star, members);
  PartialProfile pp = pw.partial_profile;
  pp.push_back(PartialOrder::chain(prefs.reversed()));
  return {pw.rule, std::move(pp), prefs};
}

// Brute-force check of the side conditions the transformations rely on:
// (1) shifting any graph where c wins must make d* win, (2) shifting a
// graph where anyone else wins must not change the winner, (3) no member of
// the shifted set may ever win. Level 2 additionally requires that nobody
// outside {c, d*} ever wins.
inline bool verify_pw_conditions(const PossibleWinnerInstance& pw, Alternative d_star,
                                 const std::set<Alternative>& members, int level,
                                 std::uint64_t cap = kDefaultEnumerationCap) {
  detail::check_pw_arguments(pw, d_star, members);
  if (level != 1 && level != 2) throw ValidationError("level must be 1 or 2");
  const int m = pw.partial_profile.front().m();
  const auto partition = wmg_partition(pw.rule, pw.partial_profile, cap);

  for (Alternative member : members)
    if (partition.count(member)) return false;
  if (level == 2) {
    for (const auto& [winner, graphs] : partition)
      if (winner != pw.c && winner != d_star) return false;
  }

  const WeightedMajorityGraph shift = shift_graph(m, pw.c, members);
  for (const auto& [winner, graphs] : partition) {
    for (const WeightedMajorityGraph& g : graphs) {
      const Alternative shifted_winner = evaluate(pw.rule, profile_from_wmg(g.plus(shift)));
      if (winner == pw.c) {
        if (shifted_winner != d_star) return false;
      } else if (shifted_winner != winner) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace domvote
