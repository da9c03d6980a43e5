#pragma once

// Polynomial-time domination and dominating-manipulation solvers for
// plurality and veto over partial-order profiles.
//
// Both rules depend on one slot per ballot: plurality counts tops, veto
// counts bottoms. A candidate outcome pair is guessed (winner d when the
// manipulator casts V, winner d' when she casts U, with d' preferred to d),
// together with exact slot counts for d and d'. The guess forces a per-
// alternative score limit on everyone else, and an extension realizing the
// guess exists iff a unit-capacity ballot-to-alternative flow network is
// saturated. Scanning all guesses decides whether switching from V to U can
// ever strictly improve the outcome; domination is one improvement
// direction holding and the reverse direction failing.

#include "extensions.hpp"
#include "flow.hpp"

namespace domvote {

// True iff no other alternative is forced above a.
inline bool can_rank_top(const PartialOrder& po, Alternative a) {
  for (int b = 0; b < po.m(); ++b)
    if (b != a && po.holds(b, a)) return false;
  return true;
}

// True iff no other alternative is forced below a.
inline bool can_rank_bottom(const PartialOrder& po, Alternative a) {
  for (int b = 0; b < po.m(); ++b)
    if (b != a && po.holds(a, b)) return false;
  return true;
}

// Lexicographically smallest extension of po that ranks a first.
inline LinearOrder extension_with_top(const PartialOrder& po, Alternative a) {
  if (!can_rank_top(po, a)) throw ValidationError(alt_name(a) + " cannot be ranked top");
  const int m = po.m();
  std::vector<int> ranking{a};
  std::vector<char> placed(m, 0);
  placed[a] = 1;
  while (static_cast<int>(ranking.size()) < m) {
    for (int next = 0; next < m; ++next) {
      if (placed[next]) continue;
      bool ready = true;
      for (int b = 0; b < m && ready; ++b)
        if (!placed[b] && b != next && po.holds(b, next)) ready = false;
      if (ready) {
        ranking.push_back(next);
        placed[next] = 1;
        break;
      }
    }
  }
  return LinearOrder(std::move(ranking));
}

// Lexicographically smallest extension of po that ranks a last.
inline LinearOrder extension_with_bottom(const PartialOrder& po, Alternative a) {
  if (!can_rank_bottom(po, a)) throw ValidationError(alt_name(a) + " cannot be ranked bottom");
  const int m = po.m();
  std::vector<int> ranking;
  std::vector<char> placed(m, 0);
  placed[a] = 1;  // reserved for the last slot
  while (static_cast<int>(ranking.size()) < m - 1) {
    for (int next = 0; next < m; ++next) {
      if (placed[next]) continue;
      bool ready = true;
      for (int b = 0; b < m && ready; ++b)
        if (!placed[b] && b != next && po.holds(b, next)) ready = false;
      if (ready) {
        ranking.push_back(next);
        placed[next] = 1;
        break;
      }
    }
  }
  ranking.push_back(a);
  return LinearOrder(std::move(ranking));
}

// The ballot-assignment network. Vertices are a source, one node per
// ballot, one node per alternative, a slack node y, and a sink. Each ballot
// sends one unit to an alternative it can place in the counted slot;
// alternatives forward to the sink directly (exact or mandatory units) or
// through y (slack units). The question is always whether the maximum flow
// equals the ballot count.
struct FlowNetwork {
  int ballot_count = 0;
  int alt_count = 0;
  std::vector<std::vector<char>> assignable;  // [ballot][alternative]
  std::vector<long long> cap_to_sink;         // per alternative
  std::vector<long long> cap_to_slack;        // per alternative
  long long slack_to_sink = 0;

  struct Result {
    long long value = 0;
    std::vector<int> ballot_assignment;  // alternative per ballot; -1 when unassigned
  };

  Result run() const {
    const int n = ballot_count;
    const int m = alt_count;
    const int source = 0;
    const auto ballot_vertex = [](int i) { return 1 + i; };
    const auto alt_vertex = [n](int j) { return 1 + n + j; };
    const int slack = 1 + n + m;
    const int sink = 2 + n + m;

    MaxFlowGraph graph(n + m + 3);
    std::vector<std::vector<std::pair<int, int>>> ballot_edges(n);  // (alternative, edge id)
    for (int i = 0; i < n; ++i) {
      graph.add_edge(source, ballot_vertex(i), 1);
      for (int j = 0; j < m; ++j)
        if (assignable[i][j])
          ballot_edges[i].emplace_back(j, graph.add_edge(ballot_vertex(i), alt_vertex(j), 1));
    }
    for (int j = 0; j < m; ++j) {
      if (cap_to_sink[j] > 0) graph.add_edge(alt_vertex(j), sink, cap_to_sink[j]);
      if (cap_to_slack[j] > 0) graph.add_edge(alt_vertex(j), slack, cap_to_slack[j]);
    }
    if (slack_to_sink > 0) graph.add_edge(slack, sink, slack_to_sink);

    Result result;
    result.value = graph.max_flow(source, sink);
    result.ballot_assignment.assign(n, -1);
    for (int i = 0; i < n; ++i)
      for (const auto& [alt, edge] : ballot_edges[i])
        if (graph.flow_on(edge) == 1) {
          result.ballot_assignment[i] = alt;
          break;
        }
    return result;
  }
};

// One guessed outcome pair with pinned slot counts, ready to solve.
struct AdmissibleProblem {
  Alternative before_winner = 0;  // winner when the manipulator casts the from-vote
  Alternative after_winner = 0;   // winner when she casts the to-vote; preferred to before_winner
  int before_winner_score = 0;    // exact slot count for before_winner among the n ballots
  int after_winner_score = 0;     // exact slot count for after_winner
  // Per-alternative slot limits implied by the guess: upper caps for
  // plurality, mandatory lower bounds for veto. Entries at the two winners
  // hold their exact pinned counts.
  std::vector<long long> other_limits;
  FlowNetwork network;
};

namespace detail {

inline void require_flow_rule(const VotingRule& rule) {
  if (rule.kind != RuleKind::Plurality && rule.kind != RuleKind::Veto)
    throw ValidationError("flow solver handles plurality and veto only");
}

// Winner comparison at given scores: higher wins, ties to the lower index.
inline bool beats_max(long long score_a, int a, long long score_b, int b) {
  return score_a > score_b || (score_a == score_b && a < b);
}
// Veto counts: fewer vetoes wins, ties to the lower index.
inline bool beats_min(long long vetoes_a, int a, long long vetoes_b, int b) {
  return vetoes_a < vetoes_b || (vetoes_a == vetoes_b && a < b);
}

struct SlotContext {
  bool veto = false;
  int n = 0;
  int m = 0;
  Alternative anchor_from = 0;  // counted slot of the from-vote
  Alternative anchor_to = 0;    // counted slot of the to-vote
  std::vector<std::vector<char>> assignable;
};

inline SlotContext make_slot_context(const PartialProfile& pp, const LinearOrder& from_vote,
                                     const LinearOrder& to_vote, const VotingRule& rule) {
  require_flow_rule(rule);
  if (pp.empty()) throw ValidationError("empty partial profile");
  SlotContext ctx;
  ctx.veto = rule.kind == RuleKind::Veto;
  ctx.n = static_cast<int>(pp.size());
  ctx.m = pp.front().m();
  for (const PartialOrder& po : pp)
    if (po.m() != ctx.m) throw ValidationError("profile mixes alternative universes");
  if (from_vote.m() != ctx.m || to_vote.m() != ctx.m)
    throw ValidationError("vote size does not match profile");
  ctx.anchor_from = ctx.veto ? from_vote.bottom() : from_vote.top();
  ctx.anchor_to = ctx.veto ? to_vote.bottom() : to_vote.top();
  ctx.assignable.resize(ctx.n, std::vector<char>(ctx.m, 0));
  for (int i = 0; i < ctx.n; ++i)
    for (int j = 0; j < ctx.m; ++j)
      ctx.assignable[i][j] =
          ctx.veto ? can_rank_bottom(pp[i], j) : can_rank_top(pp[i], j);
  return ctx;
}

// Switching votes only moves the score of the two anchor alternatives, so
// the winner can change from d to d' only when one of them is pinned to the
// matching anchor.
inline bool anchor_condition(const SlotContext& ctx, Alternative before_winner,
                             Alternative after_winner) {
  if (ctx.veto) return after_winner == ctx.anchor_from || before_winner == ctx.anchor_to;
  return before_winner == ctx.anchor_from || after_winner == ctx.anchor_to;
}

inline void append_problems(const SlotContext& ctx, Alternative d, Alternative dp, int l,
                            std::vector<AdmissibleProblem>& out) {
  const int n = ctx.n;
  const int m = ctx.m;
  if (l < 0 || l > n) return;
  for (int ep = 0; ep <= n; ++ep) {
    if (ctx.veto) {
      const long long vetoes_from_d = l + (d == ctx.anchor_from);
      const long long vetoes_from_dp = ep + (dp == ctx.anchor_from);
      const long long vetoes_to_d = l + (d == ctx.anchor_to);
      const long long vetoes_to_dp = ep + (dp == ctx.anchor_to);
      if (!beats_min(vetoes_from_d, d, vetoes_from_dp, dp)) continue;
      if (!beats_min(vetoes_to_dp, dp, vetoes_to_d, d)) continue;

      std::vector<long long> bounds(m, 0);
      bounds[d] = l;
      bounds[dp] = ep;
      long long mandatory = l + ep;
      for (int c = 0; c < m && mandatory <= n; ++c) {
        if (c == d || c == dp) continue;
        const long long from_bound = vetoes_from_d + (c < d) - (c == ctx.anchor_from);
        const long long to_bound = vetoes_to_dp + (c < dp) - (c == ctx.anchor_to);
        bounds[c] = std::max({from_bound, to_bound, 0LL});
        mandatory += bounds[c];
      }
      if (mandatory > n) continue;

      AdmissibleProblem problem;
      problem.before_winner = d;
      problem.after_winner = dp;
      problem.before_winner_score = l;
      problem.after_winner_score = ep;
      problem.other_limits = bounds;
      problem.network.ballot_count = n;
      problem.network.alt_count = m;
      problem.network.assignable = ctx.assignable;
      problem.network.cap_to_sink = bounds;
      problem.network.cap_to_slack.assign(m, 0);
      for (int c = 0; c < m; ++c)
        if (c != d && c != dp) problem.network.cap_to_slack[c] = n;
      problem.network.slack_to_sink = n - mandatory;
      out.push_back(std::move(problem));
    } else {
      const long long total_from_d = l + (d == ctx.anchor_from);
      const long long total_from_dp = ep + (dp == ctx.anchor_from);
      const long long total_to_d = l + (d == ctx.anchor_to);
      const long long total_to_dp = ep + (dp == ctx.anchor_to);
      if (!beats_max(total_from_d, d, total_from_dp, dp)) continue;
      if (!beats_max(total_to_dp, dp, total_to_d, d)) continue;
      if (l + ep > n) continue;

      std::vector<long long> caps(m, 0);
      caps[d] = l;
      caps[dp] = ep;
      bool feasible = true;
      for (int c = 0; c < m && feasible; ++c) {
        if (c == d || c == dp) continue;
        const long long from_cap = total_from_d - (c < d) - (c == ctx.anchor_from);
        const long long to_cap = total_to_dp - (c < dp) - (c == ctx.anchor_to);
        caps[c] = std::min({from_cap, to_cap, static_cast<long long>(n)});
        if (caps[c] < 0) feasible = false;
      }
      if (!feasible) continue;

      AdmissibleProblem problem;
      problem.before_winner = d;
      problem.after_winner = dp;
      problem.before_winner_score = l;
      problem.after_winner_score = ep;
      problem.other_limits = caps;
      problem.network.ballot_count = n;
      problem.network.alt_count = m;
      problem.network.assignable = ctx.assignable;
      problem.network.cap_to_sink.assign(m, 0);
      problem.network.cap_to_sink[d] = l;
      problem.network.cap_to_sink[dp] = ep;
      problem.network.cap_to_slack = caps;
      problem.network.cap_to_slack[d] = 0;
      problem.network.cap_to_slack[dp] = 0;
      problem.network.slack_to_sink = n - l - ep;
      out.push_back(std::move(problem));
    }
  }
}

struct FlowWitness {
  Profile extension;
  Alternative from_winner = 0;
  Alternative to_winner = 0;
};

inline std::optional<FlowWitness> scan_improvements(const PartialProfile& pp,
                                                    const LinearOrder& prefs,
                                                    const LinearOrder& from_vote,
                                                    const LinearOrder& to_vote,
                                                    const VotingRule& rule, bool want_witness) {
  const SlotContext ctx = make_slot_context(pp, from_vote, to_vote, rule);
  if (prefs.m() != ctx.m) throw ValidationError("vote size does not match profile");
  std::vector<AdmissibleProblem> problems;
  for (int l = 0; l <= ctx.n; ++l) {
    for (Alternative d = 0; d < ctx.m; ++d) {
      for (Alternative dp = 0; dp < ctx.m; ++dp) {
        if (dp == d || !prefs.prefers(dp, d)) continue;
        if (!anchor_condition(ctx, d, dp)) continue;
        problems.clear();
        append_problems(ctx, d, dp, l, problems);
        for (const AdmissibleProblem& problem : problems) {
          const FlowNetwork::Result result = problem.network.run();
          if (result.value != ctx.n) continue;
          FlowWitness witness;
          witness.from_winner = d;
          witness.to_winner = dp;
          if (want_witness) {
            witness.extension.reserve(ctx.n);
            for (int i = 0; i < ctx.n; ++i) {
              const Alternative slot = result.ballot_assignment[i];
              witness.extension.push_back(ctx.veto ? extension_with_bottom(pp[i], slot)
                                                   : extension_with_top(pp[i], slot));
            }
          }
          return witness;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// All consistent problems for the guess (before_winner, after_winner) with
// before_winner pinned to l ballots; the after-winner count ranges over
// [0, n]. Guesses that force a negative cap or an inconsistent head-to-head
// are omitted.
inline std::vector<AdmissibleProblem> build_admissible_problems(
    const PartialProfile& pp, const LinearOrder& prefs, const LinearOrder& from_vote,
    const LinearOrder& to_vote, Alternative before_winner, Alternative after_winner, int l,
    const VotingRule& rule) {
  const detail::SlotContext ctx = detail::make_slot_context(pp, from_vote, to_vote, rule);
  if (before_winner == after_winner) throw ValidationError("winners must differ");
  if (!prefs.prefers(after_winner, before_winner))
    throw ValidationError("after-winner must be preferred to before-winner");
  if (!detail::anchor_condition(ctx, before_winner, after_winner))
    throw ValidationError("neither winner is pinned to its vote's counted slot");
  std::vector<AdmissibleProblem> out;
  detail::append_problems(ctx, before_winner, after_winner, l, out);
  return out;
}

// Is there an extension where casting to_vote yields a strictly better
// winner (by prefs) than casting from_vote?
inline bool possible_improvement(const PartialProfile& pp, const LinearOrder& prefs,
                                 const LinearOrder& from_vote, const LinearOrder& to_vote,
                                 const VotingRule& rule) {
  return detail::scan_improvements(pp, prefs, from_vote, to_vote, rule, false).has_value();
}

struct FlowImprovementWitness {
  Profile extension;
  Alternative from_winner = 0;
  Alternative to_winner = 0;
};

// As possible_improvement, but reconstructs a witness extension from the
// saturating flow.
inline std::optional<FlowImprovementWitness> find_possible_improvement_witness(
    const PartialProfile& pp, const LinearOrder& prefs, const LinearOrder& from_vote,
    const LinearOrder& to_vote, const VotingRule& rule) {
  auto witness = detail::scan_improvements(pp, prefs, from_vote, to_vote, rule, true);
  if (!witness) return std::nullopt;
  return FlowImprovementWitness{std::move(witness->extension), witness->from_winner,
                                witness->to_winner};
}

// candidate dominates baseline iff switching to candidate can improve the
// outcome somewhere and switching back never can.
inline bool flow_domination(const PartialProfile& pp, const LinearOrder& prefs,
                            const LinearOrder& baseline, const LinearOrder& candidate,
                            const VotingRule& rule) {
  return possible_improvement(pp, prefs, baseline, candidate, rule) &&
         !possible_improvement(pp, prefs, candidate, baseline, rule);
}

// The truthful order with a moved to the front.
inline LinearOrder promote_to_top(const LinearOrder& base, Alternative a) {
  std::vector<int> ranking{a};
  for (int pos = 0; pos < base.m(); ++pos)
    if (base.alt_at(pos) != a) ranking.push_back(base.alt_at(pos));
  return LinearOrder(std::move(ranking));
}

// The truthful order with `first` moved to the front and `last` to the back.
inline LinearOrder with_top_and_bottom(const LinearOrder& base, Alternative first,
                                       Alternative last) {
  std::vector<int> ranking{first};
  for (int pos = 0; pos < base.m(); ++pos) {
    const Alternative a = base.alt_at(pos);
    if (a != first && a != last) ranking.push_back(a);
  }
  ranking.push_back(last);
  return LinearOrder(std::move(ranking));
}

// Tries one canonical vote per counted-slot choice, in tie-break order. For
// plurality only the top of the candidate vote matters, so one vote per
// promoted alternative suffices; veto outcomes depend on the bottom, so
// every (top, bottom) pair is tried.
inline std::optional<LinearOrder> flow_dominating_manipulation(const PartialProfile& pp,
                                                               const LinearOrder& prefs,
                                                               const VotingRule& rule) {
  detail::require_flow_rule(rule);
  const int m = prefs.m();
  if (rule.kind == RuleKind::Plurality) {
    for (Alternative a = 0; a < m; ++a) {
      if (a == prefs.top()) continue;
      const LinearOrder candidate = promote_to_top(prefs, a);
      if (flow_domination(pp, prefs, prefs, candidate, rule)) return candidate;
    }
    return std::nullopt;
  }
  for (Alternative a = 0; a < m; ++a) {
    if (a == prefs.top()) continue;
    for (Alternative b = 0; b < m; ++b) {
      if (b == a) continue;
      const LinearOrder candidate = with_top_and_bottom(prefs, a, b);
      if (flow_domination(pp, prefs, prefs, candidate, rule)) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace domvote
