#pragma once

// Brute-force reference solvers for the domination and dominating
// manipulation problems over any enumerable information set. A vote U
// dominates a vote V when, judged by the manipulator's true preferences,
// U's winner is never worse than V's across the information set and
// strictly better for at least one member.

#include <atomic>
#include <thread>

#include "extensions.hpp"

namespace domvote {

struct DominationVerdict {
  bool dominates = false;
  // First member of E (in enumeration order) where the candidate vote wins
  // strictly better, and first where it wins strictly worse. Enumeration
  // stops at the first degradation, so the improvement witness may be
  // absent even when one exists later in the order.
  std::optional<Profile> improvement_witness;
  std::optional<Profile> degradation_witness;
};

// Does `candidate` dominate `baseline` given true preferences `prefs`?
inline DominationVerdict dominates(const VotingRule& rule, const InformationSet& info,
                                   const LinearOrder& prefs, const LinearOrder& candidate,
                                   const LinearOrder& baseline,
                                   std::uint64_t cap = kDefaultEnumerationCap) {
  DominationVerdict verdict;
  for_each_profile(
      info,
      [&](const Profile& p) {
        const Alternative with_candidate = evaluate(rule, p, &candidate);
        const Alternative with_baseline = evaluate(rule, p, &baseline);
        if (prefs.prefers(with_candidate, with_baseline)) {
          if (!verdict.improvement_witness) verdict.improvement_witness = p;
        } else if (prefs.prefers(with_baseline, with_candidate)) {
          verdict.degradation_witness = p;
          return false;
        }
        return true;
      },
      cap);
  verdict.dominates = verdict.improvement_witness.has_value() &&
                      !verdict.degradation_witness.has_value();
  return verdict;
}

// Scans all m!-1 other votes in lexicographic order and returns the first
// one that dominates the truthful vote. With jobs > 1 the scan is
// partitioned across threads; the result is still the lexicographically
// first dominating vote.
inline std::optional<LinearOrder> find_dominating_manipulation(
    const VotingRule& rule, const InformationSet& info, const LinearOrder& prefs,
    std::uint64_t cap = kDefaultEnumerationCap, int jobs = 1) {
  const int m = info.m();
  if (prefs.m() != m) throw ValidationError("vote size does not match information set");
  if (m > 8) throw ValidationError("manipulation search requires m <= 8");
  const std::vector<LinearOrder> candidates = all_linear_orders(m);

  if (jobs <= 1) {
    for (const LinearOrder& candidate : candidates) {
      if (candidate == prefs) continue;
      if (dominates(rule, info, prefs, candidate, prefs, cap).dominates) return candidate;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> best{candidates.size()};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int worker = 0; worker < jobs; ++worker) {
    workers.emplace_back([&, worker] {
      for (std::size_t i = worker; i < candidates.size(); i += jobs) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (candidates[i] == prefs) continue;
        if (dominates(rule, info, prefs, candidates[i], prefs, cap).dominates) {
          std::size_t seen = best.load();
          while (i < seen && !best.compare_exchange_weak(seen, i)) {
          }
          break;
        }
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  const std::size_t found = best.load();
  if (found == candidates.size()) return std::nullopt;
  return candidates[found];
}

// Exhaustively tests every ordered pair of distinct votes against the
// no-information set F_n. Returns the first (prefs, dominating vote)
// counterexample, or nothing when the rule is immune at this size.
inline std::optional<std::pair<LinearOrder, LinearOrder>> check_no_info_immunity(
    const VotingRule& rule, int m, int n, std::uint64_t cap = kDefaultEnumerationCap) {
  const InformationSet info = InformationSet::no_information(m, n);
  const std::uint64_t size = information_set_size(info);
  if (size > cap) throw EnumerationCapError(size, cap);
  const std::vector<LinearOrder> orders = all_linear_orders(m);
  for (const LinearOrder& prefs : orders) {
    for (const LinearOrder& candidate : orders) {
      if (candidate == prefs) continue;
      if (dominates(rule, info, prefs, candidate, prefs, cap).dominates)
        return std::make_pair(prefs, candidate);
    }
  }
  return std::nullopt;
}

}  // namespace domvote
