#pragma once

// Information sets and their brute-force enumeration. An information set
// describes the profiles of the non-manipulators that the manipulator
// considers possible: a single known profile, all n-profiles, all profiles
// with a given current winner, or all extensions of a partial-order
// profile. Enumeration is lexicographic and deterministic; its exact size
// is counted before iteration and a configurable cap refuses oversized
// sets loudly instead of hanging.

#include <cstdint>
#include <set>
#include <variant>

#include "rules.hpp"

namespace domvote {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(std::uint64_t count_, std::uint64_t cap_)
      : std::runtime_error("enumeration size " + format(count_) + " exceeds cap " +
                           std::to_string(cap_)),
        count(count_),
        cap(cap_) {}

  std::uint64_t count;  // saturates at UINT64_MAX
  std::uint64_t cap;

 private:
  static std::string format(std::uint64_t count_) {
    return count_ == UINT64_MAX ? "over 2^64" : std::to_string(count_);
  }
};

namespace detail {

inline std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

inline std::uint64_t factorial_sat(int m) {
  std::uint64_t out = 1;
  for (int i = 2; i <= m; ++i) out = mul_sat(out, static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace detail

// All m! linear orders in lexicographic order of their ranking sequences.
inline std::vector<LinearOrder> all_linear_orders(int m) {
  if (m <= 0) throw ValidationError("m must be positive");
  if (m > 12) throw ValidationError("refusing to materialize " + std::to_string(m) + "! orders");
  std::vector<int> ranking(m);
  for (int i = 0; i < m; ++i) ranking[i] = i;
  std::vector<LinearOrder> out;
  do {
    out.push_back(LinearOrder(ranking));
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

// Visits every linear extension of po in lexicographic order of ranking
// sequences. The visitor returns false to stop early; the function returns
// false iff the visitor stopped it.
template <typename Visitor>
bool for_each_linear_extension(const PartialOrder& po, Visitor&& visit) {
  const int m = po.m();
  if (m > 32) throw ValidationError("extension enumeration handles at most 32 alternatives");
  std::vector<std::uint32_t> pred_mask(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (po.holds(b, a)) pred_mask[a] |= std::uint32_t{1} << b;

  std::vector<int> ranking;
  ranking.reserve(m);
  std::uint32_t placed = 0;
  auto recurse = [&](auto&& self) -> bool {
    if (static_cast<int>(ranking.size()) == m) return visit(LinearOrder(ranking));
    for (int a = 0; a < m; ++a) {
      const std::uint32_t bit = std::uint32_t{1} << a;
      if (placed & bit) continue;
      if ((pred_mask[a] & ~placed) != 0) continue;  // an unplaced alternative precedes a
      placed |= bit;
      ranking.push_back(a);
      const bool keep_going = self(self);
      ranking.pop_back();
      placed &= ~bit;
      if (!keep_going) return false;
    }
    return true;
  };
  return recurse(recurse);
}

inline std::vector<LinearOrder> linear_extensions(const PartialOrder& po) {
  std::vector<LinearOrder> out;
  for_each_linear_extension(po, [&](const LinearOrder& order) {
    out.push_back(order);
    return true;
  });
  return out;
}

// Counts linear extensions without enumerating them, by dynamic programming
// over downsets. Saturates at UINT64_MAX; relations on more than 20
// alternatives are only counted when total.
inline std::uint64_t count_linear_extensions(const PartialOrder& po) {
  const int m = po.m();
  if (po.is_total()) return 1;
  if (m > 20) return UINT64_MAX;
  std::vector<std::uint32_t> pred_mask(m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (po.holds(b, a)) pred_mask[a] |= std::uint32_t{1} << b;

  const std::uint32_t full = (m == 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  std::vector<std::uint64_t> count(static_cast<std::size_t>(full) + 1, 0);
  count[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint64_t total = 0;
    for (int a = 0; a < m; ++a) {
      const std::uint32_t bit = std::uint32_t{1} << a;
      if (!(mask & bit)) continue;
      if ((pred_mask[a] & ~(mask ^ bit)) != 0) continue;
      const std::uint64_t sub = count[mask ^ bit];
      if (sub > UINT64_MAX - total) return UINT64_MAX;
      total += sub;
    }
    count[mask] = total;
  }
  return count[full];
}

inline std::uint64_t count_profile_extensions(const PartialProfile& pp) {
  std::uint64_t total = 1;
  for (const PartialOrder& po : pp) total = detail::mul_sat(total, count_linear_extensions(po));
  return total;
}

// Visits every extension of the partial profile. The Cartesian product is
// lexicographic with the first ballot most significant. The profile passed
// to the visitor is reused between calls; copy it to keep it.
template <typename Visitor>
bool for_each_profile_extension(const PartialProfile& pp, Visitor&& visit) {
  std::vector<std::vector<LinearOrder>> choices;
  choices.reserve(pp.size());
  for (const PartialOrder& po : pp) choices.push_back(linear_extensions(po));

  const int n = static_cast<int>(pp.size());
  Profile scratch;
  scratch.reserve(n);
  for (const auto& c : choices) scratch.push_back(c.front());
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    if (!visit(const_cast<const Profile&>(scratch))) return false;
    int pos = n - 1;
    while (pos >= 0) {
      if (++digit[pos] < choices[pos].size()) {
        scratch[pos] = choices[pos][digit[pos]];
        break;
      }
      digit[pos] = 0;
      scratch[pos] = choices[pos][0];
      --pos;
    }
    if (pos < 0) return true;
  }
}

inline std::vector<Profile> profile_extensions(const PartialProfile& pp) {
  std::vector<Profile> out;
  for_each_profile_extension(pp, [&](const Profile& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

// The set E of possible non-manipulator profiles, in one of four compact
// forms.
class InformationSet {
 public:
  struct Complete {
    Profile profile;
  };
  struct NoInformation {
    int m;
    int n;
  };
  struct WinnerOnly {
    VotingRule rule;
    Alternative winner;
    int m;
    int n;
  };
  struct Partial {
    PartialProfile profile;
  };

  static InformationSet complete(Profile profile) {
    if (profile.empty()) throw ValidationError("complete information needs a nonempty profile");
    return InformationSet(Complete{std::move(profile)});
  }
  static InformationSet no_information(int m, int n) {
    check_sizes(m, n);
    return InformationSet(NoInformation{m, n});
  }
  static InformationSet winner_only(VotingRule rule, Alternative winner, int m, int n) {
    check_sizes(m, n);
    if (winner < 0 || winner >= m) throw ValidationError("winner out of range");
    return InformationSet(WinnerOnly{std::move(rule), winner, m, n});
  }
  static InformationSet partial(PartialProfile profile) {
    if (profile.empty()) throw ValidationError("partial information needs a nonempty profile");
    return InformationSet(Partial{std::move(profile)});
  }

  int m() const {
    if (auto* c = std::get_if<Complete>(&v_)) return c->profile.front().m();
    if (auto* n = std::get_if<NoInformation>(&v_)) return n->m;
    if (auto* w = std::get_if<WinnerOnly>(&v_)) return w->m;
    return std::get<Partial>(v_).profile.front().m();
  }
  int n() const {
    if (auto* c = std::get_if<Complete>(&v_)) return static_cast<int>(c->profile.size());
    if (auto* n = std::get_if<NoInformation>(&v_)) return n->n;
    if (auto* w = std::get_if<WinnerOnly>(&v_)) return w->n;
    return static_cast<int>(std::get<Partial>(v_).profile.size());
  }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

 private:
  template <typename T>
  explicit InformationSet(T value) : v_(std::move(value)) {}

  static void check_sizes(int m, int n) {
    if (m <= 0) throw ValidationError("m must be positive");
    if (n <= 0) throw ValidationError("n must be positive");
  }

  std::variant<Complete, NoInformation, WinnerOnly, Partial> v_;
};

// Number of profiles enumeration will visit, saturating at UINT64_MAX. For
// winner-only sets this counts the unfiltered space, which is what the
// enumeration actually walks.
inline std::uint64_t information_set_size(const InformationSet& info) {
  if (info.get_if<InformationSet::Complete>()) return 1;
  if (auto* p = info.get_if<InformationSet::Partial>())
    return count_profile_extensions(p->profile);
  std::uint64_t orders = detail::factorial_sat(info.m());
  std::uint64_t total = 1;
  for (int i = 0; i < info.n(); ++i) total = detail::mul_sat(total, orders);
  return total;
}

// Visits every member of E in lexicographic order. Throws
// EnumerationCapError before visiting anything when the walk would exceed
// the cap. The profile reference is reused between calls.
template <typename Visitor>
bool for_each_profile(const InformationSet& info, Visitor&& visit,
                      std::uint64_t cap = kDefaultEnumerationCap) {
  const std::uint64_t size = information_set_size(info);
  if (size > cap) throw EnumerationCapError(size, cap);

  if (auto* c = info.get_if<InformationSet::Complete>()) return visit(c->profile);
  if (auto* p = info.get_if<InformationSet::Partial>())
    return for_each_profile_extension(p->profile, visit);

  const auto* w = info.get_if<InformationSet::WinnerOnly>();
  const int m = info.m();
  const int n = info.n();
  const std::vector<LinearOrder> orders = all_linear_orders(m);
  Profile scratch(static_cast<std::size_t>(n), orders.front());
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    const bool keep = !w || evaluate(w->rule, scratch) == w->winner;
    if (keep && !visit(const_cast<const Profile&>(scratch))) return false;
    int pos = n - 1;
    while (pos >= 0) {
      if (++digit[pos] < orders.size()) {
        scratch[pos] = orders[digit[pos]];
        break;
      }
      digit[pos] = 0;
      scratch[pos] = orders[0];
      --pos;
    }
    if (pos < 0) return true;
  }
}

// Materializes E. A winner-only set with no matching profile yields an
// empty sequence, not an error.
inline std::vector<Profile> enumerate_information_set(const InformationSet& info,
                                                      std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Profile> out;
  for_each_profile(
      info,
      [&](const Profile& p) {
        out.push_back(p);
        return true;
      },
      cap);
  return out;
}

// Winners over all members of E, optionally with the manipulator's vote
// appended to every profile.
inline std::set<Alternative> possible_winners(const VotingRule& rule, const InformationSet& info,
                                              const std::optional<LinearOrder>& manipulator = {},
                                              std::uint64_t cap = kDefaultEnumerationCap) {
  std::set<Alternative> winners;
  const LinearOrder* extra = manipulator ? &*manipulator : nullptr;
  const int m = info.m();
  for_each_profile(
      info,
      [&](const Profile& p) {
        winners.insert(evaluate(rule, p, extra));
        return static_cast<int>(winners.size()) < m;
      },
      cap);
  return winners;
}

// The alternative that wins in every member of E, or nothing.
inline std::optional<Alternative> necessary_winner(
    const VotingRule& rule, const InformationSet& info,
    const std::optional<LinearOrder>& manipulator = {},
    std::uint64_t cap = kDefaultEnumerationCap) {
  std::optional<Alternative> winner;
  bool unanimous = true;
  const LinearOrder* extra = manipulator ? &*manipulator : nullptr;
  for_each_profile(
      info,
      [&](const Profile& p) {
        const Alternative w = evaluate(rule, p, extra);
        if (!winner) {
          winner = w;
          return true;
        }
        if (*winner != w) {
          unanimous = false;
          return false;
        }
        return true;
      },
      cap);
  if (!winner || !unanimous) return std::nullopt;
  return winner;
}

}  // namespace domvote
