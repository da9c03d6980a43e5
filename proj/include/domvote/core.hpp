#pragma once

// Core value types for ranked ballots: alternatives, linear orders,
// transitively closed partial orders, and profiles. Everything here is an
// immutable value after construction and every free function is pure, so
// values can be shared and sent across threads freely.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domvote {

// Alternatives are dense 0-based indices. Alternative i displays as
// "c{i+1}"; 1-based names are used in every file format and CLI output.
// The fixed tie-break order is ascending index: in a tie, the lowest index
// wins.
using Alternative = int;

inline std::string alt_name(Alternative a) { return "c" + std::to_string(a + 1); }

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A complete strict ranking of the alternatives 0..m-1, most preferred
// first. Rank lookup is O(1).
class LinearOrder {
 public:
  explicit LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
    const int m = static_cast<int>(ranking_.size());
    if (m == 0) throw ValidationError("empty ranking");
    rank_of_.assign(m, -1);
    for (int pos = 0; pos < m; ++pos) {
      const int a = ranking_[pos];
      if (a < 0 || a >= m)
        throw ValidationError("alternative " + std::to_string(a) + " out of range [0," +
                              std::to_string(m) + ")");
      if (rank_of_[a] != -1)
        throw ValidationError("duplicate alternative " + std::to_string(a));
      rank_of_[a] = pos;
    }
  }

  int m() const { return static_cast<int>(ranking_.size()); }
  Alternative alt_at(int pos) const { return ranking_[pos]; }
  Alternative top() const { return ranking_.front(); }
  Alternative bottom() const { return ranking_.back(); }
  int rank_of(Alternative a) const { return rank_of_[a]; }
  bool prefers(Alternative a, Alternative b) const { return rank_of_[a] < rank_of_[b]; }
  const std::vector<int>& ranking() const { return ranking_; }

  LinearOrder reversed() const {
    return LinearOrder(std::vector<int>(ranking_.rbegin(), ranking_.rend()));
  }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ == b.ranking_;
  }
  // Lexicographic on the ranking sequence; this is the canonical
  // enumeration order used everywhere.
  friend bool operator<(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ < b.ranking_;
  }

 private:
  std::vector<int> ranking_;
  std::vector<int> rank_of_;
};

inline LinearOrder make_linear_order(std::vector<int> ranking) {
  return LinearOrder(std::move(ranking));
}

// A transitively closed, antisymmetric, irreflexive relation on 0..m-1.
// holds(a,b) means a is known to be preferred to b. The full closure is
// stored, so consistency queries are O(1).
class PartialOrder {
 public:
  explicit PartialOrder(int m) : m_(m) {
    if (m <= 0) throw ValidationError("m must be positive");
    above_.assign(static_cast<std::size_t>(m) * m, 0);
  }

  static PartialOrder from_pairs(int m, const std::vector<std::pair<int, int>>& pairs) {
    PartialOrder po(m);
    for (const auto& [a, b] : pairs) po.add_pair(a, b);
    return po;
  }

  // The complete order as a partial order (no undetermined pairs).
  static PartialOrder chain(const LinearOrder& order) {
    PartialOrder po(order.m());
    for (int i = 0; i < order.m(); ++i)
      for (int j = i + 1; j < order.m(); ++j)
        po.set(order.alt_at(i), order.alt_at(j));
    return po;
  }

  int m() const { return m_; }

  bool holds(int a, int b) const { return above_[idx(a, b)] != 0; }

  // Inserts a>b together with everything transitivity implies. Rejects
  // pairs whose insertion would close a cycle.
  void add_pair(int a, int b) {
    check_range(a);
    check_range(b);
    if (a == b)
      throw ValidationError("cycle " + std::to_string(a) + "->" + std::to_string(a));
    if (holds(b, a))
      throw ValidationError("cycle " + std::to_string(b) + "->" + std::to_string(a) + "->" +
                            std::to_string(b));
    if (holds(a, b)) return;
    for (int x = 0; x < m_; ++x) {
      if (x != a && !holds(x, a)) continue;
      for (int y = 0; y < m_; ++y) {
        if (y != b && !holds(b, y)) continue;
        set(x, y);
      }
    }
  }

  int pair_count() const {
    int count = 0;
    for (char bit : above_) count += bit != 0;
    return count;
  }

  int undetermined_pair_count() const { return m_ * (m_ - 1) / 2 - pair_count(); }

  bool is_total() const { return undetermined_pair_count() == 0; }

  // The unique linear order this relation determines, when total.
  std::optional<LinearOrder> as_linear_order() const {
    if (!is_total()) return std::nullopt;
    std::vector<int> ranking(m_, -1);
    for (int a = 0; a < m_; ++a) {
      int above_count = 0;
      for (int b = 0; b < m_; ++b)
        if (b != a && holds(b, a)) ++above_count;
      ranking[above_count] = a;
    }
    return LinearOrder(std::move(ranking));
  }

  // All closure pairs in ascending (a,b) order.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count());
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        if (holds(a, b)) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const PartialOrder& a, const PartialOrder& b) {
    return a.m_ == b.m_ && a.above_ == b.above_;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * m_ + b; }
  void set(int a, int b) { above_[idx(a, b)] = 1; }
  void check_range(int a) const {
    if (a < 0 || a >= m_)
      throw ValidationError("alternative " + std::to_string(a) + " out of range [0," +
                            std::to_string(m_) + ")");
  }

  int m_;
  std::vector<char> above_;
};

// Returns the transitive closure of the given pairs; rejects inputs whose
// closure would contain a cycle, naming a witness.
inline PartialOrder transitive_close(const std::vector<std::pair<int, int>>& pairs, int m) {
  return PartialOrder::from_pairs(m, pairs);
}

using Profile = std::vector<LinearOrder>;
using PartialProfile = std::vector<PartialOrder>;

// Index of the maximum score, ties broken toward the lower index.
inline int tie_break_argmax(const std::vector<int>& scores) {
  if (scores.empty()) throw ValidationError("empty score sequence");
  int best = 0;
  for (int i = 1; i < static_cast<int>(scores.size()); ++i)
    if (scores[i] > scores[best]) best = i;
  return best;
}

}  // namespace domvote
