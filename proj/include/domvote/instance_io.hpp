#pragma once

// The instance file format. Line-oriented, `#` starts a comment, all
// indices 1-based on disk:
//
//   m <int>
//   n <int>
//   <n ballot blocks, each either>
//     order i1 i2 ... im
//   <or>
//     partial k
//     pair a b            (k times; a is preferred to b)
//   rule <name>           (optional)
//   vm i1 ... im          (optional; the manipulator's true preferences)
//   v i1 ... im           (optional; the baseline vote)
//   u i1 ... im           (optional; the candidate vote)
//
// Rule names: plurality, veto, borda, copeland, maximin, rankedpairs, stv,
// score:s1,s2,..., tree or tree:((1,2),(3,4)).

#include <sstream>
#include <variant>

#include "rules.hpp"

namespace domvote {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
  int line;
};

inline std::string rule_to_string(const VotingRule& rule) {
  switch (rule.kind) {
    case RuleKind::Plurality:
      return "plurality";
    case RuleKind::Veto:
      return "veto";
    case RuleKind::Borda:
      return "borda";
    case RuleKind::Copeland:
      return "copeland";
    case RuleKind::Maximin:
      return "maximin";
    case RuleKind::RankedPairs:
      return "rankedpairs";
    case RuleKind::Stv:
      return "stv";
    case RuleKind::Scoring: {
      std::string out = "score:";
      for (std::size_t i = 0; i < rule.scores.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rule.scores[i]);
      }
      return out;
    }
    case RuleKind::VotingTree: {
      if (rule.tree.empty()) return "tree";
      auto render = [&](auto&& self, int node) -> std::string {
        const VotingTree::Node& nd = rule.tree.nodes[node];
        if (nd.leaf >= 0) return std::to_string(nd.leaf + 1);
        return "(" + self(self, nd.left) + "," + self(self, nd.right) + ")";
      };
      return "tree:" + render(render, rule.tree.root);
    }
  }
  throw std::logic_error("unknown rule kind");
}

namespace detail {

inline int parse_tree_node(const std::string& text, std::size_t& pos, VotingTree& tree) {
  if (pos >= text.size()) throw ValidationError("unexpected end of tree expression");
  if (text[pos] == '(') {
    ++pos;
    const int left = parse_tree_node(text, pos, tree);
    if (pos >= text.size() || text[pos] != ',')
      throw ValidationError("expected ',' in tree expression");
    ++pos;
    const int right = parse_tree_node(text, pos, tree);
    if (pos >= text.size() || text[pos] != ')')
      throw ValidationError("expected ')' in tree expression");
    ++pos;
    return tree.add_internal(left, right);
  }
  std::size_t digits = 0;
  while (pos + digits < text.size() && std::isdigit(static_cast<unsigned char>(text[pos + digits])))
    ++digits;
  if (digits == 0) throw ValidationError("expected a leaf index in tree expression");
  const int leaf = std::stoi(text.substr(pos, digits));
  pos += digits;
  if (leaf < 1) throw ValidationError("tree leaf indices are 1-based");
  return tree.add_leaf(leaf - 1);
}

}  // namespace detail

inline VotingRule rule_from_string(const std::string& name) {
  if (name == "plurality") return VotingRule::plurality();
  if (name == "veto") return VotingRule::veto();
  if (name == "borda") return VotingRule::borda();
  if (name == "copeland") return VotingRule::copeland();
  if (name == "maximin") return VotingRule::maximin();
  if (name == "rankedpairs") return VotingRule::ranked_pairs();
  if (name == "stv") return VotingRule::stv();
  if (name == "tree") return VotingRule::voting_tree();
  if (name.rfind("score:", 0) == 0) {
    std::vector<int> scores;
    std::stringstream body(name.substr(6));
    std::string item;
    while (std::getline(body, item, ','))
      scores.push_back(std::stoi(item));
    if (scores.empty()) throw ValidationError("empty scoring vector");
    return VotingRule::scoring(std::move(scores));
  }
  if (name.rfind("tree:", 0) == 0) {
    VotingTree tree;
    std::size_t pos = 0;
    const std::string body = name.substr(5);
    tree.root = detail::parse_tree_node(body, pos, tree);
    if (pos != body.size()) throw ValidationError("trailing characters in tree expression");
    return VotingRule::voting_tree(std::move(tree));
  }
  throw ValidationError("unknown rule '" + name + "'");
}

struct InstanceFile {
  int m = 0;
  int n = 0;
  std::vector<std::variant<LinearOrder, PartialOrder>> ballots;
  std::optional<VotingRule> rule;
  std::optional<LinearOrder> vm;  // true preferences
  std::optional<LinearOrder> v;   // baseline vote
  std::optional<LinearOrder> u;   // candidate vote

  PartialProfile as_partial_profile() const {
    PartialProfile pp;
    pp.reserve(ballots.size());
    for (const auto& ballot : ballots) {
      if (const LinearOrder* order = std::get_if<LinearOrder>(&ballot))
        pp.push_back(PartialOrder::chain(*order));
      else
        pp.push_back(std::get<PartialOrder>(ballot));
    }
    return pp;
  }

  // All ballots as linear orders, when every ballot is total.
  std::optional<Profile> as_complete_profile() const {
    Profile profile;
    profile.reserve(ballots.size());
    for (const auto& ballot : ballots) {
      if (const LinearOrder* order = std::get_if<LinearOrder>(&ballot)) {
        profile.push_back(*order);
      } else {
        auto order_opt = std::get<PartialOrder>(ballot).as_linear_order();
        if (!order_opt) return std::nullopt;
        profile.push_back(*order_opt);
      }
    }
    return profile;
  }

  // Equality is semantic: a total partial ballot equals the order it
  // determines.
  friend bool operator==(const InstanceFile& a, const InstanceFile& b) {
    return a.m == b.m && a.n == b.n && a.rule == b.rule && a.vm == b.vm && a.v == b.v &&
           a.u == b.u && a.as_partial_profile() == b.as_partial_profile();
  }
};

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize_instance(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string raw(text.substr(start, end == std::string_view::npos ? text.size() - start
                                                                     : end - start));
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::stringstream stream(raw);
    Line line{number, {}};
    std::string token;
    while (stream >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

inline int parse_int(const Line& line, std::size_t index, const std::string& what) {
  if (index >= line.tokens.size())
    throw ParseError(line.number, "missing " + what);
  try {
    std::size_t used = 0;
    const int value = std::stoi(line.tokens[index], &used);
    if (used != line.tokens[index].size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer for " + what + ", got '" +
                                      line.tokens[index] + "'");
  }
}

inline LinearOrder parse_order_tokens(const Line& line, std::size_t first, int m) {
  if (static_cast<int>(line.tokens.size() - first) != m)
    throw ParseError(line.number, "expected " + std::to_string(m) + " alternatives, got " +
                                      std::to_string(line.tokens.size() - first));
  std::vector<int> ranking;
  ranking.reserve(m);
  for (std::size_t i = first; i < line.tokens.size(); ++i) {
    const int index = parse_int(line, i, "alternative");
    if (index < 1 || index > m)
      throw ParseError(line.number, "alternative " + std::to_string(index) + " out of range [1," +
                                        std::to_string(m) + "]");
    ranking.push_back(index - 1);
  }
  try {
    return LinearOrder(std::move(ranking));
  } catch (const ValidationError& e) {
    throw ParseError(line.number, e.what());
  }
}

}  // namespace detail

inline InstanceFile parse_instance(std::string_view text) {
  const std::vector<detail::Line> lines = detail::tokenize_instance(text);
  std::size_t at = 0;
  const auto have = [&] { return at < lines.size(); };
  const auto take = [&]() -> const detail::Line& { return lines[at++]; };
  const auto last_line = [&] { return lines.empty() ? 1 : lines.back().number; };

  InstanceFile file;
  if (!have()) throw ParseError(1, "empty instance");
  {
    const detail::Line& line = take();
    if (line.tokens[0] != "m") throw ParseError(line.number, "expected 'm <count>'");
    file.m = detail::parse_int(line, 1, "m");
    if (file.m < 1) throw ParseError(line.number, "m must be at least 1");
  }
  if (!have()) throw ParseError(last_line(), "expected 'n <count>'");
  {
    const detail::Line& line = take();
    if (line.tokens[0] != "n") throw ParseError(line.number, "expected 'n <count>'");
    file.n = detail::parse_int(line, 1, "n");
    if (file.n < 0) throw ParseError(line.number, "n must be nonnegative");
  }

  for (int ballot = 0; ballot < file.n; ++ballot) {
    if (!have())
      throw ParseError(last_line(), "expected " + std::to_string(file.n) + " ballots, got " +
                                        std::to_string(ballot));
    const detail::Line& line = take();
    if (line.tokens[0] == "order") {
      file.ballots.emplace_back(detail::parse_order_tokens(line, 1, file.m));
    } else if (line.tokens[0] == "partial") {
      const int pair_count = detail::parse_int(line, 1, "pair count");
      if (pair_count < 0) throw ParseError(line.number, "pair count must be nonnegative");
      PartialOrder po(file.m);
      for (int pair = 0; pair < pair_count; ++pair) {
        if (!have())
          throw ParseError(last_line(), "expected " + std::to_string(pair_count) +
                                            " pair lines, got " + std::to_string(pair));
        const detail::Line& pair_line = take();
        if (pair_line.tokens[0] != "pair" || pair_line.tokens.size() != 3)
          throw ParseError(pair_line.number, "expected 'pair <a> <b>'");
        const int a = detail::parse_int(pair_line, 1, "pair");
        const int b = detail::parse_int(pair_line, 2, "pair");
        if (a < 1 || a > file.m || b < 1 || b > file.m)
          throw ParseError(pair_line.number, "pair index out of range [1," +
                                                 std::to_string(file.m) + "]");
        if (a == b || po.holds(b - 1, a - 1))
          throw ParseError(pair_line.number, "cycle " + std::to_string(b) + "->" +
                                                 std::to_string(a) + "->" + std::to_string(b));
        po.add_pair(a - 1, b - 1);
      }
      file.ballots.emplace_back(std::move(po));
    } else {
      throw ParseError(line.number, "expected 'order' or 'partial', got '" + line.tokens[0] + "'");
    }
  }

  while (have()) {
    const detail::Line& line = take();
    const std::string& directive = line.tokens[0];
    if (directive == "rule") {
      if (file.rule) throw ParseError(line.number, "duplicate 'rule' directive");
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'rule <name>'");
      try {
        file.rule = rule_from_string(line.tokens[1]);
        validate_rule(*file.rule, file.m);
      } catch (const ValidationError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (directive == "vm" || directive == "v" || directive == "u") {
      auto& slot = directive == "vm" ? file.vm : directive == "v" ? file.v : file.u;
      if (slot) throw ParseError(line.number, "duplicate '" + directive + "' directive");
      slot = detail::parse_order_tokens(line, 1, file.m);
    } else {
      throw ParseError(line.number, "unknown directive '" + directive + "'");
    }
  }
  return file;
}

inline std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream out;
  out << "m " << file.m << "\n";
  out << "n " << file.n << "\n";
  const auto order_line = [&](const char* head, const LinearOrder& order) {
    out << head;
    for (int pos = 0; pos < order.m(); ++pos) out << ' ' << order.alt_at(pos) + 1;
    out << "\n";
  };
  for (const auto& ballot : file.ballots) {
    if (const LinearOrder* order = std::get_if<LinearOrder>(&ballot)) {
      order_line("order", *order);
      continue;
    }
    const PartialOrder& po = std::get<PartialOrder>(ballot);
    if (auto order = po.as_linear_order()) {
      order_line("order", *order);
      continue;
    }
    const auto pairs = po.pairs();
    out << "partial " << pairs.size() << "\n";
    for (const auto& [a, b] : pairs) out << "pair " << a + 1 << ' ' << b + 1 << "\n";
  }
  if (file.rule) out << "rule " << rule_to_string(*file.rule) << "\n";
  if (file.vm) order_line("vm", *file.vm);
  if (file.v) order_line("v", *file.v);
  if (file.u) order_line("u", *file.u);
  return out.str();
}

// Parses a command-line order such as "3>2>1" (1-based, most preferred
// first).
inline LinearOrder parse_order_arg(const std::string& text) {
  std::vector<int> ranking;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, '>')) {
    try {
      ranking.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse order '" + text + "'");
    }
  }
  if (ranking.empty()) throw ValidationError("empty order '" + text + "'");
  return LinearOrder(std::move(ranking));
}

}  // namespace domvote
