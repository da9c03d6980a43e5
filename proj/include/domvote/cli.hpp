#pragma once

// Command-line front end. Subcommands parse instance files, dispatch to the
// brute-force or flow solvers, and print deterministic text. Exit codes:
// 0 affirmative/success, 1 negative, 2 error (with a one-line diagnostic on
// stderr).

#include <fstream>

#include <CLI11.hpp>

#include "domination.hpp"
#include "flowsolver.hpp"
#include "instance_io.hpp"
#include "reductions.hpp"

namespace domvote {

namespace detail {

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << content;
}

inline void print_order_line(std::ostream& out, const LinearOrder& order) {
  out << "order";
  for (int pos = 0; pos < order.m(); ++pos) out << ' ' << order.alt_at(pos) + 1;
  out << "\n";
}

inline void print_profile(std::ostream& out, const Profile& profile) {
  for (const LinearOrder& vote : profile) print_order_line(out, vote);
}

inline InstanceFile to_instance_file(const DominationInstance& instance) {
  InstanceFile file;
  file.m = instance.prefs.m();
  file.n = static_cast<int>(instance.partial_profile.size());
  for (const PartialOrder& po : instance.partial_profile) file.ballots.emplace_back(po);
  file.rule = instance.rule;
  file.vm = instance.prefs;
  file.v = instance.baseline;
  file.u = instance.candidate;
  return file;
}

struct CommonArgs {
  std::string instance_path;
  std::string rule_name;
  std::string info = "partial";
  int m = 0;
  int n = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
};

inline std::optional<InstanceFile> load_instance(const CommonArgs& args) {
  if (args.instance_path.empty()) return std::nullopt;
  return parse_instance(read_text_file(args.instance_path));
}

inline VotingRule resolve_rule(const CommonArgs& args, const std::optional<InstanceFile>& file) {
  if (!args.rule_name.empty()) return rule_from_string(args.rule_name);
  if (file && file->rule) return *file->rule;
  throw ValidationError("no rule given (use --rule or a 'rule' line in the instance)");
}

inline int resolve_m(const CommonArgs& args, const std::optional<InstanceFile>& file) {
  if (file) return file->m;
  if (args.m > 0) return args.m;
  throw ValidationError("no alternative count given (use --m or --instance)");
}

inline int resolve_n(const CommonArgs& args, const std::optional<InstanceFile>& file) {
  if (file) return file->n;
  if (args.n > 0) return args.n;
  throw ValidationError("no voter count given (use --n or --instance)");
}

inline InformationSet build_info(const CommonArgs& args, const std::optional<InstanceFile>& file,
                                 const VotingRule& rule) {
  if (args.info == "partial") {
    if (!file) throw ValidationError("--info partial requires --instance");
    return InformationSet::partial(file->as_partial_profile());
  }
  if (args.info == "complete") {
    if (!file) throw ValidationError("--info complete requires --instance");
    auto profile = file->as_complete_profile();
    if (!profile) throw ValidationError("instance has undetermined ballots");
    return InformationSet::complete(std::move(*profile));
  }
  if (args.info == "none")
    return InformationSet::no_information(resolve_m(args, file), resolve_n(args, file));
  if (args.info.rfind("winner:", 0) == 0) {
    const int winner = std::stoi(args.info.substr(7));
    return InformationSet::winner_only(rule, winner - 1, resolve_m(args, file),
                                       resolve_n(args, file));
  }
  throw ValidationError("unknown --info '" + args.info + "'");
}

inline LinearOrder resolve_order(const std::string& flag, const std::optional<LinearOrder>& stored,
                                 int m, const std::string& what) {
  std::optional<LinearOrder> order;
  if (!flag.empty())
    order = parse_order_arg(flag);
  else if (stored)
    order = stored;
  if (!order) throw ValidationError("no " + what + " vote given");
  if (order->m() != m)
    throw ValidationError(what + " vote ranks " + std::to_string(order->m()) +
                          " alternatives, expected " + std::to_string(m));
  return *order;
}

inline std::set<Alternative> parse_alt_set(const std::string& text) {
  std::set<Alternative> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.insert(std::stoi(item) - 1);
  if (out.empty()) throw ValidationError("empty alternative set '" + text + "'");
  return out;
}

inline X3CInstance parse_x3c_sets(int q, const std::string& text) {
  X3CInstance x3c;
  x3c.universe_size = q;
  std::stringstream stream(text);
  std::string chunk;
  while (std::getline(stream, chunk, ';')) {
    std::stringstream inner(chunk);
    std::string item;
    std::vector<int> elements;
    while (std::getline(inner, item, ',')) elements.push_back(std::stoi(item) - 1);
    if (elements.size() != 3)
      throw ValidationError("each set needs exactly 3 elements, got '" + chunk + "'");
    x3c.sets.push_back({elements[0], elements[1], elements[2]});
  }
  x3c.validate();
  return x3c;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"strategic-vote domination under partial information"};
  app.name("domvote");
  app.require_subcommand(1);

  detail::CommonArgs common;
  std::string vm_flag, v_flag, u_flag, vote_flag, solver = "auto", sets_flag, cprime_flag,
                                                  out_path;
  int jobs = 1, q_flag = 0, c_flag = 0, dstar_flag = 0, level = 1;

  const auto add_common = [&](CLI::App* cmd, bool with_info) {
    cmd->add_option("--instance", common.instance_path, "instance file");
    cmd->add_option("--rule", common.rule_name, "voting rule");
    cmd->add_option("--cap", common.cap, "enumeration cap");
    if (with_info) {
      cmd->add_option("--info", common.info,
                      "information set: partial, complete, none, winner:<i>");
      cmd->add_option("--m", common.m, "alternative count (with --info none/winner)");
      cmd->add_option("--n", common.n, "voter count (with --info none/winner)");
    }
  };

  CLI::App* winner_cmd = app.add_subcommand("winner", "winner of a complete profile");
  add_common(winner_cmd, false);

  CLI::App* pw_cmd = app.add_subcommand("possible-winners", "winners over the information set");
  add_common(pw_cmd, true);
  pw_cmd->add_option("--vote", vote_flag, "manipulator vote appended to every profile");

  CLI::App* nw_cmd = app.add_subcommand("necessary-winner", "winner in every member, if any");
  add_common(nw_cmd, true);
  nw_cmd->add_option("--vote", vote_flag, "manipulator vote appended to every profile");

  CLI::App* dom_cmd = app.add_subcommand("dominates", "does vote U dominate vote V");
  add_common(dom_cmd, true);
  dom_cmd->add_option("--vm", vm_flag, "true preferences, e.g. 3>2>1");
  dom_cmd->add_option("--v", v_flag, "baseline vote (defaults to --vm)");
  dom_cmd->add_option("--u", u_flag, "candidate vote");
  dom_cmd->add_option("--solver", solver, "auto, brute, or flow");

  CLI::App* man_cmd = app.add_subcommand("manipulate", "find a vote dominating the truthful one");
  add_common(man_cmd, true);
  man_cmd->add_option("--vm", vm_flag, "true preferences");
  man_cmd->add_option("--solver", solver, "auto, brute, or flow");
  man_cmd->add_option("--jobs", jobs, "worker threads for the brute scan");

  CLI::App* gen_cmd = app.add_subcommand("gen-borda-x3c", "generate a Borda domination instance "
                                                          "from an exact-cover question");
  gen_cmd->add_option("--q", q_flag, "universe size (multiple of 3)")->required();
  gen_cmd->add_option("--sets", sets_flag, "3-sets, e.g. 1,2,3;2,3,1")->required();
  gen_cmd->add_option("--out", out_path, "write the instance here");

  CLI::App* pw1_cmd = app.add_subcommand("pw1-transform",
                                         "turn a possible-winner instance into a domination one");
  add_common(pw1_cmd, false);
  pw1_cmd->add_option("--c", c_flag, "distinguished alternative (1-based)")->required();
  pw1_cmd->add_option("--dstar", dstar_flag, "takeover alternative (1-based)")->required();
  pw1_cmd->add_option("--cprime", cprime_flag, "shifted set, e.g. 3,4")->required();
  pw1_cmd->add_option("--out", out_path, "write the instance here");

  CLI::App* vpw_cmd = app.add_subcommand("verify-pw", "check the restricted possible-winner "
                                                      "side conditions");
  add_common(vpw_cmd, false);
  vpw_cmd->add_option("--c", c_flag, "distinguished alternative (1-based)")->required();
  vpw_cmd->add_option("--dstar", dstar_flag, "takeover alternative (1-based)")->required();
  vpw_cmd->add_option("--cprime", cprime_flag, "shifted set, e.g. 3,4")->required();
  vpw_cmd->add_option("--level", level, "1 or 2");

  CLI::App* imm_cmd = app.add_subcommand("immunity-check", "exhaustive no-information immunity "
                                                           "check");
  add_common(imm_cmd, false);
  imm_cmd->add_option("--m", common.m, "alternative count")->required();
  imm_cmd->add_option("--n", common.n, "voter count")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(winner_cmd)) {
      const auto file = detail::load_instance(common);
      if (!file) throw ValidationError("winner requires --instance");
      const VotingRule rule = resolve_rule(common, file);
      auto profile = file->as_complete_profile();
      if (!profile) throw ValidationError("instance has undetermined ballots");
      out << alt_name(evaluate(rule, *profile)) << "\n";
      return 0;
    }

    if (app.got_subcommand(pw_cmd) || app.got_subcommand(nw_cmd)) {
      const auto file = detail::load_instance(common);
      const VotingRule rule = resolve_rule(common, file);
      const InformationSet info = detail::build_info(common, file, rule);
      std::optional<LinearOrder> vote;
      if (!vote_flag.empty()) {
        vote = parse_order_arg(vote_flag);
        if (vote->m() != info.m()) throw ValidationError("--vote size mismatch");
      }
      if (app.got_subcommand(pw_cmd)) {
        const std::set<Alternative> winners = possible_winners(rule, info, vote, common.cap);
        if (winners.empty()) {
          out << "NONE\n";
          return 1;
        }
        bool first = true;
        for (Alternative a : winners) {
          out << (first ? "" : " ") << alt_name(a);
          first = false;
        }
        out << "\n";
        return 0;
      }
      const auto winner = necessary_winner(rule, info, vote, common.cap);
      if (!winner) {
        out << "NONE\n";
        return 1;
      }
      out << alt_name(*winner) << "\n";
      return 0;
    }

    if (app.got_subcommand(dom_cmd)) {
      const auto file = detail::load_instance(common);
      const VotingRule rule = resolve_rule(common, file);
      const int m = file ? file->m : common.m;
      if (m <= 0) throw ValidationError("no alternative count available");
      const LinearOrder prefs = detail::resolve_order(vm_flag, file ? file->vm : std::nullopt,
                                                      m, "--vm");
      const LinearOrder candidate = detail::resolve_order(u_flag, file ? file->u : std::nullopt,
                                                          m, "--u");
      LinearOrder baseline = prefs;
      if (!v_flag.empty() || (file && file->v))
        baseline = detail::resolve_order(v_flag, file ? file->v : std::nullopt, m, "--v");

      const bool flow_capable =
          (rule.kind == RuleKind::Plurality || rule.kind == RuleKind::Veto) &&
          common.info == "partial" && file.has_value();
      bool use_flow = solver == "flow" || (solver == "auto" && flow_capable);
      if (solver != "auto" && solver != "brute" && solver != "flow")
        throw ValidationError("unknown --solver '" + solver + "'");
      if (use_flow && !flow_capable)
        throw ValidationError("flow solver needs plurality or veto with partial information");

      if (use_flow) {
        const PartialProfile pp = file->as_partial_profile();
        const auto improvement =
            find_possible_improvement_witness(pp, prefs, baseline, candidate, rule);
        const bool reverse = possible_improvement(pp, prefs, candidate, baseline, rule);
        if (improvement && !reverse) {
          out << "YES\n";
          detail::print_profile(out, improvement->extension);
          return 0;
        }
        out << "NO\n";
        if (reverse) {
          const auto degradation =
              find_possible_improvement_witness(pp, prefs, candidate, baseline, rule);
          if (degradation) detail::print_profile(out, degradation->extension);
        }
        return 1;
      }

      const InformationSet info = detail::build_info(common, file, rule);
      const DominationVerdict verdict =
          dominates(rule, info, prefs, candidate, baseline, common.cap);
      if (verdict.dominates) {
        out << "YES\n";
        detail::print_profile(out, *verdict.improvement_witness);
        return 0;
      }
      out << "NO\n";
      if (verdict.degradation_witness) detail::print_profile(out, *verdict.degradation_witness);
      return 1;
    }

    if (app.got_subcommand(man_cmd)) {
      const auto file = detail::load_instance(common);
      const VotingRule rule = resolve_rule(common, file);
      const int m = file ? file->m : common.m;
      if (m <= 0) throw ValidationError("no alternative count available");
      const LinearOrder prefs = detail::resolve_order(vm_flag, file ? file->vm : std::nullopt,
                                                      m, "--vm");

      const bool flow_capable =
          (rule.kind == RuleKind::Plurality || rule.kind == RuleKind::Veto) &&
          common.info == "partial" && file.has_value();
      bool use_flow = solver == "flow" || (solver == "auto" && flow_capable);
      if (solver != "auto" && solver != "brute" && solver != "flow")
        throw ValidationError("unknown --solver '" + solver + "'");
      if (use_flow && !flow_capable)
        throw ValidationError("flow solver needs plurality or veto with partial information");

      std::optional<LinearOrder> found;
      if (use_flow) {
        found = flow_dominating_manipulation(file->as_partial_profile(), prefs, rule);
      } else {
        const InformationSet info = detail::build_info(common, file, rule);
        found = find_dominating_manipulation(rule, info, prefs, common.cap, jobs);
      }
      if (!found) {
        out << "NONE\n";
        return 1;
      }
      out << "YES\n";
      detail::print_order_line(out, *found);
      return 0;
    }

    if (app.got_subcommand(gen_cmd)) {
      const X3CInstance x3c = detail::parse_x3c_sets(q_flag, sets_flag);
      const GeneratedBordaInstance generated = gen_borda_domination(x3c);
      const std::string text = serialize_instance(detail::to_instance_file(generated.instance));
      if (out_path.empty()) {
        out << text;
        return 0;
      }
      detail::write_text_file(out_path, text);
      const BordaScoreCertificate& cert = generated.certificate;
      out << "alternatives " << cert.alt_count << "\n";
      out << "ballots " << cert.ballot_count << "\n";
      out << "pad-shift " << cert.pad_shift << "\n";
      out << "w-minus-c " << cert.w_minus_c << "\n";
      out << "c-minus-v";
      for (long long diff : cert.c_minus_v) out << ' ' << diff;
      out << "\n";
      out << "d-max " << cert.d_max_score << "\n";
      out << "rivals-min " << cert.rivals_min_score << "\n";
      return 0;
    }

    if (app.got_subcommand(pw1_cmd) || app.got_subcommand(vpw_cmd)) {
      const auto file = detail::load_instance(common);
      if (!file) throw ValidationError("an --instance file is required");
      const VotingRule rule = resolve_rule(common, file);
      const PossibleWinnerInstance pw{rule, file->as_partial_profile(), c_flag - 1};
      const Alternative d_star = dstar_flag - 1;
      const std::set<Alternative> members = detail::parse_alt_set(cprime_flag);

      if (app.got_subcommand(vpw_cmd)) {
        const bool ok = verify_pw_conditions(pw, d_star, members, level, common.cap);
        out << (ok ? "YES" : "NO") << "\n";
        return ok ? 0 : 1;
      }
      const DominationInstance transformed = pw1_to_domination(pw, d_star, members);
      const std::string text = serialize_instance(detail::to_instance_file(transformed));
      if (out_path.empty())
        out << text;
      else
        detail::write_text_file(out_path, text);
      return 0;
    }

    if (app.got_subcommand(imm_cmd)) {
      const auto file = detail::load_instance(common);
      const VotingRule rule = resolve_rule(common, file);
      const auto counterexample = check_no_info_immunity(rule, common.m, common.n, common.cap);
      if (!counterexample) {
        out << "YES\n";
        return 0;
      }
      out << "NO\n";
      detail::print_order_line(out, counterexample->first);
      detail::print_order_line(out, counterexample->second);
      return 1;
    }

    throw ValidationError("no subcommand");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace domvote
