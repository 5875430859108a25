#ifndef ABCU_CLI_HPP
#define ABCU_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abcu/io.hpp"
#include "abcu/necessary.hpp"
#include "abcu/possible.hpp"
#include "abcu/reductions.hpp"
#include "abcu/representation.hpp"

namespace abcu {

// Exit codes
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefused = 3;

namespace detail {

struct CliOptions {
  std::string profile;
  std::string rule = "av";
  std::optional<int> k;
  std::string committee;
  std::string candidate;
  std::string axiom = "jr";
  std::string method = "auto";
  std::optional<std::uint64_t> cap;
  bool witness = false;
  std::string gadget;
  std::string x = "1";
  std::string instance;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::uint64_t resolve_cap(const CliOptions& o) {
  if (o.cap) return *o.cap;
  if (const char* env = std::getenv("ABCU_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::invalid_argument, "ABCU_CAP must be a positive integer");
  }
  return kDefaultCap;
}

inline CandidateSet parse_committee(const std::string& list, const CandidateRegistry& reg) {
  CandidateSet w;
  std::istringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const CandidateId c = reg.id(name);
    if (w.contains(c)) throw Error(ErrorKind::invalid_argument, "committee lists '" + name + "' twice");
    w.insert(c);
  }
  return w;
}

class Runner {
public:
  Runner(const CliOptions& o, std::ostream& out) : o_(o), out_(out) {}

  int decision(const std::string& query) {
    load();
    const std::uint64_t cap = resolve_cap(o_);
    const Method method = parse_method(o_.method);
    Decision d;
    bool existential = true;
    if (query == "poscom" || query == "neccom") {
      const CandidateSet w = committee();
      const auto f = parse_rule(o_.rule);
      if (query == "poscom") {
        d = poscom(profile_, w, f, k_, method, cap);
      } else {
        d = neccom(profile_, w, f, k_, method, cap);
        existential = false;
      }
    } else if (query == "posmem" || query == "necmem") {
      if (o_.candidate.empty()) throw Error(ErrorKind::invalid_argument, "--candidate is required");
      const CandidateId c = profile_.registry.id(o_.candidate);
      const auto f = parse_rule(o_.rule);
      if (query == "posmem") {
        d = posmem(profile_, c, f, k_, method, cap);
      } else {
        d = necmem(profile_, c, f, k_, method, cap);
        existential = false;
      }
    } else {
      const CandidateSet w = committee();
      const Axiom axiom = parse_axiom(o_.axiom);
      const bool necessary = query == "necjr";
      existential = !necessary;
      if (axiom == Axiom::jr && method != Method::brute) {
        d = necessary ? necjr(profile_, w, k_) : posjr(profile_, w, k_);
      } else {
        if (axiom != Axiom::jr && method == Method::poly)
          throw Error(ErrorKind::no_poly_algorithm,
                      "no polynomial algorithm for " + std::string(to_string(axiom)) + " under incompleteness");
        d = axiom_over_completions(profile_, w, k_, axiom, necessary, cap);
        if (axiom != Axiom::jr) d.method = "brute-experimental";
      }
    }
    // yes-witnesses of existential queries are opt-in; counterexamples always print
    if (existential && !o_.witness) {
      d.witness.reset();
      d.witness_committee.reset();
    }
    out_ << serialize_result(query, d, profile_.registry);
    return d.answer ? kExitYes : kExitNo;
  }

  int winners() {
    load();
    const auto f = parse_rule(o_.rule);
    const ApprovalProfile a = complete_profile("winners");
    const auto best = winning_committees(f, a, k_);
    Json j;
    j["query"] = "winners";
    j["answer"] = true;
    j["method"] = "exhaustive";
    Json list = Json::array();
    for (CandidateSet w : best) list.push_back(names_json(a.registry, w));
    j["winners"] = std::move(list);
    j["score"] = to_string(profile_score(f, a, best.front()));
    out_ << serialize_result(j);
    return kExitYes;
  }

  int check() {
    load();
    const ApprovalProfile a = complete_profile("check");
    const CandidateSet w = committee();
    const Axiom axiom = parse_axiom(o_.axiom);
    const Method method = parse_method(o_.method);
    const AxiomResult r = method == Method::brute ? check_axiom_brute(a, w, k_, axiom) : check_axiom(a, w, k_, axiom);
    out_ << serialize_result("check", r, method == Method::brute ? "brute" : to_string(axiom), a.registry);
    return r.satisfied ? kExitYes : kExitNo;
  }

  int enumerate() {
    load();
    auto stream = enumerate_completions(profile_, resolve_cap(o_));
    Json list = Json::array();
    while (auto a = stream.next()) list.push_back(approval_json(*a));
    Json j;
    j["query"] = "enumerate";
    j["answer"] = true;
    j["method"] = "enumeration";
    j["count"] = count_completions(profile_).str();
    j["completions"] = std::move(list);
    out_ << serialize_result(j);
    return kExitYes;
  }

  int gen() {
    if (o_.instance.empty()) throw Error(ErrorKind::invalid_argument, "--instance is required");
    const std::string text = read_file(o_.instance);
    GadgetOutput g;
    std::optional<bool> source;
    if (o_.gadget == "cc3va") {
      const auto inst = parse_one_in_three(text);
      g = build_cc_3va(inst);
      if (inst.elements <= kMaxSourceSize) source = solve_one_in_three_brute(inst);
    } else if (o_.gadget == "linearx3c") {
      const auto inst = parse_x3c(text);
      g = build_linear_x3c(inst, parse_rational(o_.x));
      if (inst.sets.size() <= static_cast<std::size_t>(kMaxSourceSize)) source = solve_x3c_brute(inst);
    } else {
      throw Error(ErrorKind::invalid_argument, "--gadget must be cc3va or linearx3c");
    }
    Json j;
    j["query"] = "gen";
    j["answer"] = true;
    j["method"] = o_.gadget;
    j["profile"] = profile_json(g.profile, g.k);
    j["committee"] = names_json(g.profile.registry, g.target);
    j["k"] = g.k;
    j["rule"] = g.rule.spec();
    if (source) j["source_solvable"] = *source;
    out_ << serialize_result(j);
    return kExitYes;
  }

private:
  void load() {
    if (o_.profile.empty()) throw Error(ErrorKind::invalid_argument, "--profile is required");
    ParsedProfile parsed = parse_profile(read_file(o_.profile));
    profile_ = std::move(parsed.profile);
    if (o_.k) {
      k_ = *o_.k;
    } else if (parsed.k) {
      k_ = *parsed.k;
    } else {
      throw Error(ErrorKind::invalid_argument, "committee size missing: pass --k or set \"k\" in the profile");
    }
    require_committee_size(k_, profile_.candidates());
  }

  CandidateSet committee() const {
    if (o_.committee.empty()) throw Error(ErrorKind::invalid_argument, "--committee is required");
    const CandidateSet w = parse_committee(o_.committee, profile_.registry);
    require_committee(w, k_, profile_.candidates());
    return w;
  }

  ApprovalProfile complete_profile(const std::string& what) const {
    if (!profile_.is_complete())
      throw Error(ErrorKind::invalid_argument, what + " needs a complete profile (every \"middle\" empty)");
    return profile_.as_complete();
  }

  const CliOptions& o_;
  std::ostream& out_;
  PartialProfile profile_;
  int k_ = 0;
};

} // namespace detail

/// Command-line front end. One result document on `out`, diagnostics on `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::CliOptions o;
  CLI::App app{"Possible and necessary winners of approval-based committee elections under incomplete ballots"};
  app.require_subcommand(1);

  auto with_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", o.profile, "profile document (JSON)")->required();
    sub->add_option("--k", o.k, "committee size (overrides \"k\" in the profile)");
  };
  auto with_rule = [&](CLI::App* sub) { sub->add_option("--rule", o.rule, "av | cc | pav | sav | binary:<t> | table:<r0,r1,...>"); };
  auto with_method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "auto | poly | brute");
    sub->add_option("--cap", o.cap, "maximum number of completions to enumerate (default 1048576, env ABCU_CAP)");
    sub->add_flag("--witness", o.witness, "include the witness completion of a yes answer");
  };

  std::vector<std::pair<std::string, CLI::App*>> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs.emplace_back(name, sub);
    return sub;
  };

  auto* winners = add("winners", "winning committees of a complete profile");
  with_profile(winners);
  with_rule(winners);

  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"poscom", "is the committee a possible winner"}, {"neccom", "is the committee a necessary winner"}}) {
    auto* sub = add(name, help);
    with_profile(sub);
    with_rule(sub);
    with_method(sub);
    sub->add_option("--committee", o.committee, "comma-separated candidate names")->required();
  }
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"posmem", "is the candidate a possible committee member"},
           {"necmem", "is the candidate a necessary committee member"}}) {
    auto* sub = add(name, help);
    with_profile(sub);
    with_rule(sub);
    with_method(sub);
    sub->add_option("--candidate", o.candidate, "candidate name")->required();
  }
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"posjr", "does some completion satisfy the axiom"}, {"necjr", "does every completion satisfy the axiom"}}) {
    auto* sub = add(name, help);
    with_profile(sub);
    with_method(sub);
    sub->add_option("--committee", o.committee, "comma-separated candidate names")->required();
    sub->add_option("--axiom", o.axiom, "jr (polynomial) | pjr | ejr (experimental, brute force)");
  }
  auto* check = add("check", "test JR / PJR / EJR on a complete profile");
  with_profile(check);
  check->add_option("--committee", o.committee, "comma-separated candidate names")->required();
  check->add_option("--axiom", o.axiom, "jr | pjr | ejr");
  check->add_option("--method", o.method, "auto | brute (group enumeration, at most 15 voters)");

  auto* enumerate = add("enumerate", "list every completion of a profile");
  with_profile(enumerate);
  enumerate->add_option("--cap", o.cap, "maximum number of completions");

  auto* gen = add("gen", "build a hardness gadget profile from an X3C or one-in-three instance");
  gen->add_option("--gadget", o.gadget, "cc3va | linearx3c")->required();
  gen->add_option("--instance", o.instance, "instance file: size line, then one 1-based triple per line")->required();
  gen->add_option("--x", o.x, "w(2) - w(1) for linearx3c (rational, default 1)");

  std::vector<const char*> argv{"abcu"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    detail::Runner run(o, out);
    for (const auto& [name, sub] : subs) {
      if (!sub->parsed()) continue;
      if (name == "winners") return run.winners();
      if (name == "check") return run.check();
      if (name == "enumerate") return run.enumerate();
      if (name == "gen") return run.gen();
      return run.decision(name);
    }
  } catch (const Error& e) {
    err << "abcu: " << e.what() << "\n";
    return is_refusal(e.kind()) ? kExitRefused : kExitUsage;
  }
  return kExitUsage;
}

} // namespace abcu

#endif // ABCU_CLI_HPP
