#include "agorum_cli/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "agorum/axioms.hpp"
#include "agorum/budget.hpp"
#include "agorum/error.hpp"
#include "agorum/io.hpp"
#include "agorum/kemeny.hpp"
#include "agorum/logic.hpp"
#include "agorum/qbf.hpp"
#include "agorum/rules.hpp"
#include "agorum/safety.hpp"
#include "agorum/strategy.hpp"
#include "report.hpp"

namespace agorum::cli {

namespace {

struct Options {
  std::string agenda_path;
  std::string profile_path;
  std::string preferences_path;
  std::string qbf_path;
  std::string out_dir;
  std::string rule = "majority";
  std::string axiom_class = "majority";
  std::string tie_break = "none";
  std::vector<std::string> props;
  std::vector<std::string> axioms;
  std::vector<std::string> formulas;
  std::optional<std::size_t> agent;
  std::optional<std::size_t> agents;
  std::optional<std::size_t> distance;
  std::optional<std::uint64_t> budget;
  bool brute_force = false;
  bool no_timing = false;
};

// Inputs read from disk, echoed in the report with their digests.
class Inputs {
 public:
  std::string load(const std::string& role, const std::string& path) {
    std::string text = read_text_file(path);
    digests_[role] = json{{"path", path}, {"sha256", sha256_hex(text)}};
    return text;
  }
  const json& digests() const { return digests_; }

 private:
  json digests_ = json::object();
};

struct Context {
  const Options& o;
  Budget budget;
  Inputs inputs;
  json result = json::object();
  json witnesses = json::array();
};

Agenda load_agenda(Context& c) { return parse_agenda(c.inputs.load("agenda", c.o.agenda_path)); }

Profile load_profile(Context& c, const Agenda& agenda) {
  return parse_profile(c.inputs.load("profile", c.o.profile_path), agenda);
}

std::size_t agent_count(const Context& c) { return c.o.agents.value_or(3); }

Rule make_rule(Context& c, const Agenda& agenda, std::size_t n) {
  const std::string& spec = c.o.rule;
  if (spec == "majority") return Rule("majority", [rule = majority_rule(n)](const Profile& p) { return apply_quota(rule, p); });
  if (spec == "pbp") return pbp_rule();
  if (spec == "dbp") return dbp_rule();
  if (spec.starts_with("quota:")) {
    const std::string digits = spec.substr(6);
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::invalid_argument, "bad quota in rule '" + spec + "'");
    return as_rule(QuotaRule(n, std::stoul(digits)));
  }
  if (spec.starts_with("quota-file:")) {
    QuotaRule rule = parse_quotas(c.inputs.load("quotas", spec.substr(11)), agenda, n);
    return Rule("quota-file", [rule](const Profile& p) { return apply_quota(rule, p); });
  }
  throw Error(ErrorCode::invalid_argument, "unknown rule '" + spec + "'");
}

std::vector<Formula> parse_formulas(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const std::string& t : texts) out.push_back(parse_formula(t));
  return out;
}

void write_output(Context& c, const std::string& name, const std::string& text, json& files) {
  if (c.o.out_dir.empty()) {
    files[name] = text;
    return;
  }
  std::filesystem::create_directories(c.o.out_dir);
  const std::filesystem::path path = std::filesystem::path(c.o.out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::io, "cannot write " + path.string());
  f << text;
  files[name] = path.string();
}

void outcome_report(Context& c, const JudgmentSet& out, const Agenda& agenda) {
  const ValidationFlags flags = validate_judgment_set(out, agenda);
  c.result["outcome"] = judgment_json(out, agenda);
  c.result["complete"] = flags.complete;
  c.result["complement_free"] = flags.complement_free;
  c.result["consistent"] = flags.consistent;
  if (!flags.consistent) {
    const std::vector<Formula> members = formulas_of(out, agenda);
    std::vector<Formula> core;
    for (std::size_t i : minimal_inconsistent_core(members)) core.push_back(members[i]);
    c.witnesses.push_back(json{{"kind", "mi_subset"}, {"formulas", formulas_json(core)}});
  }
}

void cmd_aggregate(Context& c) {
  const Agenda agenda = load_agenda(c);
  const Profile profile = load_profile(c, agenda);
  c.result["rule"] = c.o.rule;
  if (c.o.rule == "dbp") {
    DbpOutcome dbp = apply_dbp(profile);
    if (c.o.tie_break == "lex") dbp.winners.resize(1);
    c.result["min_distance"] = dbp.min_distance;
    json winners = json::array();
    for (const JudgmentSet& j : dbp.winners) winners.push_back(judgment_json(j, agenda));
    c.result["winners"] = winners;
    return;
  }
  outcome_report(c, make_rule(c, agenda, profile.n())(profile), agenda);
}

void cmd_windet(Context& c) {
  const Agenda agenda = load_agenda(c);
  const Profile profile = load_profile(c, agenda);
  const std::vector<Formula> l = parse_formulas(c.o.formulas);
  c.result["rule"] = c.o.rule;
  c.result["formulas"] = formulas_json(l);
  if (c.o.rule == "dbp") {
    if (c.o.distance) {
      c.result["problem"] = "windet*_k";
      c.result["distance"] = *c.o.distance;
      c.result["answer"] = windet_star_k(profile, l, *c.o.distance);
    } else {
      c.result["problem"] = "windet*";
      c.result["answer"] = windet_star(profile, l);
      c.result["winning_distance"] = apply_dbp(profile).min_distance;
    }
    return;
  }
  if (l.size() != 1) throw Error(ErrorCode::invalid_argument, "windet takes exactly one --formula for this rule");
  c.result["problem"] = "windet";
  c.result["answer"] = windet(make_rule(c, agenda, profile.n()), profile, l.front());
}

json manipulation_json(const ManipulationWitness& w, const Agenda& agenda) {
  return json{{"kind", "manipulation"},
              {"insincere", judgment_json(w.insincere, agenda)},
              {"outcome", judgment_json(w.outcome, agenda)},
              {"truthful_distance", w.truthful_distance},
              {"manipulated_distance", w.manipulated_distance}};
}

std::size_t agent_index(const Context& c, std::size_t n) {
  const std::size_t agent = c.o.agent.value_or(0);
  if (agent < 1 || agent > n)
    throw Error(ErrorCode::invalid_argument, "--agent must lie in 1.." + std::to_string(n));
  return agent - 1;
}

void cmd_manipulate(Context& c) {
  const Agenda agenda = load_agenda(c);
  const Profile profile = load_profile(c, agenda);
  const ManipulationInstance inst{profile, agent_index(c, profile.n())};
  const Rule rule = make_rule(c, agenda, profile.n());
  c.result["rule"] = c.o.rule;
  c.result["agent"] = inst.agent + 1;
  const auto w = find_manipulation(rule, inst);
  c.result["manipulable"] = w.has_value();
  if (w) {
    json entry = manipulation_json(*w, agenda);
    if (c.o.rule == "pbp") entry["certificate_verified"] = verify_manipulation_certificate(inst, w->insincere);
    c.witnesses.push_back(entry);
  }
}

void cmd_strategy_proof(Context& c) {
  const Agenda agenda = load_agenda(c);
  const std::size_t n = agent_count(c);
  const StrategyProofCheck check = is_strategy_proof(make_rule(c, agenda, n), agenda, n, c.budget);
  c.result["rule"] = c.o.rule;
  c.result["agents"] = n;
  c.result["strategy_proof"] = check.holds;
  if (!check.holds) {
    json entry = manipulation_json(*check.witness, agenda);
    entry["profile"] = profile_json(check.instance->profile);
    entry["agent"] = check.instance->agent + 1;
    c.witnesses.push_back(entry);
  }
}

void cmd_axioms(Context& c) {
  const Agenda agenda = load_agenda(c);
  const std::size_t n = agent_count(c);
  const Rule rule = make_rule(c, agenda, n);
  std::vector<Axiom> list;
  if (c.o.axioms.empty()) {
    list = {Axiom::U, Axiom::A, Axiom::N, Axiom::I, Axiom::S, Axiom::M_I, Axiom::M_N,
            Axiom::WR, Axiom::Complete, Axiom::ComplementFree, Axiom::Consistent};
  } else {
    for (const std::string& name : c.o.axioms) {
      auto a = parse_axiom(name);
      if (!a) throw Error(ErrorCode::invalid_argument, "unknown axiom '" + name + "'");
      list.push_back(*a);
    }
  }
  c.result["rule"] = c.o.rule;
  c.result["agents"] = n;
  json axioms = json::object();
  for (Axiom a : list) {
    const AxiomCheck check = check_axiom(rule, agenda, n, a, c.budget);
    axioms[std::string(to_string(a))] = check.holds;
    if (check.witness) {
      json profiles = json::array();
      for (const Profile& p : check.witness->profiles) profiles.push_back(profile_json(p));
      c.witnesses.push_back(json{{"kind", "axiom_violation"},
                                 {"axiom", std::string(to_string(a))},
                                 {"profiles", profiles},
                                 {"formulas", formulas_json(check.witness->formulas)},
                                 {"detail", check.witness->detail}});
    }
  }
  c.result["axioms"] = axioms;
}

AxiomClass parse_class(const std::string& text) {
  auto cls = parse_axiom_class(text);
  if (!cls) throw Error(ErrorCode::invalid_argument, "unknown class '" + text + "'");
  return *cls;
}

void cmd_safety(Context& c) {
  const Agenda agenda = load_agenda(c);
  const AxiomClass cls = parse_class(c.o.axiom_class);
  const std::size_t n = agent_count(c);
  const SafetyVerdict v = safety_verdict(agenda, cls, n, c.budget);
  c.result["class"] = to_string(cls);
  c.result["agents"] = n;
  c.result["property"] = to_string(v.property);
  c.result["safe"] = v.safe;
  if (c.o.brute_force) c.result["brute_force_safe"] = brute_force_safety(agenda, cls, n, true, c.budget);
  if (v.offending) c.result["offending_subset"] = mi_subset_json(*v.offending, agenda);
  if (!v.note.empty()) c.result["note"] = v.note;
  if (v.witness) {
    c.witnesses.push_back(json{{"kind", "unsafety"},
                               {"rule", v.witness->rule.name()},
                               {"profile", profile_json(v.witness->profile)},
                               {"outcome", judgment_json(v.witness->outcome, agenda)}});
  }
}

void cmd_props(Context& c) {
  const Agenda agenda = load_agenda(c);
  std::vector<std::string> names = c.o.props;
  if (names.empty()) names = {"mp", "smp", "ssmp"};
  json props = json::object();
  for (const std::string& name : names) {
    auto prop = parse_agenda_property(name);
    if (!prop) throw Error(ErrorCode::invalid_argument, "unknown property '" + name + "'");
    const PropertyCheck check = satisfies_property(agenda, *prop, c.budget);
    props[to_string(*prop)] = check.holds;
    if (check.witness)
      c.witnesses.push_back(json{{"kind", "property_violation"},
                                 {"property", to_string(*prop)},
                                 {"subset", mi_subset_json(*check.witness, agenda)}});
  }
  c.result["properties"] = props;
  json subsets = json::array();
  for (const MISubset& s : minimal_inconsistent_subsets(agenda, std::nullopt, c.budget))
    subsets.push_back(mi_subset_json(s, agenda));
  c.result["mi_subsets"] = subsets;
}

void cmd_enumerate(Context& c) {
  const Agenda agenda = load_agenda(c);
  json sets = json::array();
  for (const JudgmentSet& j : enumerate_judgment_sets(agenda)) sets.push_back(judgment_json(j, agenda));
  c.result["count"] = sets.size();
  c.result["judgment_sets"] = sets;
}

void reduce_kemeny(Context& c) {
  const PreferenceProfile pp = parse_preferences(c.inputs.load("preferences", c.o.preferences_path));
  const Agenda agenda = build_kemeny_agenda(pp.candidates);
  const Profile profile = encode_preference_profile(pp, agenda);
  c.result["candidates"] = pp.candidates;
  c.result["voters"] = profile.n();
  c.result["agenda_size"] = agenda.size();
  json winners = json::object();
  for (const std::string& cand : pp.candidates) winners[cand] = kemeny_winner(pp, cand, false);
  c.result["kemeny_winner"] = winners;
  json files = json::object();
  write_output(c, "agenda.txt", write_agenda(agenda), files);
  write_output(c, "profile.txt", write_profile(profile), files);
  c.result["files"] = files;
}

void reduce_sat_manip(Context& c) {
  if (c.o.formulas.size() != 1) throw Error(ErrorCode::invalid_argument, "reduce sat-manip takes exactly one --formula");
  const Formula phi = parse_formula(c.o.formulas.front());
  const ManipulationInstance inst = build_manip_reduction(phi);
  c.result["formula"] = to_string(phi);
  c.result["agent"] = inst.agent + 1;
  c.result["agenda_size"] = inst.profile.agenda().size();
  c.result["satisfiable"] = is_consistent({phi});
  const auto w = find_manipulation(pbp_rule(), inst);
  c.result["manipulable"] = w.has_value();
  if (w) c.witnesses.push_back(manipulation_json(*w, inst.profile.agenda()));
  json files = json::object();
  write_output(c, "agenda.txt", write_agenda(inst.profile.agenda()), files);
  write_output(c, "profile.txt", write_profile(inst.profile), files);
  c.result["files"] = files;
}

void reduce_qbf_lift(Context& c) {
  const QbfInstance q = parse_qbf(c.inputs.load("qbf", c.o.qbf_path));
  const Sat2Instance pair = lift_to_sat2(q);
  c.result["original_true"] = eval_qbf(q, c.budget);
  c.result["positive_true"] = eval_qbf(pair.positive, c.budget);
  c.result["negated_true"] = eval_qbf(pair.negated, c.budget);
  json files = json::object();
  write_output(c, "positive.qbf", write_qbf(pair.positive), files);
  write_output(c, "negated.qbf", write_qbf(pair.negated), files);
  c.result["files"] = files;
}

void reduce_qbf_ssmp(Context& c) {
  const QbfInstance q = parse_qbf(c.inputs.load("qbf", c.o.qbf_path));
  QbfInstance negated = q;
  negated.matrix = Formula::negation(q.matrix);
  const Sat2Instance pair{q, negated};
  const Agenda agenda = ssmp_agenda_from_qbf(pair);
  c.result["sat2_true"] = eval_sat2(pair, c.budget);
  c.result["ssmp"] = satisfies_property(agenda, {AgendaProperty::Kind::ssmp}, c.budget).holds;
  json files = json::object();
  write_output(c, "agenda.txt", write_agenda(agenda), files);
  c.result["files"] = files;
}

void reduce_ssmp_mp(Context& c) {
  const Agenda agenda = load_agenda(c);
  const Agenda psi = mp_agenda_from_ssmp(agenda);
  c.result["agenda_size"] = psi.size();
  c.result["ssmp"] = satisfies_property(agenda, {AgendaProperty::Kind::ssmp}, c.budget).holds;
  c.result["mp"] = satisfies_property(psi, {AgendaProperty::Kind::mp, 2}, c.budget).holds;
  json files = json::object();
  write_output(c, "agenda.txt", write_agenda(psi), files);
  c.result["files"] = files;
}

json error_json(std::string_view code, const std::string& message, const std::string& witness) {
  json e{{"code", code}, {"message", message}};
  if (!witness.empty()) e["witness"] = witness;
  return json{{"error", e}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Judgment aggregation engine", "agorum"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", o.budget, "Profile budget for exhaustive scans (overrides AGORUM_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", o.no_timing, "Omit the timing section from the report");

  auto agenda_opt = [&](CLI::App* sub) {
    sub->add_option("--agenda", o.agenda_path, "Agenda file")->required();
  };
  auto profile_opt = [&](CLI::App* sub) {
    sub->add_option("--profile", o.profile_path, "Profile file")->required();
  };
  auto rule_opt = [&](CLI::App* sub) {
    sub->add_option("--rule", o.rule, "majority | quota:m | quota-file:path | pbp | dbp")->capture_default_str();
  };
  auto agents_opt = [&](CLI::App* sub) {
    sub->add_option("--agents", o.agents, "Number of agents (default 3)")->check(CLI::PositiveNumber);
  };

  CLI::App* aggregate = app.add_subcommand("aggregate", "Apply a rule to a profile");
  agenda_opt(aggregate);
  profile_opt(aggregate);
  rule_opt(aggregate);
  aggregate->add_option("--tie-break", o.tie_break, "DBP ties: none | lex")
      ->check(CLI::IsMember({"none", "lex"}))
      ->capture_default_str();

  CLI::App* windet_cmd = app.add_subcommand("windet", "Winner determination");
  agenda_opt(windet_cmd);
  profile_opt(windet_cmd);
  rule_opt(windet_cmd);
  windet_cmd->add_option("--formula", o.formulas, "Formula (repeat to build L for dbp)");
  windet_cmd->add_option("--distance", o.distance, "Distance bound K (dbp only)");

  CLI::App* manipulate = app.add_subcommand("manipulate", "Search for a manipulation by one agent");
  agenda_opt(manipulate);
  profile_opt(manipulate);
  rule_opt(manipulate);
  manipulate->add_option("--agent", o.agent, "Manipulating agent, 1-based")->required();

  CLI::App* sp = app.add_subcommand("strategy-proof", "Exhaustive strategy-proofness check");
  agenda_opt(sp);
  rule_opt(sp);
  agents_opt(sp);

  CLI::App* axioms = app.add_subcommand("axioms", "Exhaustive axiom checks");
  agenda_opt(axioms);
  rule_opt(axioms);
  agents_opt(axioms);
  axioms->add_option("--axiom", o.axioms, "U | A | N | I | S | M_I | M_N | WR | complete | complement-free | consistent");

  CLI::App* safety = app.add_subcommand("safety", "Safety of the agenda for a class of rules");
  agenda_opt(safety);
  agents_opt(safety);
  safety->add_option("--class", o.axiom_class, "majority | wraus | wraun | wraui | quota-range:k")->capture_default_str();
  safety->add_flag("--brute-force", o.brute_force, "Also run the exhaustive check over the class");

  CLI::App* props = app.add_subcommand("props", "Median properties of the agenda");
  agenda_opt(props);
  props->add_option("--prop", o.props, "mp | kmp:k | smp | ssmp");

  CLI::App* enumerate = app.add_subcommand("enumerate", "List all complete consistent judgment sets");
  agenda_opt(enumerate);

  CLI::App* reduce = app.add_subcommand("reduce", "Build reduction instances");
  reduce->require_subcommand(1);
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", o.out_dir, "Directory for generated files"); };
  CLI::App* r_kemeny = reduce->add_subcommand("kemeny", "Kemeny winner as DBP winner determination");
  r_kemeny->add_option("--preferences", o.preferences_path, "Preference file")->required();
  out_opt(r_kemeny);
  CLI::App* r_sat = reduce->add_subcommand("sat-manip", "Satisfiability as PBP manipulation");
  r_sat->add_option("--formula", o.formulas, "Formula")->required();
  out_opt(r_sat);
  CLI::App* r_lift = reduce->add_subcommand("qbf-lift", "forall-exists QBF to its paired form");
  r_lift->add_option("--qbf", o.qbf_path, "QBF file")->required();
  out_opt(r_lift);
  CLI::App* r_ssmp = reduce->add_subcommand("qbf-ssmp", "Paired QBF to an agenda for the SSMP");
  r_ssmp->add_option("--qbf", o.qbf_path, "QBF file")->required();
  out_opt(r_ssmp);
  CLI::App* r_mp = reduce->add_subcommand("ssmp-mp", "SSMP agenda to an agenda for the MP");
  agenda_opt(r_mp);
  out_opt(r_mp);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context c{o, Budget::from_environment(), {}};
  if (o.budget) c.budget.profiles = *o.budget;
  const auto start = std::chrono::steady_clock::now();
  std::string command;
  try {
    if (aggregate->parsed()) command = "aggregate", cmd_aggregate(c);
    else if (windet_cmd->parsed()) command = "windet", cmd_windet(c);
    else if (manipulate->parsed()) command = "manipulate", cmd_manipulate(c);
    else if (sp->parsed()) command = "strategy-proof", cmd_strategy_proof(c);
    else if (axioms->parsed()) command = "axioms", cmd_axioms(c);
    else if (safety->parsed()) command = "safety", cmd_safety(c);
    else if (props->parsed()) command = "props", cmd_props(c);
    else if (enumerate->parsed()) command = "enumerate", cmd_enumerate(c);
    else if (r_kemeny->parsed()) command = "reduce kemeny", reduce_kemeny(c);
    else if (r_sat->parsed()) command = "reduce sat-manip", reduce_sat_manip(c);
    else if (r_lift->parsed()) command = "reduce qbf-lift", reduce_qbf_lift(c);
    else if (r_ssmp->parsed()) command = "reduce qbf-ssmp", reduce_qbf_ssmp(c);
    else if (r_mp->parsed()) command = "reduce ssmp-mp", reduce_ssmp_mp(c);
  } catch (const Error& e) {
    out << error_json(to_string(e.code()), e.what(), e.witness()).dump(2) << "\n";
    err << "agorum: " << e.what() << "\n";
    return e.code() == ErrorCode::budget_exceeded ? kExitBudget : kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    out << error_json(to_string(ErrorCode::io), e.what(), "").dump(2) << "\n";
    err << "agorum: " << e.what() << "\n";
    return kExitInput;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  json report;
  report["command"] = command;
  report["arguments"] = std::vector<std::string>(args.begin() + (args.empty() ? 0 : 1), args.end());
  report["inputs"] = c.inputs.digests();
  report["result"] = c.result;
  report["witnesses"] = c.witnesses;
  if (!o.no_timing) report["timing"] = json{{"elapsed_ms", elapsed.count()}};
  out << report.dump(2) << "\n";
  return kExitOk;
}

}  // namespace agorum::cli
