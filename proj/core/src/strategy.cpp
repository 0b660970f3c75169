#include "agorum/strategy.hpp"

#include <vector>

#include "agorum/axioms.hpp"
#include "agorum/error.hpp"
#include "agorum/logic.hpp"

namespace agorum {

namespace {

// H through characteristic functions: J(φ) = 1 iff φ ∈ J, over Φ⁺. For a
// complete complement-free outcome this is the usual Hamming distance.
std::size_t outcome_distance(const JudgmentSet& truth, const JudgmentSet& out) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) d += truth.value(i) != out.contains(Member{i, true});
  return d;
}

std::vector<bool> bits_of(const Agenda& agenda, const Assignment& v) {
  std::vector<bool> bits;
  for (const Formula& f : agenda.positives()) bits.push_back(evaluate(f, v));
  return bits;
}

}  // namespace

bool prefers(const JudgmentSet& truth, const JudgmentSet& j, const JudgmentSet& k) {
  return hamming(truth, j) < hamming(truth, k);
}

std::optional<ManipulationWitness> find_manipulation(const Rule& rule, const ManipulationInstance& inst) {
  const Profile& p = inst.profile;
  if (inst.agent >= p.n()) throw Error(ErrorCode::invalid_argument, "manipulator index out of range");
  const JudgmentSet& truth = p.agent(inst.agent);
  const std::size_t truthful = outcome_distance(truth, rule(p));
  for (const JudgmentSet& alt : p.agenda().judgment_sets()) {
    if (alt == truth) continue;
    std::vector<JudgmentSet> agents = p.agents();
    agents[inst.agent] = alt;
    JudgmentSet out = rule(Profile::from_rational(p.agenda(), std::move(agents)));
    const std::size_t d = outcome_distance(truth, out);
    if (d < truthful) return ManipulationWitness{alt, std::move(out), truthful, d};
  }
  return std::nullopt;
}

StrategyProofCheck is_strategy_proof(const Rule& rule, const Agenda& agenda, std::size_t n, const Budget& budget) {
  StrategyProofCheck result;
  for_each_profile(agenda, n, budget, [&](const Profile& p) {
    for (std::size_t a = 0; a < n; ++a) {
      ManipulationInstance inst{p, a};
      if (auto w = find_manipulation(rule, inst)) {
        result.holds = false;
        result.instance = std::move(inst);
        result.witness = std::move(w);
        return false;
      }
    }
    return true;
  });
  return result;
}

ManipulationInstance build_manip_reduction(const Formula& phi) {
  const std::set<std::string> vars = variables_of(phi);
  for (const char* fresh : {"q1", "q2"}) {
    if (vars.contains(fresh))
      throw Error(ErrorCode::invalid_argument, std::string("formula already uses the reserved variable ") + fresh,
                  to_string(phi));
  }
  const std::size_t m = vars.size();
  const Formula q1 = Formula::variable("q1");
  const Formula q2 = Formula::variable("q2");
  std::vector<Formula> positives;
  for (const std::string& v : vars) positives.push_back(Formula::variable(v));
  positives.push_back(q1);
  positives.push_back(q2);
  const Formula psi = Formula::disjunction(q1, Formula::conjunction(phi, q2));
  for (Formula& f : syntactic_variants(psi, m + 2)) positives.push_back(std::move(f));
  Agenda agenda(std::move(positives));

  // Rows of the reduction table; the compound column follows from each row's
  // model.
  auto row = [&](bool p_value, bool q1_value, bool q2_value) {
    Assignment v;
    for (const std::string& name : vars) v.set(name, p_value);
    v.set("q1", q1_value);
    v.set("q2", q2_value);
    return JudgmentSet::from_bits(bits_of(agenda, v));
  };
  std::vector<JudgmentSet> agents{row(true, false, false), row(false, false, true), row(true, true, false)};
  return ManipulationInstance{Profile::from_rational(agenda, std::move(agents)), 2};
}

bool verify_manipulation_certificate(const ManipulationInstance& inst, const JudgmentSet& candidate) {
  const Profile& p = inst.profile;
  const Agenda& agenda = p.agenda();
  if (inst.agent >= p.n() || candidate.size() != agenda.size()) return false;
  if (!candidate.is_complete() || !candidate.is_complement_free()) return false;
  if (!agenda.is_variable_closed()) return false;
  Assignment model;
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    const Formula& f = agenda.positive(i);
    if (f.is_variable()) model.set(f.name(), candidate.value(i));
  }
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    if (evaluate(agenda.positive(i), model) != candidate.value(i)) return false;
  }
  std::vector<JudgmentSet> agents = p.agents();
  agents[inst.agent] = candidate;
  const JudgmentSet& truth = p.agent(inst.agent);
  const JudgmentSet before = apply_pbp(p);
  const JudgmentSet after = apply_pbp(Profile::from_rational(agenda, std::move(agents)));
  return hamming(truth, after) < hamming(truth, before);
}

}  // namespace agorum
