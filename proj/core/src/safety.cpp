#include "agorum/safety.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "agorum/error.hpp"
#include "agorum/logic.hpp"

namespace agorum {

namespace {

Member member_at(std::size_t idx) { return {idx / 2, idx % 2 == 0}; }
std::size_t index_of(Member m) { return 2 * m.issue + (m.positive ? 0 : 1); }

// Groups of member positions linked by shared variables. Members without
// variables form groups of their own.
std::vector<std::vector<std::size_t>> variable_components(const Agenda& agenda) {
  const std::size_t issues = agenda.size();
  std::vector<std::size_t> parent(issues);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::string, std::size_t> owner;
  for (std::size_t i = 0; i < issues; ++i) {
    for (const std::string& v : variables_of(agenda.positive(i))) {
      auto [it, fresh] = owner.try_emplace(v, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < issues; ++i) {
    groups[find(i)].push_back(2 * i);
    groups[find(i)].push_back(2 * i + 1);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

// Size-ascending scan of one component; subsets holding a known mi-subset,
// or both φ and ∼φ beyond size two, are never tested.
void scan_component(const std::vector<Formula>& formulas, const std::vector<std::size_t>& members,
                    std::size_t max_size, std::vector<std::vector<std::size_t>>& found) {
  const std::size_t local_start = found.size();
  std::vector<std::size_t> chosen;
  for (std::size_t size = 1; size <= std::min(max_size, members.size()); ++size) {
    // Enumerate combinations of `size` positions within `members`.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      chosen.clear();
      for (std::size_t p : pick) chosen.push_back(members[p]);
      bool skip = false;
      if (size > 2) {
        for (std::size_t a = 0; a + 1 < chosen.size() && !skip; ++a)
          skip = chosen[a] / 2 == chosen[a + 1] / 2;
      }
      for (std::size_t f = local_start; f < found.size() && !skip; ++f)
        skip = std::includes(chosen.begin(), chosen.end(), found[f].begin(), found[f].end());
      if (!skip) {
        std::vector<Formula> set;
        for (std::size_t idx : chosen) set.push_back(formulas[idx]);
        if (!is_consistent(set)) found.push_back(chosen);
      }
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == members.size() - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t j = pos; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

Formula formula_at(const Agenda& agenda, Member m) { return agenda.formula(m); }

UnsafetyWitness finish(const Agenda& agenda, Rule rule, const std::vector<std::vector<Formula>>& rows) {
  std::vector<JudgmentSet> agents;
  for (const auto& row : rows) agents.push_back(complete_extension(row, agenda));
  Profile profile(agenda, std::move(agents));
  JudgmentSet outcome = rule(profile);
  return UnsafetyWitness{std::move(rule), std::move(profile), std::move(outcome)};
}

UnsafetyWitness majority_witness(const Agenda& agenda, const MISubset& delta, std::size_t n) {
  const std::vector<Formula> d = formulas_of(delta, agenda);
  const Formula& phi = d[0];
  const Formula& psi = d[1];
  std::vector<Formula> without_phi, without_psi;
  for (const Formula& f : d) {
    if (f != phi) without_phi.push_back(f);
    if (f != psi) without_psi.push_back(f);
  }
  std::vector<std::vector<Formula>> rows;
  for (std::size_t a = 0; a < (n - 1) / 2; ++a) rows.push_back(without_phi);
  rows.push_back({phi, psi});
  for (std::size_t a = 0; a < (n - 1) / 2; ++a) rows.push_back(without_psi);
  return finish(agenda, make_rule_from_h(UniformH{majority_h(n)}, n), rows);
}

UnsafetyWitness parity_witness(const Agenda& agenda, const MISubset& pair, std::size_t n) {
  const std::vector<Formula> d = formulas_of(pair, agenda);
  const Formula& phi = d[0];
  const Formula& psi = d[1];
  std::vector<std::vector<Formula>> rows{
      {complement(phi), complement(psi)}, {phi, complement(psi)}, {complement(phi), psi}};
  while (rows.size() < n) rows.push_back(rows.front());
  return finish(agenda, make_rule_from_h(UniformH{parity_h(n)}, n), rows);
}

// Accepts φ and ψ on a single vote each and follows the majority elsewhere.
UnsafetyWitness one_vote_witness(const Agenda& agenda, const MISubset& pair, std::size_t n) {
  const std::vector<Formula> d = formulas_of(pair, agenda);
  PerFormulaH family;
  for (std::size_t i = 0; i < agenda.size(); ++i) family.h.push_back(majority_h(n));
  for (Member m : pair.members) {
    std::vector<bool> h(n + 1);
    for (std::size_t c = 0; c <= n; ++c) h[c] = m.positive ? c >= 1 : c == n;
    family.h[m.issue] = h;
  }
  std::vector<std::vector<Formula>> rows{{d[0]}, {d[1]}};
  while (rows.size() < n) rows.push_back(rows.front());
  return finish(agenda, make_rule_from_h(family, n), rows);
}

// Each agent rejects one member of Δ, spread as evenly as possible, so every
// member keeps at least n − ⌈n/|Δ|⌉ supporters.
std::optional<UnsafetyWitness> quota_witness(const Agenda& agenda, const MISubset& delta, std::size_t n,
                                             std::size_t k) {
  const auto [lo, hi] = quota_range(n, k);
  const std::size_t s = delta.size();
  if (lo > hi || s * (n - lo) < n) return std::nullopt;
  const std::vector<Formula> d = formulas_of(delta, agenda);
  std::vector<std::vector<Formula>> rows;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Formula> row;
    for (std::size_t j = 0; j < s; ++j) {
      if (j != a % s) row.push_back(d[j]);
    }
    rows.push_back(std::move(row));
  }
  return finish(agenda, as_rule(QuotaRule(n, lo)), rows);
}

const MISubset* first_larger_than(const std::vector<MISubset>& subsets, std::size_t k) {
  for (const MISubset& s : subsets) {
    if (s.size() > k) return &s;
  }
  return nullptr;
}

bool outcome_consistent(const JudgmentSet& out, const Agenda& agenda, std::map<JudgmentSet, bool>& memo) {
  auto it = memo.find(out);
  if (it != memo.end()) return it->second;
  const bool ok = is_consistent(formulas_of(out, agenda));
  memo.emplace(out, ok);
  return ok;
}

}  // namespace

std::string to_string(const AgendaProperty& prop) {
  switch (prop.kind) {
    case AgendaProperty::Kind::mp: return "mp";
    case AgendaProperty::Kind::kmp: return "kmp:" + std::to_string(prop.k);
    case AgendaProperty::Kind::smp: return "smp";
    case AgendaProperty::Kind::ssmp: return "ssmp";
  }
  return "?";
}

std::optional<AgendaProperty> parse_agenda_property(std::string_view text) {
  using Kind = AgendaProperty::Kind;
  if (text == "mp") return AgendaProperty{Kind::mp, 2};
  if (text == "smp") return AgendaProperty{Kind::smp};
  if (text == "ssmp") return AgendaProperty{Kind::ssmp};
  constexpr std::string_view prefix = "kmp:";
  if (text.starts_with(prefix)) {
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
    const std::size_t k = std::stoul(digits);
    if (k < 2) return std::nullopt;
    return AgendaProperty{Kind::kmp, k};
  }
  return std::nullopt;
}

std::vector<Formula> formulas_of(const MISubset& s, const Agenda& agenda) {
  std::vector<Formula> out;
  for (Member m : s.members) out.push_back(formula_at(agenda, m));
  return out;
}

std::vector<MISubset> minimal_inconsistent_subsets(const Agenda& agenda, std::optional<std::size_t> max_size,
                                                   const Budget& budget) {
  const std::vector<Formula> formulas = agenda.formulas();
  std::vector<std::vector<std::size_t>> found;
  for (const auto& component : variable_components(agenda)) {
    Budget::require(component.size(), budget.subset_members, "agenda members sharing variables");
    scan_component(formulas, component, max_size.value_or(component.size()), found);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<MISubset> out;
  for (const auto& idx : found) {
    MISubset s;
    for (std::size_t i : idx) s.members.push_back(member_at(i));
    out.push_back(std::move(s));
  }
  return out;
}

PropertyCheck satisfies_property(const Agenda& agenda, const AgendaProperty& prop, const Budget& budget) {
  using Kind = AgendaProperty::Kind;
  if (prop.kind == Kind::kmp && (prop.k < 2 || prop.k > budget.max_k))
    throw Error(ErrorCode::invalid_argument, "k must lie in 2.." + std::to_string(budget.max_k));
  PropertyCheck result;
  for (MISubset& s : minimal_inconsistent_subsets(agenda, std::nullopt, budget)) {
    bool bad = false;
    switch (prop.kind) {
      case Kind::mp: bad = s.size() > 2; break;
      case Kind::kmp: bad = s.size() > prop.k; break;
      case Kind::smp:
        bad = s.size() > 2 ||
              (s.size() == 2 && !are_equivalent(formula_at(agenda, s.members[0]),
                                                Formula::negation(formula_at(agenda, s.members[1]))));
        break;
      case Kind::ssmp: bad = s.size() > 2 || (s.size() == 2 && s.members[0].issue != s.members[1].issue); break;
    }
    if (bad) {
      result.holds = false;
      result.witness = std::move(s);
      break;
    }
  }
  return result;
}

AgendaProperty required_property(const AxiomClass& cls) {
  using Kind = AgendaProperty::Kind;
  switch (cls.kind) {
    case RuleClass::majority: return {Kind::mp, 2};
    case RuleClass::wr_a_u_s:
    case RuleClass::wr_a_u_n: return {Kind::smp};
    case RuleClass::wr_a_u_i: return {Kind::ssmp};
    case RuleClass::quota_range: return {Kind::kmp, cls.k};
  }
  return {};
}

UnsafetyWitness construct_unsafety_witness(const Agenda& agenda, const AxiomClass& cls, std::size_t n,
                                           const Budget& budget) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorCode::invalid_argument, "witness profiles need an odd n >= 3");
  const AgendaProperty prop = required_property(cls);
  if (satisfies_property(agenda, prop, budget).holds)
    throw Error(ErrorCode::property_holds, "agenda satisfies " + to_string(prop) + "; the class is safe");
  const std::vector<MISubset> subsets = minimal_inconsistent_subsets(agenda, std::nullopt, budget);
  switch (cls.kind) {
    case RuleClass::quota_range: {
      const MISubset* delta = first_larger_than(subsets, cls.k);
      if (auto w = quota_witness(agenda, *delta, n, cls.k)) return std::move(*w);
      throw Error(ErrorCode::invalid_argument,
                  "no quota in range can accept all " + std::to_string(delta->size()) + " members with n = " +
                      std::to_string(n));
    }
    default: break;
  }
  if (const MISubset* big = first_larger_than(subsets, 2)) return majority_witness(agenda, *big, n);
  if (cls.kind == RuleClass::majority) throw Error(ErrorCode::invalid_argument, "no mi-subset of size 3 or more");
  // Remaining violations are mi-pairs.
  for (const MISubset& s : subsets) {
    if (s.size() != 2) continue;
    const Formula phi = formula_at(agenda, s.members[0]);
    const Formula psi = formula_at(agenda, s.members[1]);
    if (!are_equivalent(phi, Formula::negation(psi))) return parity_witness(agenda, s, n);
  }
  if (cls.kind == RuleClass::wr_a_u_i) {
    for (const MISubset& s : subsets) {
      if (s.size() == 2 && s.members[0].issue != s.members[1].issue) return one_vote_witness(agenda, s, n);
    }
  }
  throw Error(ErrorCode::invalid_argument, "no suitable mi-subset structure for a witness");
}

SafetyVerdict safety_verdict(const Agenda& agenda, const AxiomClass& cls, std::size_t n, const Budget& budget) {
  SafetyVerdict v;
  v.property = required_property(cls);
  PropertyCheck check = satisfies_property(agenda, v.property, budget);
  v.safe = check.holds;
  if (v.safe) return v;
  v.offending = std::move(check.witness);
  try {
    v.witness = construct_unsafety_witness(agenda, cls, n, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::invalid_argument) throw;
    v.note = e.what();
  }
  return v;
}

bool brute_force_safety(const Agenda& agenda, const AxiomClass& cls, std::size_t n, bool unanimity,
                        const Budget& budget) {
  std::map<JudgmentSet, bool> memo;
  if (cls.kind == RuleClass::wr_a_u_n) {
    // F(J) depends only on the table chosen for J's orbit, so the class is
    // safe iff every symmetric table is safe on every single profile.
    const std::vector<std::vector<bool>> tables = symmetric_tables(n, unanimity);
    bool safe = true;
    for_each_profile(agenda, n, budget, [&](const Profile& p) {
      for (const auto& h : tables) {
        JudgmentSet out(agenda.size());
        for (std::size_t i = 0; i < out.size(); ++i)
          out.set(i, h[p.positive_support(i)] ? Verdict::positive : Verdict::negative);
        if (!outcome_consistent(out, agenda, memo)) {
          safe = false;
          return false;
        }
      }
      return true;
    });
    return safe;
  }
  const std::vector<Rule> rules = enumerate_class_rules(cls, agenda, n, unanimity, budget);
  for (const Rule& rule : rules) {
    bool safe = true;
    for_each_profile(agenda, n, budget, [&](const Profile& p) {
      safe = outcome_consistent(rule(p), agenda, memo);
      return safe;
    });
    if (!safe) return false;
  }
  return true;
}

}  // namespace agorum
