#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "agorum/agenda.hpp"
#include "agorum/budget.hpp"
#include "agorum/rules.hpp"

namespace agorum {

// Calls `visit` on every profile in J(Φ)^n, agents varying fastest from the
// last position, each agent's set drawn in canonical J(Φ) order. Stops early
// when `visit` returns false. Throws budget_exceeded past budget.profiles.
void for_each_profile(const Agenda& agenda, std::size_t n, const Budget& budget,
                      const std::function<bool(const Profile&)>& visit);

enum class Axiom { U, A, N, I, S, M_I, M_N, WR, Complete, ComplementFree, Consistent };

std::string_view to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

struct AxiomViolation {
  std::vector<Profile> profiles;  // one, or two for I, S and M^I
  std::vector<Formula> formulas;
  std::string detail;
};

struct AxiomCheck {
  bool holds = true;
  std::optional<AxiomViolation> witness;  // first violation in canonical order
};

AxiomCheck check_axiom(const Rule& rule, const Agenda& agenda, std::size_t n, Axiom axiom,
                       const Budget& budget = Budget{});

// One function h : {0..n} → {0,1} for every formula and profile.
struct UniformH {
  std::vector<bool> h;
};

// h_φ for each positive formula φ_issue: φ accepted iff h_φ(|N_φ|) = 1,
// otherwise ∼φ. This ties h_∼φ(n − i) = 1 − h_φ(i), which is what weak
// rationality demands of a formula and its complement.
struct PerFormulaH {
  std::vector<std::vector<bool>> h;
};

// h_J keyed by the sorted list of the profile's judgment sets, so permuted
// profiles share one function. Profiles without an entry use `fallback`.
struct PerProfileH {
  std::map<std::vector<JudgmentSet>, std::vector<bool>> h;
  std::vector<bool> fallback;
};

using CharacteristicH = std::variant<UniformH, PerFormulaH, PerProfileH>;

// Validates odd n, table lengths n+1, h(i) = 1 − h(n−i) for the uniform and
// per-profile forms, and h(n) = 1 (so h(0) = 0) when `unanimous` is set.
Rule make_rule_from_h(const CharacteristicH& h, std::size_t n, bool unanimous = true);

// Threshold (n+1)/2 and odd-count h for n agents.
std::vector<bool> majority_h(std::size_t n);
std::vector<bool> parity_h(std::size_t n);
// Every h with h(i) = 1 − h(n−i), and h(n) = 1 when `unanimity` is set.
// Majority comes first.
std::vector<std::vector<bool>> symmetric_tables(std::size_t n, bool unanimity);

enum class RuleClass { majority, wr_a_u_s, wr_a_u_n, wr_a_u_i, quota_range };

struct AxiomClass {
  RuleClass kind = RuleClass::majority;
  std::size_t k = 2;  // quota_range only

  friend bool operator==(const AxiomClass&, const AxiomClass&) = default;
};

std::string to_string(const AxiomClass& cls);
std::optional<AxiomClass> parse_axiom_class(std::string_view text);
// Axioms the members of the class are built to satisfy.
std::vector<Axiom> class_axioms(const AxiomClass& cls, bool unanimity = true);

// Lowest and highest m with m > n − n/k and m ≤ n.
std::pair<std::size_t, std::size_t> quota_range(std::size_t n, std::size_t k);

// Every rule of the class as produced by its representation: uniform h
// (majority-class: just majority), h_φ families, orbit-keyed h_J, or uniform
// quotas. `unanimity` = false drops the h(n) = 1 requirement.
std::vector<Rule> enumerate_class_rules(const AxiomClass& cls, const Agenda& agenda, std::size_t n,
                                        bool unanimity = true, const Budget& budget = Budget{});

// Coalitions as bitmasks over agents (bit a = agent a).
struct WinningCoalitionFamily {
  std::size_t n = 0;
  // Indexed like Agenda::formulas(): φ₁, ∼φ₁, φ₂, ...
  std::vector<std::vector<std::uint32_t>> winning;
  // Coalitions N_φ that some profile realizes; W_φ is only determined there.
  std::vector<std::vector<std::uint32_t>> realized;
};

// Throws not_independent with the offending profile pair as witness.
WinningCoalitionFamily extract_winning_coalitions(const Rule& rule, const Agenda& agenda, std::size_t n,
                                                  const Budget& budget = Budget{});

// The grand coalition wins for every formula where it is realized.
bool grand_coalition_wins(const WinningCoalitionFamily& w);
// No two formulas disagree on a coalition realized for both.
bool identical_across_formulas(const WinningCoalitionFamily& w);
// Among realized coalitions, winning depends only on cardinality.
bool closed_under_cardinality(const WinningCoalitionFamily& w);

}  // namespace agorum
