#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agorum/agenda.hpp"
#include "agorum/axioms.hpp"
#include "agorum/budget.hpp"
#include "agorum/rules.hpp"

namespace agorum {

struct AgendaProperty {
  enum class Kind { mp, kmp, smp, ssmp };
  Kind kind = Kind::mp;
  std::size_t k = 2;  // kmp only; mp is kmp with k = 2

  friend bool operator==(const AgendaProperty&, const AgendaProperty&) = default;
};

std::string to_string(const AgendaProperty& prop);
std::optional<AgendaProperty> parse_agenda_property(std::string_view text);

// Members in Agenda::formulas() order.
struct MISubset {
  std::vector<Member> members;
  std::size_t size() const noexcept { return members.size(); }
};

std::vector<Formula> formulas_of(const MISubset& s, const Agenda& agenda);

// Every minimally inconsistent subset, ordered by size and then
// lexicographically over member positions. Subsets larger than `max_size`
// are not reported. The scan runs separately on each group of members
// linked by shared variables, each limited to budget.subset_members.
std::vector<MISubset> minimal_inconsistent_subsets(const Agenda& agenda, std::optional<std::size_t> max_size = std::nullopt,
                                                   const Budget& budget = Budget{});

struct PropertyCheck {
  bool holds = true;
  std::optional<MISubset> witness;  // offending mi-subset when false
};

PropertyCheck satisfies_property(const Agenda& agenda, const AgendaProperty& prop, const Budget& budget = Budget{});

// Property that decides safety for each class.
AgendaProperty required_property(const AxiomClass& cls);

struct UnsafetyWitness {
  Rule rule;
  Profile profile;
  JudgmentSet outcome;
};

struct SafetyVerdict {
  bool safe = true;
  AgendaProperty property;
  std::optional<MISubset> offending;  // certificate of the failed property
  std::optional<UnsafetyWitness> witness;
  std::string note;  // why no witness was attached to an unsafe verdict
};

SafetyVerdict safety_verdict(const Agenda& agenda, const AxiomClass& cls, std::size_t n = 3,
                             const Budget& budget = Budget{});

// A rule of the class and a profile on which its outcome is inconsistent.
// Throws property_holds when the class's property holds, invalid_argument
// when no witness of this form exists for n.
UnsafetyWitness construct_unsafety_witness(const Agenda& agenda, const AxiomClass& cls, std::size_t n,
                                           const Budget& budget = Budget{});

// Every rule of the class on every profile of J(Φ)^n gives a consistent
// outcome. The neutral class is checked profile by profile: its rules may
// pick any symmetric h for each profile orbit independently.
bool brute_force_safety(const Agenda& agenda, const AxiomClass& cls, std::size_t n, bool unanimity = true,
                        const Budget& budget = Budget{});

}  // namespace agorum
