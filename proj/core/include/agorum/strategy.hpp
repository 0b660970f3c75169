#pragma once

#include <cstddef>
#include <optional>

#include "agorum/agenda.hpp"
#include "agorum/budget.hpp"
#include "agorum/rules.hpp"

namespace agorum {

struct ManipulationInstance {
  Profile profile;
  std::size_t agent = 0;  // 0-based manipulator index
};

struct ManipulationWitness {
  JudgmentSet insincere;
  JudgmentSet outcome;  // F(J₋ᵢ, J′ᵢ)
  std::size_t truthful_distance = 0;
  std::size_t manipulated_distance = 0;
};

// H(truth, j) < H(truth, k).
bool prefers(const JudgmentSet& truth, const JudgmentSet& j, const JudgmentSet& k);

// First J′ᵢ in canonical J(Φ) order whose outcome is strictly closer to the
// agent's truthful set. Outcomes that are incomplete or accept both φ and ∼φ
// are compared through their characteristic function on Φ⁺ (φ ∈ J or not).
std::optional<ManipulationWitness> find_manipulation(const Rule& rule, const ManipulationInstance& inst);

struct StrategyProofCheck {
  bool holds = true;
  std::optional<ManipulationInstance> instance;
  std::optional<ManipulationWitness> witness;
};

StrategyProofCheck is_strategy_proof(const Rule& rule, const Agenda& agenda, std::size_t n,
                                     const Budget& budget = Budget{});

// Three-agent PBP instance where agent 3 can manipulate iff φ is satisfiable.
// Agenda: φ's variables (sorted), q1, q2, then m+2 variants of q1 | (φ & q2).
ManipulationInstance build_manip_reduction(const Formula& phi);

// Polynomial check of a claimed PBP manipulation: completeness, the single
// model fixed by the literals, then a strict distance improvement.
bool verify_manipulation_certificate(const ManipulationInstance& inst, const JudgmentSet& candidate);

}  // namespace agorum
