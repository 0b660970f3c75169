#pragma once

#include <string>
#include <vector>

#include "agorum/agenda.hpp"
#include "agorum/budget.hpp"
#include "agorum/formula.hpp"

namespace agorum {

// ∀x ∃y. matrix
struct QbfInstance {
  std::vector<std::string> universal;
  std::vector<std::string> existential;
  Formula matrix = Formula::top();
};

// Throws invalid_argument on overlapping or undeclared variables.
void validate(const QbfInstance& q);

bool eval_qbf(const QbfInstance& q, const Budget& budget = Budget{});

// ∀x∃y.φ ∧ ∀x∃y.¬φ, asked for a matrix that is no tautology, no
// contradiction and not equivalent to a literal.
struct Sat2Instance {
  QbfInstance positive;
  QbfInstance negated;
};

struct SideConditions {
  bool not_tautology = false;
  bool not_contradiction = false;
  bool not_literal = false;
  bool ok() const noexcept { return not_tautology && not_contradiction && not_literal; }
};

SideConditions check_side_conditions(const Formula& matrix);
bool eval_sat2(const Sat2Instance& pair, const Budget& budget = Budget{});

// Matrix (φ | a) & b with a universal and b existential; a and b must be
// unused.
Sat2Instance lift_to_sat2(const QbfInstance& q);

// x₁..x_r followed by (φ & T). Throws invalid_argument when the matrix
// fails a side condition.
Agenda ssmp_agenda_from_qbf(const Sat2Instance& pair);

// m renamed copies of Φ⁺ (v becomes v__j), copy j led by aux__j and with its
// j-th formula disjoined with aux__j. Formulas without variables coincide
// across copies and are kept once.
Agenda mp_agenda_from_ssmp(const Agenda& agenda);

}  // namespace agorum
