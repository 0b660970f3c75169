#include "agorum/qbf.hpp"

#include <algorithm>
#include <set>

#include "agorum/error.hpp"
#include "agorum/logic.hpp"

namespace agorum {

namespace {

Formula rename(const Formula& f, const std::string& suffix) {
  switch (f.connective()) {
    case Connective::variable: return Formula::variable(f.name() + suffix);
    case Connective::top:
    case Connective::bottom: return f;
    case Connective::negation: return Formula::negation(rename(f.operand(), suffix));
    default: return Formula::binary(f.connective(), rename(f.left(), suffix), rename(f.right(), suffix));
  }
}

bool exists_y(const QbfInstance& q, Assignment& v, std::size_t next) {
  if (next == q.existential.size()) return evaluate(q.matrix, v);
  for (bool value : {false, true}) {
    v.set(q.existential[next], value);
    if (exists_y(q, v, next + 1)) return true;
  }
  return false;
}

bool forall_x(const QbfInstance& q, Assignment& v, std::size_t next) {
  if (next == q.universal.size()) return exists_y(q, v, 0);
  for (bool value : {false, true}) {
    v.set(q.universal[next], value);
    if (!forall_x(q, v, next + 1)) return false;
  }
  return true;
}

}  // namespace

void validate(const QbfInstance& q) {
  std::set<std::string> declared;
  for (const auto* list : {&q.universal, &q.existential}) {
    for (const std::string& v : *list) {
      if (!is_identifier(v)) throw Error(ErrorCode::invalid_argument, "'" + v + "' is not a variable name");
      if (!declared.insert(v).second)
        throw Error(ErrorCode::invalid_argument, "variable " + v + " is quantified twice");
    }
  }
  for (const std::string& v : variables_of(q.matrix)) {
    if (!declared.contains(v)) throw Error(ErrorCode::invalid_argument, "variable " + v + " is not quantified");
  }
}

bool eval_qbf(const QbfInstance& q, const Budget& budget) {
  validate(q);
  Budget::require(q.universal.size() + q.existential.size(), budget.qbf_variables, "QBF variables");
  Assignment v;
  return forall_x(q, v, 0);
}

SideConditions check_side_conditions(const Formula& matrix) {
  SideConditions c;
  c.not_tautology = !is_tautology(matrix);
  c.not_contradiction = !is_contradiction(matrix);
  c.not_literal = true;
  for (const std::string& v : variables_of(matrix)) {
    const Formula x = Formula::variable(v);
    if (are_equivalent(matrix, x) || are_equivalent(matrix, Formula::negation(x))) c.not_literal = false;
  }
  return c;
}

bool eval_sat2(const Sat2Instance& pair, const Budget& budget) {
  return eval_qbf(pair.positive, budget) && eval_qbf(pair.negated, budget);
}

Sat2Instance lift_to_sat2(const QbfInstance& q) {
  validate(q);
  for (const char* fresh : {"a", "b"}) {
    const bool used = std::find(q.universal.begin(), q.universal.end(), fresh) != q.universal.end() ||
                      std::find(q.existential.begin(), q.existential.end(), fresh) != q.existential.end();
    if (used) throw Error(ErrorCode::invalid_argument, std::string("variable ") + fresh + " is already in use");
  }
  QbfInstance lifted;
  lifted.universal = q.universal;
  lifted.universal.push_back("a");
  lifted.existential = q.existential;
  lifted.existential.push_back("b");
  lifted.matrix = Formula::conjunction(Formula::disjunction(q.matrix, Formula::variable("a")), Formula::variable("b"));
  QbfInstance negated = lifted;
  negated.matrix = Formula::negation(lifted.matrix);
  return {std::move(lifted), std::move(negated)};
}

Agenda ssmp_agenda_from_qbf(const Sat2Instance& pair) {
  validate(pair.positive);
  const SideConditions c = check_side_conditions(pair.positive.matrix);
  if (!c.ok())
    throw Error(ErrorCode::invalid_argument,
                std::string("matrix is ") +
                    (!c.not_tautology ? "a tautology" : !c.not_contradiction ? "a contradiction" : "equivalent to a literal"),
                to_string(pair.positive.matrix));
  std::vector<Formula> positives;
  for (const std::string& x : pair.positive.universal) positives.push_back(Formula::variable(x));
  positives.push_back(Formula::conjunction(pair.positive.matrix, Formula::top()));
  return Agenda(std::move(positives));
}

Agenda mp_agenda_from_ssmp(const Agenda& agenda) {
  const std::size_t m = agenda.size();
  std::set<std::string> fresh;
  for (std::size_t j = 1; j <= m; ++j) {
    const std::string suffix = "__" + std::to_string(j);
    for (const std::string& v : agenda.variables()) fresh.insert(v + suffix);
    fresh.insert("aux" + suffix);
  }
  if (fresh.size() != m * (agenda.variables().size() + 1))
    throw Error(ErrorCode::invalid_argument, "variable names collide with the copy naming scheme");
  std::vector<Formula> positives;
  auto add = [&](Formula f) {
    if (std::find(positives.begin(), positives.end(), f) == positives.end()) positives.push_back(std::move(f));
  };
  for (std::size_t j = 1; j <= m; ++j) {
    const std::string suffix = "__" + std::to_string(j);
    const Formula aux = Formula::variable("aux" + suffix);
    add(aux);
    for (std::size_t i = 1; i <= m; ++i) {
      Formula copy = rename(agenda.positive(i - 1), suffix);
      add(i == j ? Formula::disjunction(copy, aux) : copy);
    }
  }
  return Agenda(std::move(positives));
}

}  // namespace agorum
