#include "agorum/logic.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "agorum/error.hpp"

namespace agorum {

namespace {

enum Tri : std::uint8_t { kFalse = 0, kTrue = 1, kUnknown = 2 };

Tri tri_not(Tri a) { return a == kUnknown ? kUnknown : (a == kTrue ? kFalse : kTrue); }

Tri tri_and(Tri a, Tri b) {
  if (a == kFalse || b == kFalse) return kFalse;
  if (a == kTrue && b == kTrue) return kTrue;
  return kUnknown;
}

Tri tri_or(Tri a, Tri b) {
  if (a == kTrue || b == kTrue) return kTrue;
  if (a == kFalse && b == kFalse) return kFalse;
  return kUnknown;
}

Tri tri_iff(Tri a, Tri b) {
  if (a == kUnknown || b == kUnknown) return kUnknown;
  return a == b ? kTrue : kFalse;
}

// Formulas flattened into post-order instruction ranges, one per root, so a
// root evaluates with a single forward pass and no recursion.
class Circuit {
 public:
  explicit Circuit(std::span<const Formula> roots) {
    std::set<std::string> names = variables_of(roots);
    variables_.assign(names.begin(), names.end());
    for (std::size_t i = 0; i < variables_.size(); ++i) index_[variables_[i]] = static_cast<std::uint32_t>(i);
    for (const Formula& f : roots) {
      const auto begin = static_cast<std::uint32_t>(ops_.size());
      std::set<std::uint32_t> support;
      compile(f, begin, support);
      ranges_.push_back({begin, static_cast<std::uint32_t>(ops_.size())});
      supports_.emplace_back(support.begin(), support.end());
    }
    scratch_.resize(ops_.size());
  }

  std::size_t variable_count() const { return variables_.size(); }
  std::size_t root_count() const { return ranges_.size(); }
  const std::string& variable(std::size_t i) const { return variables_[i]; }
  const std::vector<std::uint32_t>& support(std::size_t root) const { return supports_[root]; }

  Tri eval(std::size_t root, const std::vector<Tri>& assignment) const {
    const auto [begin, end] = ranges_[root];
    for (std::uint32_t i = begin; i < end; ++i) {
      const Op& op = ops_[i];
      Tri v = kUnknown;
      switch (op.kind) {
        case Connective::variable: v = assignment[op.a]; break;
        case Connective::top: v = kTrue; break;
        case Connective::bottom: v = kFalse; break;
        case Connective::negation: v = tri_not(scratch_[op.a]); break;
        case Connective::conjunction: v = tri_and(scratch_[op.a], scratch_[op.b]); break;
        case Connective::disjunction: v = tri_or(scratch_[op.a], scratch_[op.b]); break;
        case Connective::implication: v = tri_or(tri_not(scratch_[op.a]), scratch_[op.b]); break;
        case Connective::biconditional: v = tri_iff(scratch_[op.a], scratch_[op.b]); break;
      }
      scratch_[i] = v;
    }
    return scratch_[end - 1];
  }

 private:
  struct Op {
    Connective kind;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
  };

  std::uint32_t compile(const Formula& f, std::uint32_t base, std::set<std::uint32_t>& support) {
    Op op{f.connective()};
    switch (f.connective()) {
      case Connective::variable:
        op.a = index_.at(f.name());
        support.insert(op.a);
        break;
      case Connective::top:
      case Connective::bottom: break;
      case Connective::negation: op.a = compile(f.operand(), base, support); break;
      default:
        op.a = compile(f.left(), base, support);
        op.b = compile(f.right(), base, support);
        break;
    }
    ops_.push_back(op);
    return static_cast<std::uint32_t>(ops_.size() - 1);
  }

  std::vector<std::string> variables_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<Op> ops_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ranges_;
  std::vector<std::vector<std::uint32_t>> supports_;
  mutable std::vector<Tri> scratch_;
};

class SatSearch {
 public:
  explicit SatSearch(const Circuit& circuit) : circuit_(circuit) {}

  std::optional<std::vector<Tri>> solve() {
    std::vector<Tri> assignment(circuit_.variable_count(), kUnknown);
    if (descend(assignment)) return assignment;
    return std::nullopt;
  }

 private:
  // Returns false on conflict. Forces a variable whenever it is the last
  // unassigned one in some root and one of its values falsifies that root.
  bool propagate(std::vector<Tri>& assignment) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t r = 0; r < circuit_.root_count(); ++r) {
        const Tri v = circuit_.eval(r, assignment);
        if (v == kFalse) return false;
        if (v == kTrue) continue;
        std::optional<std::uint32_t> open;
        std::size_t open_count = 0;
        for (std::uint32_t var : circuit_.support(r)) {
          if (assignment[var] == kUnknown) {
            open = var;
            ++open_count;
          }
        }
        if (open_count != 1) continue;
        assignment[*open] = kTrue;
        const bool true_ok = circuit_.eval(r, assignment) != kFalse;
        assignment[*open] = kFalse;
        const bool false_ok = circuit_.eval(r, assignment) != kFalse;
        if (!true_ok && !false_ok) return false;
        if (true_ok && false_ok) {
          assignment[*open] = kUnknown;
          continue;
        }
        assignment[*open] = true_ok ? kTrue : kFalse;
        changed = true;
      }
    }
    return true;
  }

  bool descend(std::vector<Tri>& assignment) const {
    if (!propagate(assignment)) return false;
    std::optional<std::uint32_t> branch;
    for (std::size_t r = 0; r < circuit_.root_count() && !branch; ++r) {
      if (circuit_.eval(r, assignment) != kUnknown) continue;
      for (std::uint32_t var : circuit_.support(r)) {
        if (assignment[var] == kUnknown) {
          branch = var;
          break;
        }
      }
    }
    if (!branch) return true;  // every root is true
    for (Tri value : {kTrue, kFalse}) {
      std::vector<Tri> next = assignment;
      next[*branch] = value;
      if (descend(next)) {
        assignment = std::move(next);
        return true;
      }
    }
    return false;
  }

  const Circuit& circuit_;
};

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.connective()) {
    case Connective::variable: out.insert(f.name()); break;
    case Connective::top:
    case Connective::bottom: break;
    case Connective::negation: collect_variables(f.operand(), out); break;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
  }
}

void enumerate_valuations(const Circuit& circuit, std::vector<Tri>& assignment, std::size_t next_var,
                          std::set<std::vector<bool>>& out) {
  // Find an undetermined root; if none, every completion agrees.
  bool open = false;
  for (std::size_t r = 0; r < circuit.root_count(); ++r) {
    if (circuit.eval(r, assignment) == kUnknown) {
      open = true;
      break;
    }
  }
  if (!open) {
    std::vector<bool> values(circuit.root_count());
    for (std::size_t r = 0; r < circuit.root_count(); ++r) values[r] = circuit.eval(r, assignment) == kTrue;
    out.insert(std::move(values));
    return;
  }
  for (Tri value : {kTrue, kFalse}) {
    assignment[next_var] = value;
    enumerate_valuations(circuit, assignment, next_var + 1, out);
  }
  assignment[next_var] = kUnknown;
}

}  // namespace

Formula complement(const Formula& phi) {
  return phi.is_negation() ? phi.operand() : Formula::negation(phi);
}

bool Assignment::value(const std::string& variable) const {
  auto it = values_.find(variable);
  if (it == values_.end())
    throw Error(ErrorCode::invalid_argument, "assignment does not cover variable '" + variable + "'");
  return it->second;
}

bool evaluate(const Formula& phi, const Assignment& v) {
  switch (phi.connective()) {
    case Connective::variable: return v.value(phi.name());
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::negation: return !evaluate(phi.operand(), v);
    case Connective::conjunction: return evaluate(phi.left(), v) && evaluate(phi.right(), v);
    case Connective::disjunction: return evaluate(phi.left(), v) || evaluate(phi.right(), v);
    case Connective::implication: return !evaluate(phi.left(), v) || evaluate(phi.right(), v);
    case Connective::biconditional: return evaluate(phi.left(), v) == evaluate(phi.right(), v);
  }
  return false;
}

std::set<std::string> variables_of(std::span<const Formula> formulas) {
  std::set<std::string> out;
  for (const Formula& f : formulas) collect_variables(f, out);
  return out;
}

std::set<std::string> variables_of(const Formula& phi) {
  std::set<std::string> out;
  collect_variables(phi, out);
  return out;
}

std::optional<Assignment> find_model(std::span<const Formula> formulas) {
  Circuit circuit(formulas);
  auto solution = SatSearch(circuit).solve();
  if (!solution) return std::nullopt;
  Assignment model;
  for (std::size_t i = 0; i < circuit.variable_count(); ++i)
    model.set(circuit.variable(i), (*solution)[i] == kTrue);  // unconstrained vars default to false
  return model;
}

bool is_consistent(std::span<const Formula> formulas) {
  Circuit circuit(formulas);
  return SatSearch(circuit).solve().has_value();
}

bool is_consistent(std::initializer_list<Formula> formulas) {
  return is_consistent(std::span<const Formula>(formulas.begin(), formulas.size()));
}

bool entails(std::span<const Formula> premises, const Formula& phi) {
  std::vector<Formula> set(premises.begin(), premises.end());
  set.push_back(Formula::negation(phi));
  return !is_consistent(set);
}

bool entails(std::initializer_list<Formula> premises, const Formula& phi) {
  return entails(std::span<const Formula>(premises.begin(), premises.size()), phi);
}

bool are_equivalent(const Formula& phi, const Formula& psi) {
  return !is_consistent({Formula::negation(Formula::biconditional(phi, psi))});
}

bool is_tautology(const Formula& phi) { return !is_consistent({Formula::negation(phi)}); }
bool is_contradiction(const Formula& phi) { return !is_consistent({phi}); }

std::vector<Formula> syntactic_variants(const Formula& phi, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "at least one syntactic variant is required");
  std::vector<Formula> out;
  out.reserve(k);
  out.push_back(phi);
  for (std::size_t i = 1; i < k; ++i) out.push_back(Formula::conjunction(out.back(), Formula::top()));
  return out;
}

std::vector<std::size_t> minimal_inconsistent_core(std::span<const Formula> formulas) {
  if (is_consistent(formulas))
    throw Error(ErrorCode::invalid_argument, "cannot extract an inconsistent core from a consistent set");
  std::vector<std::size_t> core(formulas.size());
  for (std::size_t i = 0; i < core.size(); ++i) core[i] = i;
  for (std::size_t pos = 0; pos < core.size();) {
    std::vector<Formula> trial;
    for (std::size_t j = 0; j < core.size(); ++j)
      if (j != pos) trial.push_back(formulas[core[j]]);
    if (!is_consistent(trial)) {
      core.erase(core.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      ++pos;
    }
  }
  return core;
}

std::vector<std::vector<bool>> realizable_valuations(std::span<const Formula> formulas) {
  Circuit circuit(formulas);
  std::vector<Tri> assignment(circuit.variable_count(), kUnknown);
  std::set<std::vector<bool>> found;
  enumerate_valuations(circuit, assignment, 0, found);
  // std::set orders false before true; canonical order is the reverse.
  return {found.rbegin(), found.rend()};
}

}  // namespace agorum
