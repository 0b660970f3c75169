#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "agorum/formula.hpp"

namespace agorum {

// ∼φ: strips one negation from a negated formula, otherwise negates.
Formula complement(const Formula& phi);

// Truth values for a declared set of variables.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const std::string, bool>> values) : values_(values) {}

  void set(const std::string& variable, bool value) { values_[variable] = value; }
  bool covers(const std::string& variable) const { return values_.contains(variable); }
  // Throws invalid_argument when the variable is not covered.
  bool value(const std::string& variable) const;
  const std::map<std::string, bool>& values() const noexcept { return values_; }

 private:
  std::map<std::string, bool> values_;
};

bool evaluate(const Formula& phi, const Assignment& v);

std::set<std::string> variables_of(std::span<const Formula> formulas);
std::set<std::string> variables_of(const Formula& phi);

// Exact satisfiability of a finite formula set: backtracking over variables
// with three-valued evaluation and single-variable forcing.
bool is_consistent(std::span<const Formula> formulas);
bool is_consistent(std::initializer_list<Formula> formulas);

// A satisfying assignment over variables_of(formulas), if any.
std::optional<Assignment> find_model(std::span<const Formula> formulas);

bool entails(std::span<const Formula> premises, const Formula& phi);
bool entails(std::initializer_list<Formula> premises, const Formula& phi);
bool are_equivalent(const Formula& phi, const Formula& psi);
bool is_tautology(const Formula& phi);
bool is_contradiction(const Formula& phi);

// [φ, φ & T, φ & T & T, ...] with k entries.
std::vector<Formula> syntactic_variants(const Formula& phi, std::size_t k);

// Positions (into `formulas`) of one minimally inconsistent subset, found by
// deletion. Requires the whole set to be inconsistent.
std::vector<std::size_t> minimal_inconsistent_core(std::span<const Formula> formulas);

// Every distinct vector of truth values the formulas take under some
// assignment, sorted lexicographically with true before false.
std::vector<std::vector<bool>> realizable_valuations(std::span<const Formula> formulas);

}  // namespace agorum
