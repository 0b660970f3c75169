#pragma once

// Reference implementations used to check the engine. Everything here works
// straight from the definitions: truth tables, full subset scans and
// exhaustive permutation search. Nothing calls into the solver in logic.cpp.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "agorum/agenda.hpp"
#include "agorum/formula.hpp"
#include "agorum/kemeny.hpp"
#include "agorum/qbf.hpp"

namespace agorum::oracle {

using Valuation = std::map<std::string, bool>;

bool eval(const Formula& f, const Valuation& v);
void collect_variables(const Formula& f, std::set<std::string>& out);

// Calls fn on every valuation of `vars`; stops when fn returns true.
bool any_valuation(const std::set<std::string>& vars, const std::function<bool(const Valuation&)>& fn);

bool satisfiable(const std::vector<Formula>& fs);
bool equivalent(const Formula& a, const Formula& b);
bool contradiction(const Formula& f);

// Φ in formulas() order, then subsets of it as bitmasks over that order.
std::vector<Formula> members(const Agenda& agenda);
std::vector<Formula> pick(const std::vector<Formula>& all, std::uint64_t mask);

std::vector<JudgmentSet> judgment_sets(const Agenda& agenda);
bool consistent(const JudgmentSet& j, const Agenda& agenda);

// Bitmasks (over members()) of all minimally inconsistent subsets.
std::vector<std::uint64_t> mi_subsets(const Agenda& agenda);

// Definitions 10-13, read literally: scan every subset of Φ.
bool k_median(const Agenda& agenda, std::size_t k);
bool simplified_median(const Agenda& agenda);
bool syntactic_simplified_median(const Agenda& agenda);

std::size_t hamming(const JudgmentSet& a, const JudgmentSet& b);
std::size_t distance_sum(const JudgmentSet& j, const std::vector<JudgmentSet>& profile);
// Members of J(Φ) with least summed distance.
std::vector<JudgmentSet> dbp_winners(const Agenda& agenda, const std::vector<JudgmentSet>& profile);
JudgmentSet majority(const std::vector<JudgmentSet>& profile);

// Kemeny by permutation scan; distance counts ordered pairs.
std::size_t kendall(const std::vector<std::string>& a, const std::vector<std::string>& b);
std::vector<std::vector<std::string>> kemeny_rankings(const PreferenceProfile& pp);

bool qbf_true(const QbfInstance& q);

// Fixed formula corpus over p, q, r and the agendas built from it.
std::vector<Formula> formula_pool();
std::vector<Agenda> agenda_corpus();
// Formulas over ≤ 3 variables, satisfiable and unsatisfiable.
std::vector<Formula> formula_corpus();

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth);
std::vector<JudgmentSet> random_profile(std::mt19937_64& rng, const Agenda& agenda, std::size_t n);

Agenda doctrinal_agenda();
Profile doctrinal_profile();

}  // namespace agorum::oracle
