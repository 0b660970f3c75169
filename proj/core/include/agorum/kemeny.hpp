#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "agorum/agenda.hpp"

namespace agorum {

// Strict linear orders over a common candidate set, best candidate first.
struct PreferenceProfile {
  std::vector<std::string> candidates;
  std::vector<std::vector<std::string>> orders;
};

// Throws invalid_argument unless every order is a permutation of the
// candidates and the candidates are distinct identifiers.
void validate(const PreferenceProfile& pp);

// Number of ordered candidate pairs on which two orders disagree.
std::size_t preference_distance(const std::vector<std::string>& p, const std::vector<std::string>& q);

// Variable p_<a>_<b> stands for a ≻ b.
std::string pair_variable(const std::string& a, const std::string& b);

// Pair variables (a outer, b inner, candidate order), then (m²+1) variants of
// (p_ab & p_bc) -> p_ac for every ordered triple of distinct candidates, then
// (m²+1) variants of p_ab <-> ~p_ba for every unordered pair.
Agenda build_kemeny_agenda(const std::vector<std::string>& candidates);

// Each voter accepts p_ab iff a ≻ b, and accepts every order axiom.
Profile encode_preference_profile(const PreferenceProfile& pp);
Profile encode_preference_profile(const PreferenceProfile& pp, const Agenda& kemeny_agenda);

// min Σᵢ dist(Pᵢ, Q) over linear orders Q with c on top.
std::size_t kemeny_score(const PreferenceProfile& pp, const std::string& c);

// c's Kemeny score is no worse than any other candidate's. The oracle path
// enumerates orders; the other path asks windet_star with L = {p_cd | d ≠ c}.
bool kemeny_winner(const PreferenceProfile& pp, const std::string& c, bool use_oracle);

}  // namespace agorum
