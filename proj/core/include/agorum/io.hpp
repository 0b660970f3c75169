#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "agorum/agenda.hpp"
#include "agorum/kemeny.hpp"
#include "agorum/qbf.hpp"
#include "agorum/rules.hpp"

namespace agorum {

// Text formats. '#' starts a comment anywhere; blank lines are ignored.
//   agenda:      one Φ⁺ formula per line, optionally prefixed "premise:"
//   profile:     one row of 0/1 characters per agent, column j for φⱼ
//   preferences: one "a > b > c" line per voter
//   qbf:         "forall x1 x2 exists y1 : <formula>"
//   quotas:      one "q_pos q_neg" line per Φ⁺ formula

std::string read_text_file(const std::filesystem::path& path);

Agenda parse_agenda(std::string_view text);
std::string write_agenda(const Agenda& agenda);

// Requires an odd number of agents, at least three.
Profile parse_profile(std::string_view text, const Agenda& agenda);
std::string write_profile(const Profile& profile);

// Candidates are collected from the first line, in that order.
PreferenceProfile parse_preferences(std::string_view text);
std::string write_preferences(const PreferenceProfile& pp);

QbfInstance parse_qbf(std::string_view text);
std::string write_qbf(const QbfInstance& q);

QuotaRule parse_quotas(std::string_view text, const Agenda& agenda, std::size_t n);

}  // namespace agorum
