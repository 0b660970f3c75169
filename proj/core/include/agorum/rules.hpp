#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agorum/agenda.hpp"

namespace agorum {

// φ ∈ F(J) ⇔ |N_φ| ≥ q_φ, with separate quotas for φ_issue and ∼φ_issue.
class QuotaRule {
 public:
  struct Quotas {
    std::size_t positive;
    std::size_t negative;
  };

  QuotaRule(std::size_t n, std::size_t m);  // uniform
  QuotaRule(std::size_t n, std::vector<Quotas> per_issue);

  std::size_t n() const noexcept { return n_; }
  std::optional<std::size_t> uniform_quota() const noexcept { return uniform_; }
  std::size_t quota(Member m, std::size_t issues) const;

 private:
  std::size_t n_;
  std::optional<std::size_t> uniform_;
  std::vector<Quotas> per_issue_;
};

QuotaRule majority_rule(std::size_t n);
JudgmentSet apply_quota(const QuotaRule& rule, const Profile& profile);

// A resolute aggregation procedure.
class Rule {
 public:
  using Function = std::function<JudgmentSet(const Profile&)>;

  Rule(std::string name, Function fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }
  JudgmentSet operator()(const Profile& profile) const { return fn_(profile); }

 private:
  std::string name_;
  Function fn_;
};

Rule as_rule(QuotaRule rule);
Rule pbp_rule();

// Majority on the literal premises, then every other member accepted iff the
// accepted literals entail it. Requires a variable-closed agenda.
JudgmentSet apply_pbp(const Profile& profile);

struct DbpOutcome {
  std::vector<JudgmentSet> winners;  // canonical order
  std::size_t min_distance = 0;
};

DbpOutcome apply_dbp(const Profile& profile);

enum class TieBreak { none, lex };
// Resolute DBP: the first winner in canonical order.
Rule dbp_rule();

bool windet(const Rule& rule, const Profile& profile, const Formula& phi);

// Some J* ∈ J(Φ) with L ⊆ J* lies within total distance K of the profile.
bool windet_star_k(const Profile& profile, const std::vector<Formula>& l, std::size_t k);
// Some DBP winner contains L; binary search on K followed by one query.
bool windet_star(const Profile& profile, const std::vector<Formula>& l);
// Same question answered by scanning apply_dbp's winners.
bool windet_star_by_scan(const Profile& profile, const std::vector<Formula>& l);

// Builds a winner issue by issue, keeping φᵢ whenever a winner extends the
// choices so far, ∼φᵢ otherwise.
JudgmentSet extract_dbp_winner(const Profile& profile);

}  // namespace agorum
