#include "agorum/rules.hpp"

#include <algorithm>

#include "agorum/error.hpp"
#include "agorum/logic.hpp"

namespace agorum {

namespace {

void check_quota(std::size_t q, std::size_t n) {
  if (q > n + 1)
    throw Error(ErrorCode::invalid_argument,
                "quota " + std::to_string(q) + " outside 0.." + std::to_string(n + 1));
}

std::vector<Member> locate_all(const Agenda& agenda, const std::vector<Formula>& l) {
  std::vector<Member> out;
  out.reserve(l.size());
  for (const Formula& f : l) out.push_back(agenda.locate(f));
  return out;
}

bool extends(const JudgmentSet& j, const std::vector<Member>& l) {
  return std::all_of(l.begin(), l.end(), [&](Member m) { return j.contains(m); });
}

// Σᵢ H(J*, Jᵢ) splits into a per-issue cost read off the support
// counts, n − |N_φ| when φ is accepted and |N_φ| when it is rejected.
std::size_t support_cost(const JudgmentSet& j, const Profile& profile) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::size_t a = profile.positive_support(i);
    total += j.value(i) ? profile.n() - a : a;
  }
  return total;
}

}  // namespace

QuotaRule::QuotaRule(std::size_t n, std::size_t m) : n_(n), uniform_(m) { check_quota(m, n); }

QuotaRule::QuotaRule(std::size_t n, std::vector<Quotas> per_issue) : n_(n), per_issue_(std::move(per_issue)) {
  for (const Quotas& q : per_issue_) {
    check_quota(q.positive, n);
    check_quota(q.negative, n);
  }
}

std::size_t QuotaRule::quota(Member m, std::size_t issues) const {
  if (uniform_) return *uniform_;
  if (per_issue_.size() != issues)
    throw Error(ErrorCode::invalid_argument, "quota rule defines " + std::to_string(per_issue_.size()) +
                                                 " issues, agenda has " + std::to_string(issues));
  const Quotas& q = per_issue_.at(m.issue);
  return m.positive ? q.positive : q.negative;
}

QuotaRule majority_rule(std::size_t n) {
  if (n % 2 == 0) throw Error(ErrorCode::invalid_argument, "majority rule needs an odd number of agents");
  return QuotaRule(n, (n + 1) / 2);
}

JudgmentSet apply_quota(const QuotaRule& rule, const Profile& profile) {
  if (rule.n() != profile.n())
    throw Error(ErrorCode::invalid_argument, "quota rule is for " + std::to_string(rule.n()) + " agents, profile has " +
                                                 std::to_string(profile.n()));
  const std::size_t issues = profile.agenda().size();
  JudgmentSet out(issues);
  for (std::size_t i = 0; i < issues; ++i) {
    const bool pos = profile.support_count({i, true}) >= rule.quota({i, true}, issues);
    const bool neg = profile.support_count({i, false}) >= rule.quota({i, false}, issues);
    out.set(i, pos ? (neg ? Verdict::both : Verdict::positive) : (neg ? Verdict::negative : Verdict::neither));
  }
  return out;
}

Rule as_rule(QuotaRule rule) {
  std::string name = rule.uniform_quota() ? "F_" + std::to_string(*rule.uniform_quota()) : "quota";
  return Rule(std::move(name), [rule = std::move(rule)](const Profile& p) { return apply_quota(rule, p); });
}

Rule pbp_rule() { return Rule("pbp", apply_pbp); }

JudgmentSet apply_pbp(const Profile& profile) {
  const Agenda& agenda = profile.agenda();
  if (!agenda.is_variable_closed())
    throw Error(ErrorCode::invalid_agenda, "premise-based procedure needs every variable on the agenda");
  // With every variable on the agenda, the majority literals fix a single
  // model, so Δ ⊨ φ reduces to evaluating φ in it.
  Assignment model;
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    const Formula& f = agenda.positive(i);
    if (f.is_variable()) model.set(f.name(), 2 * profile.positive_support(i) > profile.n());
  }
  JudgmentSet out(agenda.size());
  for (std::size_t i = 0; i < agenda.size(); ++i)
    out.set(i, evaluate(agenda.positive(i), model) ? Verdict::positive : Verdict::negative);
  return out;
}

DbpOutcome apply_dbp(const Profile& profile) {
  DbpOutcome out;
  bool first = true;
  for (const JudgmentSet& j : profile.agenda().judgment_sets()) {
    const std::size_t d = distance_sum(j, profile);
    if (first || d < out.min_distance) {
      out.winners.clear();
      out.min_distance = d;
      first = false;
    }
    if (d == out.min_distance) out.winners.push_back(j);
  }
  return out;
}

Rule dbp_rule() {
  return Rule("dbp", [](const Profile& p) { return apply_dbp(p).winners.front(); });
}

bool windet(const Rule& rule, const Profile& profile, const Formula& phi) {
  const Member m = profile.agenda().locate(phi);
  return rule(profile).contains(m);
}

bool windet_star_k(const Profile& profile, const std::vector<Formula>& l, std::size_t k) {
  const std::vector<Member> members = locate_all(profile.agenda(), l);
  for (const JudgmentSet& j : profile.agenda().judgment_sets()) {
    if (extends(j, members) && support_cost(j, profile) <= k) return true;
  }
  return false;
}

bool windet_star(const Profile& profile, const std::vector<Formula>& l) {
  locate_all(profile.agenda(), l);
  // K^w, the winning distance, is the least K accepted with L empty.
  std::size_t lo = 0;
  std::size_t hi = profile.agenda().size() * profile.n();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (windet_star_k(profile, {}, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return windet_star_k(profile, l, lo);
}

bool windet_star_by_scan(const Profile& profile, const std::vector<Formula>& l) {
  const std::vector<Member> members = locate_all(profile.agenda(), l);
  const DbpOutcome outcome = apply_dbp(profile);
  return std::any_of(outcome.winners.begin(), outcome.winners.end(),
                     [&](const JudgmentSet& j) { return extends(j, members); });
}

JudgmentSet extract_dbp_winner(const Profile& profile) {
  const Agenda& agenda = profile.agenda();
  std::vector<Formula> l;
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    l.push_back(agenda.formula({i, true}));
    if (!windet_star(profile, l)) l.back() = agenda.formula({i, false});
  }
  return judgment_from_formulas(l, agenda);
}

}  // namespace agorum
