#include "agorum/kemeny.hpp"

#include <algorithm>
#include <set>

#include "agorum/error.hpp"
#include "agorum/logic.hpp"
#include "agorum/rules.hpp"

namespace agorum {

namespace {

std::size_t position(const std::vector<std::string>& order, const std::string& c) {
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), c) - order.begin());
}

void check_candidate(const PreferenceProfile& pp, const std::string& c) {
  if (std::find(pp.candidates.begin(), pp.candidates.end(), c) == pp.candidates.end())
    throw Error(ErrorCode::invalid_argument, "unknown candidate '" + c + "'");
}

}  // namespace

void validate(const PreferenceProfile& pp) {
  std::set<std::string> unique(pp.candidates.begin(), pp.candidates.end());
  if (unique.size() != pp.candidates.size()) throw Error(ErrorCode::invalid_argument, "duplicate candidate");
  for (const std::string& c : pp.candidates) {
    if (!is_identifier(c)) throw Error(ErrorCode::invalid_argument, "candidate '" + c + "' is not an identifier");
  }
  for (std::size_t v = 0; v < pp.orders.size(); ++v) {
    std::set<std::string> seen(pp.orders[v].begin(), pp.orders[v].end());
    if (seen != unique || pp.orders[v].size() != pp.candidates.size())
      throw Error(ErrorCode::invalid_argument,
                  "voter " + std::to_string(v + 1) + " does not rank every candidate exactly once");
  }
}

std::size_t preference_distance(const std::vector<std::string>& p, const std::vector<std::string>& q) {
  std::size_t d = 0;
  for (const std::string& a : p) {
    for (const std::string& b : p) {
      if (a == b) continue;
      const bool in_p = position(p, a) < position(p, b);
      const bool in_q = position(q, a) < position(q, b);
      d += in_p != in_q;
    }
  }
  return d;
}

std::string pair_variable(const std::string& a, const std::string& b) { return "p_" + a + "_" + b; }

Agenda build_kemeny_agenda(const std::vector<std::string>& candidates) {
  const std::size_t m = candidates.size();
  if (m < 2) throw Error(ErrorCode::invalid_argument, "Kemeny agenda needs at least two candidates");
  std::set<std::string> names;
  std::vector<Formula> positives;
  for (const std::string& a : candidates) {
    for (const std::string& b : candidates) {
      if (a == b) continue;
      std::string name = pair_variable(a, b);
      if (!names.insert(name).second)
        throw Error(ErrorCode::invalid_argument, "candidate names produce clashing variable " + name);
      positives.push_back(Formula::variable(std::move(name)));
    }
  }
  auto var = [](const std::string& a, const std::string& b) { return Formula::variable(pair_variable(a, b)); };
  const std::size_t copies = m * m + 1;
  for (const std::string& a : candidates) {
    for (const std::string& b : candidates) {
      for (const std::string& c : candidates) {
        if (a == b || b == c || a == c) continue;
        Formula t = Formula::implication(Formula::conjunction(var(a, b), var(b, c)), var(a, c));
        for (Formula& f : syntactic_variants(t, copies)) positives.push_back(std::move(f));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::string& a = candidates[i];
      const std::string& b = candidates[j];
      Formula s = Formula::biconditional(var(a, b), Formula::negation(var(b, a)));
      for (Formula& f : syntactic_variants(s, copies)) positives.push_back(std::move(f));
    }
  }
  return Agenda(std::move(positives));
}

Profile encode_preference_profile(const PreferenceProfile& pp) {
  return encode_preference_profile(pp, build_kemeny_agenda(pp.candidates));
}

Profile encode_preference_profile(const PreferenceProfile& pp, const Agenda& kemeny_agenda) {
  validate(pp);
  std::vector<JudgmentSet> agents;
  for (const auto& order : pp.orders) {
    Assignment v;
    for (const std::string& a : pp.candidates) {
      for (const std::string& b : pp.candidates) {
        if (a != b) v.set(pair_variable(a, b), position(order, a) < position(order, b));
      }
    }
    std::vector<bool> bits;
    for (const Formula& f : kemeny_agenda.positives()) {
      for (const std::string& name : variables_of(f)) {
        if (!v.covers(name))
          throw Error(ErrorCode::invalid_argument, "agenda variable " + name + " does not belong to these candidates");
      }
      bits.push_back(evaluate(f, v));
    }
    agents.push_back(JudgmentSet::from_bits(bits));
  }
  return Profile::from_rational(kemeny_agenda, std::move(agents));
}

std::size_t kemeny_score(const PreferenceProfile& pp, const std::string& c) {
  validate(pp);
  check_candidate(pp, c);
  std::vector<std::string> rest;
  for (const std::string& d : pp.candidates) {
    if (d != c) rest.push_back(d);
  }
  std::sort(rest.begin(), rest.end());
  std::size_t best = static_cast<std::size_t>(-1);
  do {
    std::vector<std::string> q{c};
    q.insert(q.end(), rest.begin(), rest.end());
    std::size_t total = 0;
    for (const auto& order : pp.orders) total += preference_distance(order, q);
    best = std::min(best, total);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

bool kemeny_winner(const PreferenceProfile& pp, const std::string& c, bool use_oracle) {
  validate(pp);
  check_candidate(pp, c);
  if (use_oracle) {
    const std::size_t own = kemeny_score(pp, c);
    return std::all_of(pp.candidates.begin(), pp.candidates.end(),
                       [&](const std::string& d) { return own <= kemeny_score(pp, d); });
  }
  const Profile profile = encode_preference_profile(pp);
  std::vector<Formula> l;
  for (const std::string& d : pp.candidates) {
    if (d != c) l.push_back(Formula::variable(pair_variable(c, d)));
  }
  return windet_star(profile, l);
}

}  // namespace agorum
