#include "agorum/axioms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <unordered_map>

#include "agorum/error.hpp"

namespace agorum {

namespace {

// Member index in Agenda::formulas() order.
Member member_at(std::size_t idx) { return {idx / 2, idx % 2 == 0}; }

std::uint32_t coalition(const Profile& p, Member m) {
  std::uint32_t mask = 0;
  for (std::size_t a = 0; a < p.n(); ++a) {
    if (p.agent(a).contains(m)) mask |= std::uint32_t{1} << a;
  }
  return mask;
}

std::string render_coalition(std::uint32_t mask, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t a = 0; a < n; ++a) {
    if (mask >> a & 1U) {
      if (!first) out += ",";
      out += std::to_string(a + 1);
      first = false;
    }
  }
  return out + "}";
}

std::string render_bits(const std::vector<bool>& h) {
  std::string out;
  for (bool b : h) out += b ? '1' : '0';
  return out;
}

JudgmentSet run(const Rule& rule, const Profile& p) {
  JudgmentSet out = rule(p);
  if (out.size() != p.agenda().size())
    throw Error(ErrorCode::invalid_argument, "rule '" + rule.name() + "' returned a set of the wrong size");
  return out;
}

void check_n(std::size_t n) {
  if (n == 0 || n > 20) throw Error(ErrorCode::invalid_argument, "number of agents must lie in 1..20");
}

void check_table(const std::vector<bool>& h, std::size_t n, bool symmetric, bool unanimous, const std::string& what) {
  if (h.size() != n + 1)
    throw Error(ErrorCode::invalid_argument,
                what + " needs " + std::to_string(n + 1) + " values, got " + std::to_string(h.size()));
  if (symmetric) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (h[i] == h[n - i])
        throw Error(ErrorCode::invalid_argument,
                    what + " violates h(i) = 1 - h(n-i) at i = " + std::to_string(i), render_bits(h));
    }
  }
  if (unanimous && (!h[n] || h[0]))
    throw Error(ErrorCode::invalid_argument, what + " violates unanimity: need h(n) = 1 and h(0) = 0", render_bits(h));
}

JudgmentSet apply_table(const Profile& p, const std::vector<bool>& h) {
  JudgmentSet out(p.agenda().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool pos = h[p.support_count({i, true})];
    const bool neg = h[p.support_count({i, false})];
    out.set(i, pos ? (neg ? Verdict::both : Verdict::positive) : (neg ? Verdict::negative : Verdict::neither));
  }
  return out;
}

void require_agents(const Profile& p, std::size_t n) {
  if (p.n() != n)
    throw Error(ErrorCode::invalid_argument,
                "rule is for " + std::to_string(n) + " agents, profile has " + std::to_string(p.n()));
}

std::string uniform_name(const std::vector<bool>& h, std::size_t n) {
  if (h == majority_h(n)) return "majority";
  if (h == parity_h(n)) return "parity";
  return "h:" + render_bits(h);
}

// All symmetric tables: h(0..(n-1)/2) chosen from `free_bits`, mirrored above.
std::vector<bool> symmetric_table(std::size_t n, std::uint64_t code, bool unanimity) {
  std::vector<bool> h(n + 1);
  const std::size_t half = (n - 1) / 2;
  if (unanimity) {
    h[0] = false;
    for (std::size_t i = 1; i <= half; ++i) h[i] = code >> (half - i) & 1U;
  } else {
    for (std::size_t i = 0; i <= half; ++i) h[i] = code >> (half - i) & 1U;
  }
  for (std::size_t i = 0; i <= half; ++i) h[n - i] = !h[i];
  return h;
}

std::size_t symmetric_free_bits(std::size_t n, bool unanimity) { return unanimity ? (n - 1) / 2 : (n + 1) / 2; }

std::uint64_t checked_rule_count(std::size_t bits, const Budget& budget) {
  const std::uint64_t count = saturating_power(2, bits);
  Budget::require(count, budget.rules, "rules in class");
  return count;
}

}  // namespace

void for_each_profile(const Agenda& agenda, std::size_t n, const Budget& budget,
                      const std::function<bool(const Profile&)>& visit) {
  check_n(n);
  const std::vector<JudgmentSet>& space = agenda.judgment_sets();
  Budget::require(saturating_power(space.size(), n), budget.profiles, "profiles in J(Phi)^n");
  std::vector<std::size_t> index(n, 0);
  while (true) {
    std::vector<JudgmentSet> agents;
    agents.reserve(n);
    for (std::size_t i : index) agents.push_back(space[i]);
    if (!visit(Profile::from_rational(agenda, std::move(agents)))) return;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++index[pos] < space.size()) break;
      index[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::U: return "U";
    case Axiom::A: return "A";
    case Axiom::N: return "N";
    case Axiom::I: return "I";
    case Axiom::S: return "S";
    case Axiom::M_I: return "M_I";
    case Axiom::M_N: return "M_N";
    case Axiom::WR: return "WR";
    case Axiom::Complete: return "complete";
    case Axiom::ComplementFree: return "complement-free";
    case Axiom::Consistent: return "consistent";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::U, Axiom::A, Axiom::N, Axiom::I, Axiom::S, Axiom::M_I, Axiom::M_N, Axiom::WR,
                  Axiom::Complete, Axiom::ComplementFree, Axiom::Consistent}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

AxiomCheck check_axiom(const Rule& rule, const Agenda& agenda, std::size_t n, Axiom axiom, const Budget& budget) {
  const std::vector<Formula> formulas = agenda.formulas();
  const std::size_t members = formulas.size();
  AxiomCheck result;
  auto fail = [&](std::vector<Profile> profiles, std::vector<Formula> fs, std::string detail) {
    result.holds = false;
    result.witness = AxiomViolation{std::move(profiles), std::move(fs), std::move(detail)};
    return false;
  };

  // Tables for the two-profile axioms: first profile seen per coalition.
  struct Seen {
    Profile profile;
    std::size_t member;
    bool accepted;
  };
  std::vector<std::map<std::uint32_t, Seen>> per_member(members);
  std::map<std::uint32_t, Seen> across;
  std::vector<std::map<std::uint32_t, Profile>> accepted_at(members), rejected_at(members);

  for_each_profile(agenda, n, budget, [&](const Profile& p) {
    const JudgmentSet out = run(rule, p);
    switch (axiom) {
      case Axiom::WR:
      case Axiom::Complete:
      case Axiom::ComplementFree: {
        const bool complete_ok = axiom == Axiom::ComplementFree || out.is_complete();
        const bool free_ok = axiom == Axiom::Complete || out.is_complement_free();
        if (!complete_ok || !free_ok)
          return fail({p}, {}, "outcome " + describe(out, agenda) + " is " +
                                   (complete_ok ? "not complement-free" : "incomplete"));
        return true;
      }
      case Axiom::Consistent:
        if (!validate_judgment_set(out, agenda).consistent)
          return fail({p}, formulas_of(out, agenda), "outcome " + describe(out, agenda) + " is inconsistent");
        return true;
      case Axiom::U:
        for (std::size_t idx = 0; idx < members; ++idx) {
          const Member m = member_at(idx);
          if (p.support_count(m) == p.n() && !out.contains(m))
            return fail({p}, {formulas[idx]}, "every agent accepts " + to_string(formulas[idx]) + " but the outcome does not");
        }
        return true;
      case Axiom::A:
        for (std::size_t a = 0; a + 1 < p.n(); ++a) {
          if (p.agent(a) == p.agent(a + 1)) continue;
          std::vector<JudgmentSet> swapped = p.agents();
          std::swap(swapped[a], swapped[a + 1]);
          Profile q = Profile::from_rational(agenda, std::move(swapped));
          if (run(rule, q) != out)
            return fail({p, q}, {}, "swapping agents " + std::to_string(a + 1) + " and " + std::to_string(a + 2) +
                                        " changes the outcome");
        }
        return true;
      case Axiom::N:
      case Axiom::M_N:
        for (std::size_t x = 0; x < members; ++x) {
          const std::uint32_t cx = coalition(p, member_at(x));
          for (std::size_t y = 0; y < members; ++y) {
            if (x == y) continue;
            const std::uint32_t cy = coalition(p, member_at(y));
            const bool in_x = out.contains(member_at(x));
            const bool in_y = out.contains(member_at(y));
            if (axiom == Axiom::N && cx == cy && in_x != in_y)
              return fail({p}, {formulas[x], formulas[y]},
                          "same supporters " + render_coalition(cx, n) + " but only one is accepted");
            if (axiom == Axiom::M_N && (cx & cy) == cx && cx != cy && in_x && !in_y)
              return fail({p}, {formulas[x], formulas[y]},
                          "supporters grow from " + render_coalition(cx, n) + " to " + render_coalition(cy, n) +
                              " but acceptance is lost");
          }
        }
        return true;
      case Axiom::I:
        for (std::size_t x = 0; x < members; ++x) {
          const std::uint32_t c = coalition(p, member_at(x));
          const bool in = out.contains(member_at(x));
          auto [it, fresh] = per_member[x].try_emplace(c, Seen{p, x, in});
          if (!fresh && it->second.accepted != in)
            return fail({it->second.profile, p}, {formulas[x]},
                        "supporters " + render_coalition(c, n) + " in both profiles but the verdict differs");
        }
        return true;
      case Axiom::S:
        for (std::size_t x = 0; x < members; ++x) {
          const std::uint32_t c = coalition(p, member_at(x));
          const bool in = out.contains(member_at(x));
          auto [it, fresh] = across.try_emplace(c, Seen{p, x, in});
          if (!fresh && it->second.accepted != in)
            return fail({it->second.profile, p}, {formulas[it->second.member], formulas[x]},
                        "supporters " + render_coalition(c, n) + " for both formulas but the verdict differs");
        }
        return true;
      case Axiom::M_I:
        for (std::size_t x = 0; x < members; ++x) {
          const std::uint32_t c = coalition(p, member_at(x));
          auto& table = out.contains(member_at(x)) ? accepted_at[x] : rejected_at[x];
          table.try_emplace(c, p);
        }
        return true;
    }
    return true;
  });

  if (axiom == Axiom::M_I && result.holds) {
    for (std::size_t x = 0; x < members && result.holds; ++x) {
      for (const auto& [c, p] : accepted_at[x]) {
        bool found = false;
        for (const auto& [d, q] : rejected_at[x]) {
          if ((c & d) == c && c != d) {
            fail({p, q}, {formulas[x]},
                 "supporters grow from " + render_coalition(c, n) + " to " + render_coalition(d, n) +
                     " but acceptance is lost");
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }
  return result;
}

std::vector<bool> majority_h(std::size_t n) {
  std::vector<bool> h(n + 1);
  for (std::size_t i = 0; i <= n; ++i) h[i] = 2 * i > n;
  return h;
}

std::vector<std::vector<bool>> symmetric_tables(std::size_t n, bool unanimity) {
  check_n(n);
  if (n % 2 == 0) return {};
  std::vector<std::vector<bool>> out;
  const std::size_t bits = symmetric_free_bits(n, unanimity);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code)
    out.push_back(symmetric_table(n, code, unanimity));
  return out;
}

std::vector<bool> parity_h(std::size_t n) {
  std::vector<bool> h(n + 1);
  for (std::size_t i = 0; i <= n; ++i) h[i] = i % 2 == 1;
  return h;
}

Rule make_rule_from_h(const CharacteristicH& h, std::size_t n, bool unanimous) {
  check_n(n);
  return std::visit(
      [&](const auto& family) -> Rule {
        using T = std::decay_t<decltype(family)>;
        if constexpr (std::is_same_v<T, UniformH>) {
          check_table(family.h, n, true, unanimous, "h");
          if (n % 2 == 0) throw Error(ErrorCode::invalid_argument, "even number of agents");
          return Rule(uniform_name(family.h, n), [table = family.h, n](const Profile& p) {
            require_agents(p, n);
            return apply_table(p, table);
          });
        } else if constexpr (std::is_same_v<T, PerFormulaH>) {
          if (n % 2 == 0) throw Error(ErrorCode::invalid_argument, "even number of agents");
          std::string name = "h_phi:";
          for (std::size_t i = 0; i < family.h.size(); ++i) {
            check_table(family.h[i], n, false, unanimous, "h for issue " + std::to_string(i + 1));
            name += (i ? "/" : "") + render_bits(family.h[i]);
          }
          return Rule(name, [tables = family.h, n](const Profile& p) {
            require_agents(p, n);
            if (tables.size() != p.agenda().size())
              throw Error(ErrorCode::invalid_argument, "h_phi family does not match the agenda size");
            JudgmentSet out(p.agenda().size());
            for (std::size_t i = 0; i < out.size(); ++i)
              out.set(i, tables[i][p.positive_support(i)] ? Verdict::positive : Verdict::negative);
            return out;
          });
        } else {
          check_table(family.fallback, n, true, unanimous, "fallback h");
          for (const auto& [key, table] : family.h) {
            if (!std::is_sorted(key.begin(), key.end()) || key.size() != n)
              throw Error(ErrorCode::invalid_argument, "profile keys must be sorted lists of n judgment sets");
            check_table(table, n, true, unanimous, "h_J");
          }
          if (n % 2 == 0) throw Error(ErrorCode::invalid_argument, "even number of agents");
          return Rule("h_J[" + std::to_string(family.h.size()) + "]", [family, n](const Profile& p) {
            require_agents(p, n);
            std::vector<JudgmentSet> key = p.agents();
            std::sort(key.begin(), key.end());
            auto it = family.h.find(key);
            return apply_table(p, it == family.h.end() ? family.fallback : it->second);
          });
        }
      },
      h);
}

std::string to_string(const AxiomClass& cls) {
  switch (cls.kind) {
    case RuleClass::majority: return "majority";
    case RuleClass::wr_a_u_s: return "wraus";
    case RuleClass::wr_a_u_n: return "wraun";
    case RuleClass::wr_a_u_i: return "wraui";
    case RuleClass::quota_range: return "quota-range:" + std::to_string(cls.k);
  }
  return "?";
}

std::optional<AxiomClass> parse_axiom_class(std::string_view text) {
  if (text == "majority") return AxiomClass{RuleClass::majority};
  if (text == "wraus") return AxiomClass{RuleClass::wr_a_u_s};
  if (text == "wraun") return AxiomClass{RuleClass::wr_a_u_n};
  if (text == "wraui") return AxiomClass{RuleClass::wr_a_u_i};
  constexpr std::string_view prefix = "quota-range:";
  if (text.starts_with(prefix)) {
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return std::nullopt;
    const std::size_t k = std::stoul(digits);
    if (k < 2) return std::nullopt;
    return AxiomClass{RuleClass::quota_range, k};
  }
  return std::nullopt;
}

std::vector<Axiom> class_axioms(const AxiomClass& cls, bool unanimity) {
  std::vector<Axiom> out;
  switch (cls.kind) {
    case RuleClass::majority:
    case RuleClass::wr_a_u_s: out = {Axiom::WR, Axiom::A, Axiom::U, Axiom::S}; break;
    case RuleClass::wr_a_u_n: out = {Axiom::WR, Axiom::A, Axiom::U, Axiom::N}; break;
    case RuleClass::wr_a_u_i: out = {Axiom::WR, Axiom::A, Axiom::U, Axiom::I}; break;
    case RuleClass::quota_range: out = {Axiom::A, Axiom::U, Axiom::S, Axiom::M_I}; break;
  }
  if (!unanimity && cls.kind != RuleClass::majority && cls.kind != RuleClass::quota_range)
    out.erase(std::remove(out.begin(), out.end(), Axiom::U), out.end());
  return out;
}

std::pair<std::size_t, std::size_t> quota_range(std::size_t n, std::size_t k) {
  if (k < 2) throw Error(ErrorCode::invalid_argument, "quota range needs k >= 2");
  // m > n - n/k  ⟺  m·k > n·(k-1)
  return {n * (k - 1) / k + 1, n};
}

std::vector<Rule> enumerate_class_rules(const AxiomClass& cls, const Agenda& agenda, std::size_t n, bool unanimity,
                                        const Budget& budget) {
  check_n(n);
  if (n % 2 == 0) throw Error(ErrorCode::invalid_argument, "even number of agents");
  std::vector<Rule> out;
  switch (cls.kind) {
    case RuleClass::majority:
      out.push_back(make_rule_from_h(UniformH{majority_h(n)}, n));
      break;
    case RuleClass::wr_a_u_s: {
      checked_rule_count(symmetric_free_bits(n, unanimity), budget);
      for (auto& h : symmetric_tables(n, unanimity)) out.push_back(make_rule_from_h(UniformH{std::move(h)}, n, unanimity));
      break;
    }
    case RuleClass::wr_a_u_i: {
      const std::size_t per_issue = unanimity ? n - 1 : n + 1;
      const std::size_t issues = agenda.size();
      const std::uint64_t count = checked_rule_count(per_issue * issues, budget);
      for (std::uint64_t code = 0; code < count; ++code) {
        PerFormulaH family;
        std::size_t bit = per_issue * issues;
        for (std::size_t i = 0; i < issues; ++i) {
          std::vector<bool> h(n + 1);
          if (unanimity) {
            h[0] = false;
            h[n] = true;
            for (std::size_t c = 1; c < n; ++c) h[c] = code >> --bit & 1U;
          } else {
            for (std::size_t c = 0; c <= n; ++c) h[c] = code >> --bit & 1U;
          }
          family.h.push_back(std::move(h));
        }
        out.push_back(make_rule_from_h(family, n, unanimity));
      }
      break;
    }
    case RuleClass::wr_a_u_n: {
      // Orbits of J(Φ)^n under agent permutations: sorted index tuples.
      const std::vector<JudgmentSet>& space = agenda.judgment_sets();
      std::vector<std::vector<JudgmentSet>> orbits;
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<JudgmentSet> key;
        for (std::size_t i : idx) key.push_back(space[i]);
        orbits.push_back(std::move(key));
        if (orbits.size() * symmetric_free_bits(n, unanimity) > 63)
          throw Error(ErrorCode::budget_exceeded, "rules in class exceed 2^63");
        std::size_t pos = n;
        while (pos > 0 && idx[pos - 1] + 1 == space.size()) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < n; ++j) idx[j] = idx[pos - 1];
      }
      const std::size_t per_orbit = symmetric_free_bits(n, unanimity);
      const std::uint64_t count = checked_rule_count(per_orbit * orbits.size(), budget);
      for (std::uint64_t code = 0; code < count; ++code) {
        PerProfileH family;
        family.fallback = majority_h(n);
        for (std::size_t o = 0; o < orbits.size(); ++o) {
          const std::uint64_t local = code >> (per_orbit * (orbits.size() - 1 - o)) & ((std::uint64_t{1} << per_orbit) - 1);
          family.h.emplace(orbits[o], symmetric_table(n, local, unanimity));
        }
        out.push_back(make_rule_from_h(family, n, unanimity));
      }
      break;
    }
    case RuleClass::quota_range: {
      const auto [lo, hi] = quota_range(n, cls.k);
      for (std::size_t m = lo; m <= hi; ++m) out.push_back(as_rule(QuotaRule(n, m)));
      break;
    }
  }
  return out;
}

WinningCoalitionFamily extract_winning_coalitions(const Rule& rule, const Agenda& agenda, std::size_t n,
                                                  const Budget& budget) {
  const std::vector<Formula> formulas = agenda.formulas();
  std::vector<std::map<std::uint32_t, std::pair<bool, Profile>>> seen(formulas.size());
  for_each_profile(agenda, n, budget, [&](const Profile& p) {
    const JudgmentSet out = run(rule, p);
    for (std::size_t x = 0; x < formulas.size(); ++x) {
      const std::uint32_t c = coalition(p, member_at(x));
      const bool in = out.contains(member_at(x));
      auto [it, fresh] = seen[x].try_emplace(c, in, p);
      if (!fresh && it->second.first != in)
        throw Error(ErrorCode::not_independent,
                    "rule '" + rule.name() + "' is not independent on " + to_string(formulas[x]),
                    to_string(it->second.second) + " vs " + to_string(p));
    }
    return true;
  });
  WinningCoalitionFamily w;
  w.n = n;
  for (const auto& table : seen) {
    std::vector<std::uint32_t> winning, realized;
    for (const auto& [c, entry] : table) {
      realized.push_back(c);
      if (entry.first) winning.push_back(c);
    }
    w.winning.push_back(std::move(winning));
    w.realized.push_back(std::move(realized));
  }
  return w;
}

namespace {

bool wins(const WinningCoalitionFamily& w, std::size_t x, std::uint32_t c) {
  return std::binary_search(w.winning[x].begin(), w.winning[x].end(), c);
}

}  // namespace

bool grand_coalition_wins(const WinningCoalitionFamily& w) {
  const std::uint32_t grand = w.n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << w.n) - 1;
  for (std::size_t x = 0; x < w.realized.size(); ++x) {
    if (std::binary_search(w.realized[x].begin(), w.realized[x].end(), grand) && !wins(w, x, grand)) return false;
  }
  return true;
}

bool identical_across_formulas(const WinningCoalitionFamily& w) {
  std::map<std::uint32_t, bool> verdict;
  for (std::size_t x = 0; x < w.realized.size(); ++x) {
    for (std::uint32_t c : w.realized[x]) {
      auto [it, fresh] = verdict.try_emplace(c, wins(w, x, c));
      if (!fresh && it->second != wins(w, x, c)) return false;
    }
  }
  return true;
}

bool closed_under_cardinality(const WinningCoalitionFamily& w) {
  for (std::size_t x = 0; x < w.realized.size(); ++x) {
    std::map<int, bool> by_size;
    for (std::uint32_t c : w.realized[x]) {
      auto [it, fresh] = by_size.try_emplace(std::popcount(c), wins(w, x, c));
      if (!fresh && it->second != wins(w, x, c)) return false;
    }
  }
  return true;
}

}  // namespace agorum
