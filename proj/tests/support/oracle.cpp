#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace agorum::oracle {

bool eval(const Formula& f, const Valuation& v) {
  switch (f.connective()) {
    case Connective::variable: return v.at(f.name());
    case Connective::top: return true;
    case Connective::bottom: return false;
    case Connective::negation: return !eval(f.operand(), v);
    case Connective::conjunction: return eval(f.left(), v) && eval(f.right(), v);
    case Connective::disjunction: return eval(f.left(), v) || eval(f.right(), v);
    case Connective::implication: return !eval(f.left(), v) || eval(f.right(), v);
    case Connective::biconditional: return eval(f.left(), v) == eval(f.right(), v);
  }
  throw std::logic_error("bad connective");
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.is_variable()) {
    out.insert(f.name());
  } else if (f.is_negation()) {
    collect_variables(f.operand(), out);
  } else if (f.is_binary()) {
    collect_variables(f.left(), out);
    collect_variables(f.right(), out);
  }
}

bool any_valuation(const std::set<std::string>& vars, const std::function<bool(const Valuation&)>& fn) {
  const std::vector<std::string> names(vars.begin(), vars.end());
  Valuation v;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = (bits >> i) & 1;
    if (fn(v)) return true;
  }
  return false;
}

bool satisfiable(const std::vector<Formula>& fs) {
  std::set<std::string> vars;
  for (const Formula& f : fs) collect_variables(f, vars);
  return any_valuation(vars, [&](const Valuation& v) {
    return std::all_of(fs.begin(), fs.end(), [&](const Formula& f) { return eval(f, v); });
  });
}

bool equivalent(const Formula& a, const Formula& b) {
  std::set<std::string> vars;
  collect_variables(a, vars);
  collect_variables(b, vars);
  return !any_valuation(vars, [&](const Valuation& v) { return eval(a, v) != eval(b, v); });
}

bool contradiction(const Formula& f) { return !satisfiable({f}); }

std::vector<Formula> members(const Agenda& agenda) {
  std::vector<Formula> out;
  for (const Formula& f : agenda.positives()) {
    out.push_back(f);
    out.push_back(Formula::negation(f));
  }
  return out;
}

std::vector<Formula> pick(const std::vector<Formula>& all, std::uint64_t mask) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if ((mask >> i) & 1) out.push_back(all[i]);
  return out;
}

std::vector<JudgmentSet> judgment_sets(const Agenda& agenda) {
  const std::size_t m = agenda.size();
  std::vector<JudgmentSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::vector<bool> b(m);
    std::vector<Formula> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      b[i] = (bits >> i) & 1;
      chosen.push_back(b[i] ? agenda.positive(i) : Formula::negation(agenda.positive(i)));
    }
    if (satisfiable(chosen)) out.push_back(JudgmentSet::from_bits(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool consistent(const JudgmentSet& j, const Agenda& agenda) {
  std::vector<Formula> chosen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Verdict v = j[i];
    if (v == Verdict::positive || v == Verdict::both) chosen.push_back(agenda.positive(i));
    if (v == Verdict::negative || v == Verdict::both) chosen.push_back(Formula::negation(agenda.positive(i)));
  }
  return satisfiable(chosen);
}

namespace {

std::vector<bool> inconsistency_table(const std::vector<Formula>& all) {
  std::vector<bool> bad(std::size_t{1} << all.size());
  for (std::uint64_t mask = 0; mask < bad.size(); ++mask) bad[mask] = !satisfiable(pick(all, mask));
  return bad;
}

bool has_pair(const std::vector<Formula>& all, std::uint64_t mask,
              const std::function<bool(const Formula&, const Formula&)>& rel) {
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      if (i != j && ((mask >> i) & 1) && ((mask >> j) & 1) && rel(all[i], all[j])) return true;
  return false;
}

bool every_nontrivial(const Agenda& agenda, const std::function<bool(const Formula&, const Formula&)>& rel) {
  const std::vector<Formula> all = members(agenda);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
    const std::vector<Formula> y = pick(all, mask);
    if (satisfiable(y)) continue;
    if (std::any_of(y.begin(), y.end(), contradiction)) continue;
    if (!has_pair(all, mask, rel)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> mi_subsets(const Agenda& agenda) {
  const std::vector<Formula> all = members(agenda);
  const std::vector<bool> bad = inconsistency_table(all);
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < bad.size(); ++mask) {
    if (!bad[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < all.size() && minimal; ++i)
      if (((mask >> i) & 1) && bad[mask & ~(std::uint64_t{1} << i)]) minimal = false;
    if (minimal) out.push_back(mask);
  }
  return out;
}

bool k_median(const Agenda& agenda, std::size_t k) {
  const std::vector<Formula> all = members(agenda);
  const std::vector<bool> bad = inconsistency_table(all);
  for (std::uint64_t y = 1; y < bad.size(); ++y) {
    if (!bad[y]) continue;
    bool found = false;
    // every subset z of y
    for (std::uint64_t z = y; !found; z = (z - 1) & y) {
      if (bad[z] && static_cast<std::size_t>(std::popcount(z)) <= k) found = true;
      if (z == 0) break;
    }
    if (!found) return false;
  }
  return true;
}

bool simplified_median(const Agenda& agenda) {
  return every_nontrivial(agenda, [](const Formula& a, const Formula& b) {
    return equivalent(a, Formula::negation(b));
  });
}

bool syntactic_simplified_median(const Agenda& agenda) {
  return every_nontrivial(agenda, [](const Formula& a, const Formula& b) { return b == Formula::negation(a); });
}

std::size_t hamming(const JudgmentSet& a, const JudgmentSet& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t distance_sum(const JudgmentSet& j, const std::vector<JudgmentSet>& profile) {
  std::size_t d = 0;
  for (const JudgmentSet& a : profile) d += oracle::hamming(j, a);
  return d;
}

std::vector<JudgmentSet> dbp_winners(const Agenda& agenda, const std::vector<JudgmentSet>& profile) {
  std::vector<JudgmentSet> best;
  std::size_t least = SIZE_MAX;
  for (const JudgmentSet& j : judgment_sets(agenda)) {
    const std::size_t d = distance_sum(j, profile);
    if (d < least) {
      least = d;
      best.clear();
    }
    if (d == least) best.push_back(j);
  }
  return best;
}

JudgmentSet majority(const std::vector<JudgmentSet>& profile) {
  const std::size_t m = profile.front().size();
  std::vector<bool> bits(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t yes = 0;
    for (const JudgmentSet& a : profile) yes += a[i] == Verdict::positive;
    bits[i] = 2 * yes > profile.size();
  }
  return JudgmentSet::from_bits(bits);
}

std::size_t kendall(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  auto rank = [](const std::vector<std::string>& order) {
    std::map<std::string, std::size_t> r;
    for (std::size_t i = 0; i < order.size(); ++i) r[order[i]] = i;
    return r;
  };
  const auto ra = rank(a), rb = rank(b);
  std::size_t d = 0;
  for (const auto& [x, ix] : ra)
    for (const auto& [y, iy] : ra)
      if (x != y && (ix < iy) != (rb.at(x) < rb.at(y))) ++d;
  return d;
}

std::vector<std::vector<std::string>> kemeny_rankings(const PreferenceProfile& pp) {
  std::vector<std::string> order = pp.candidates;
  std::sort(order.begin(), order.end());
  std::vector<std::vector<std::string>> best;
  std::size_t least = SIZE_MAX;
  do {
    std::size_t d = 0;
    for (const auto& voter : pp.orders) d += kendall(order, voter);
    if (d < least) {
      least = d;
      best.clear();
    }
    if (d == least) best.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool qbf_true(const QbfInstance& q) {
  std::set<std::string> xs(q.universal.begin(), q.universal.end());
  std::set<std::string> ys(q.existential.begin(), q.existential.end());
  return !any_valuation(xs, [&](const Valuation& vx) {
    const bool witnessed = any_valuation(ys, [&](const Valuation& vy) {
      Valuation v = vx;
      v.insert(vy.begin(), vy.end());
      return eval(q.matrix, v);
    });
    return !witnessed;
  });
}

std::vector<Formula> formula_pool() {
  std::vector<Formula> out;
  for (const char* text : {"p", "q", "r", "p & q", "p | q", "p -> q", "p <-> q", "q & r", "p & q & r",
                           "p | q | r", "(p | q) & r", "p & ~q", "p | ~p", "p & ~p"})
    out.push_back(parse_formula(text));
  return out;
}

std::vector<Agenda> agenda_corpus() {
  const std::vector<Formula> pool = formula_pool();
  std::vector<Agenda> out;
  const std::size_t s = pool.size();
  for (std::size_t a = 0; a < s; ++a) {
    out.emplace_back(std::vector<Formula>{pool[a]});
    for (std::size_t b = a + 1; b < s; ++b) {
      out.emplace_back(std::vector<Formula>{pool[a], pool[b]});
      for (std::size_t c = b + 1; c < s; ++c) out.emplace_back(std::vector<Formula>{pool[a], pool[b], pool[c]});
    }
  }
  return out;
}

std::vector<Formula> formula_corpus() {
  std::vector<Formula> out;
  for (const char* text :
       {"p", "p & ~p", "p | q", "p & q & ~p", "(p -> q) & p & ~q", "p <-> ~p", "(p | q) & (~p | r) & (~q | r) & ~r",
        "(p | q) & (~p | r)", "p & (q | r) & ~q", "(p <-> q) & (q <-> r) & (p <-> ~r)", "~(p | ~p)", "p -> q",
        "(p & q) | (~p & ~q)", "(p | q) & (p | ~q) & (~p | q) & (~p | ~q)", "q & ~q & r", "r", "~r & (p | r)",
        "(p -> q) & (q -> r) & p & ~r", "(p -> q) & (q -> r) & p", "T", "F", "p & F", "p | F", "~(p -> p)",
        "(p & ~q) | (q & ~r) | (r & ~p)", "(p | q | r) & ~p & ~q & ~r", "(p | q | r) & ~p & ~q", "p <-> (q & r)",
        "(p <-> q) & ~(p <-> q)", "~p & ~q & (p | q)", "(p -> ~p) & (~p -> p)", "q -> (p & ~p)"})
    out.push_back(parse_formula(text));
  return out;
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 6);
  const int k = kind(rng);
  if (k <= 1) {
    std::uniform_int_distribution<std::size_t> pick_var(0, vars.size() - 1);
    Formula v = Formula::variable(vars[pick_var(rng)]);
    return k == 1 ? Formula::negation(v) : v;
  }
  if (k == 2) return Formula::negation(random_formula(rng, vars, depth - 1));
  static constexpr Connective binaries[] = {Connective::conjunction, Connective::disjunction, Connective::implication,
                                            Connective::biconditional};
  return Formula::binary(binaries[k - 3], random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
}

std::vector<JudgmentSet> random_profile(std::mt19937_64& rng, const Agenda& agenda, std::size_t n) {
  const std::vector<JudgmentSet> space = judgment_sets(agenda);
  std::uniform_int_distribution<std::size_t> pick_set(0, space.size() - 1);
  std::vector<JudgmentSet> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(space[pick_set(rng)]);
  return out;
}

Agenda doctrinal_agenda() { return Agenda({parse_formula("p"), parse_formula("q"), parse_formula("p & q")}); }

Profile doctrinal_profile() {
  return Profile(doctrinal_agenda(), {JudgmentSet::from_string("111"), JudgmentSet::from_string("100"),
                                      JudgmentSet::from_string("010")});
}

}  // namespace agorum::oracle
