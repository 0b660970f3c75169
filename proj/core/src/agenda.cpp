#include "agorum/agenda.hpp"

#include <algorithm>
#include <sstream>

#include "agorum/error.hpp"
#include "agorum/logic.hpp"

namespace agorum {

namespace {

std::string render_set(const std::vector<Formula>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += to_string(members[i]);
  }
  return out + "}";
}

}  // namespace

Agenda::Agenda(std::vector<Formula> positives, std::optional<std::vector<bool>> premises) {
  if (positives.empty()) throw Error(ErrorCode::invalid_agenda, "agenda must not be empty");
  if (premises && premises->size() != positives.size())
    throw Error(ErrorCode::invalid_agenda, "premise tags do not match the agenda size");
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < positives.size(); ++i) {
    const Formula& f = positives[i];
    if (f.is_negation())
      throw Error(ErrorCode::invalid_agenda, "agenda member has a negation at its root", to_string(f));
    for (std::size_t j = 0; j < i; ++j) {
      if (positives[j] == f) throw Error(ErrorCode::invalid_agenda, "duplicate agenda member", to_string(f));
    }
    data->negatives.push_back(complement(f));
  }
  data->variables = variables_of(positives);
  data->positives = std::move(positives);
  data->premises = std::move(premises);
  data_ = std::move(data);
}

Agenda build_agenda(std::vector<Formula> positives) { return Agenda(std::move(positives)); }

Formula Agenda::formula(Member m) const {
  return m.positive ? data_->positives.at(m.issue) : data_->negatives.at(m.issue);
}

std::vector<Formula> Agenda::formulas() const {
  std::vector<Formula> out;
  out.reserve(2 * size());
  for (std::size_t i = 0; i < size(); ++i) {
    out.push_back(data_->positives[i]);
    out.push_back(data_->negatives[i]);
  }
  return out;
}

std::optional<Member> Agenda::find(const Formula& f) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (data_->positives[i] == f) return Member{i, true};
    if (data_->negatives[i] == f) return Member{i, false};
  }
  return std::nullopt;
}

Member Agenda::locate(const Formula& f) const {
  if (auto m = find(f)) return *m;
  throw Error(ErrorCode::not_in_agenda, "formula is not a member of the agenda", to_string(f));
}

bool Agenda::is_premise(std::size_t issue) const {
  return data_->premises && data_->premises->at(issue);
}

bool Agenda::is_variable_closed() const {
  return std::all_of(data_->variables.begin(), data_->variables.end(),
                     [&](const std::string& v) { return contains(Formula::variable(v)); });
}

const std::vector<JudgmentSet>& Agenda::judgment_sets() const {
  std::call_once(data_->space_once, [this] { data_->space = enumerate_judgment_sets(*this); });
  return data_->space;
}

bool operator==(const Agenda& a, const Agenda& b) {
  return a.data_ == b.data_ || (a.positives() == b.positives() && a.data_->premises == b.data_->premises);
}

JudgmentSet JudgmentSet::from_bits(const std::vector<bool>& bits) {
  std::vector<Verdict> v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v[i] = bits[i] ? Verdict::positive : Verdict::negative;
  return JudgmentSet(std::move(v));
}

JudgmentSet JudgmentSet::from_string(std::string_view text) {
  std::vector<Verdict> v;
  v.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '1': v.push_back(Verdict::positive); break;
      case '0': v.push_back(Verdict::negative); break;
      case '-': v.push_back(Verdict::neither); break;
      case '*': v.push_back(Verdict::both); break;
      default:
        throw Error(ErrorCode::invalid_argument, std::string("unexpected verdict character '") + c + "'");
    }
  }
  return JudgmentSet(std::move(v));
}

bool JudgmentSet::contains(Member m) const {
  const Verdict v = verdicts_.at(m.issue);
  return v == Verdict::both || v == (m.positive ? Verdict::positive : Verdict::negative);
}

bool JudgmentSet::is_complete() const noexcept {
  return std::none_of(verdicts_.begin(), verdicts_.end(), [](Verdict v) { return v == Verdict::neither; });
}

bool JudgmentSet::is_complement_free() const noexcept {
  return std::none_of(verdicts_.begin(), verdicts_.end(), [](Verdict v) { return v == Verdict::both; });
}

bool JudgmentSet::value(std::size_t issue) const {
  const Verdict v = verdicts_.at(issue);
  if (v == Verdict::positive) return true;
  if (v == Verdict::negative) return false;
  throw Error(ErrorCode::undefined_distance, "judgment set is incomplete or accepts both a formula and its complement",
              to_string());
}

std::string JudgmentSet::to_string() const {
  std::string out;
  out.reserve(verdicts_.size());
  for (Verdict v : verdicts_) {
    switch (v) {
      case Verdict::positive: out += '1'; break;
      case Verdict::negative: out += '0'; break;
      case Verdict::neither: out += '-'; break;
      case Verdict::both: out += '*'; break;
    }
  }
  return out;
}

JudgmentSet judgment_from_formulas(const std::vector<Formula>& members, const Agenda& agenda) {
  JudgmentSet j(agenda.size());
  for (const Formula& f : members) {
    const Member m = agenda.locate(f);
    const Verdict current = j[m.issue];
    const Verdict own = m.positive ? Verdict::positive : Verdict::negative;
    if (current == Verdict::neither || current == own) {
      j.set(m.issue, own);
    } else {
      j.set(m.issue, Verdict::both);
    }
  }
  return j;
}

std::vector<Formula> formulas_of(const JudgmentSet& j, const Agenda& agenda) {
  if (j.size() != agenda.size()) throw Error(ErrorCode::invalid_argument, "judgment set does not match the agenda size");
  std::vector<Formula> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j.contains({i, true})) out.push_back(agenda.formula({i, true}));
    if (j.contains({i, false})) out.push_back(agenda.formula({i, false}));
  }
  return out;
}

std::string describe(const JudgmentSet& j, const Agenda& agenda) { return render_set(formulas_of(j, agenda)); }

ValidationFlags validate_judgment_set(const JudgmentSet& j, const Agenda& agenda) {
  return {j.is_complete(), j.is_complement_free(), is_consistent(formulas_of(j, agenda))};
}

std::vector<JudgmentSet> enumerate_judgment_sets(const Agenda& agenda) {
  std::vector<JudgmentSet> out;
  for (const auto& bits : realizable_valuations(agenda.positives())) out.push_back(JudgmentSet::from_bits(bits));
  return out;
}

std::size_t hamming(const JudgmentSet& j, const JudgmentSet& k) {
  if (j.size() != k.size()) throw Error(ErrorCode::invalid_argument, "judgment sets over different agendas");
  std::size_t d = 0;
  for (std::size_t i = 0; i < j.size(); ++i) d += j.value(i) != k.value(i);
  return d;
}

Profile::Profile(Agenda agenda, std::vector<JudgmentSet> agents) : Profile(std::move(agenda), std::move(agents), true) {}

Profile Profile::from_rational(Agenda agenda, std::vector<JudgmentSet> agents) {
  return Profile(std::move(agenda), std::move(agents), false);
}

Profile::Profile(Agenda agenda, std::vector<JudgmentSet> agents, bool check_consistency)
    : agenda_(std::move(agenda)), agents_(std::move(agents)), positive_support_(agenda_.size(), 0) {
  if (agents_.empty() || agents_.size() % 2 == 0)
    throw Error(ErrorCode::invalid_profile,
                "profile needs an odd number of agents, got " + std::to_string(agents_.size()));
  for (std::size_t a = 0; a < agents_.size(); ++a) {
    const JudgmentSet& j = agents_[a];
    const std::string row = "agent " + std::to_string(a + 1);
    if (j.size() != agenda_.size())
      throw Error(ErrorCode::invalid_profile, row + " has " + std::to_string(j.size()) + " verdicts, agenda has " +
                                                  std::to_string(agenda_.size()));
    if (!j.is_complete() || !j.is_complement_free())
      throw Error(ErrorCode::invalid_profile, row + " is not complete and complement-free", j.to_string());
    if (check_consistency) {
      const std::vector<Formula> members = formulas_of(j, agenda_);
      if (!is_consistent(members)) {
        std::vector<Formula> core;
        for (std::size_t idx : minimal_inconsistent_core(members)) core.push_back(members[idx]);
        throw Error(ErrorCode::invalid_profile, row + " is inconsistent", render_set(core));
      }
    }
    for (std::size_t i = 0; i < j.size(); ++i) positive_support_[i] += j[i] == Verdict::positive;
  }
}

std::size_t Profile::support_count(Member m) const {
  const std::size_t pos = positive_support_.at(m.issue);
  return m.positive ? pos : n() - pos;
}

Profile Profile::with_agent(std::size_t i, JudgmentSet replacement) const {
  std::vector<JudgmentSet> agents = agents_;
  agents.at(i) = std::move(replacement);
  return Profile(agenda_, std::move(agents), true);
}

std::string to_string(const Profile& profile) {
  std::string out = "[";
  for (std::size_t a = 0; a < profile.n(); ++a) {
    if (a) out += ' ';
    out += profile.agent(a).to_string();
  }
  return out + "]";
}

SupportCount support(const Formula& phi, const Profile& profile) {
  const Member m = profile.agenda().locate(phi);
  SupportCount out;
  for (std::size_t a = 0; a < profile.n(); ++a) {
    if (profile.agent(a).contains(m)) out.agents.push_back(a);
  }
  out.count = out.agents.size();
  return out;
}

JudgmentSet complete_extension(const std::vector<Formula>& s, const Agenda& agenda) {
  JudgmentSet base = judgment_from_formulas(s, agenda);
  if (!is_consistent(s))
    throw Error(ErrorCode::invalid_argument, "cannot extend an inconsistent set", render_set(s));
  std::vector<Formula> chosen = s;
  JudgmentSet out = base;
  for (std::size_t i = 0; i < agenda.size(); ++i) {
    if (base[i] != Verdict::neither) continue;
    chosen.push_back(agenda.formula({i, true}));
    if (is_consistent(chosen)) {
      out.set(i, Verdict::positive);
    } else {
      chosen.back() = agenda.formula({i, false});
      out.set(i, Verdict::negative);
    }
  }
  return out;
}

std::size_t distance_sum(const JudgmentSet& j, const Profile& profile) {
  std::size_t total = 0;
  for (const JudgmentSet& agent : profile.agents()) total += hamming(j, agent);
  return total;
}

}  // namespace agorum
