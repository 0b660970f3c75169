#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "agorum/formula.hpp"

namespace agorum {

// One member of Φ: either φ_issue itself or its complement.
struct Member {
  std::size_t issue = 0;
  bool positive = true;

  friend auto operator<=>(const Member&, const Member&) = default;
};

enum class Verdict : std::uint8_t { positive, negative, neither, both };

// A subset of Φ recorded as one verdict per issue. Ordering is the canonical
// one: lexicographic over issues with acceptance of φ first.
class JudgmentSet {
 public:
  JudgmentSet() = default;
  explicit JudgmentSet(std::vector<Verdict> verdicts) : verdicts_(std::move(verdicts)) {}
  explicit JudgmentSet(std::size_t issues, Verdict fill = Verdict::neither) : verdicts_(issues, fill) {}

  // Complete complement-free set from its characteristic bits.
  static JudgmentSet from_bits(const std::vector<bool>& bits);
  // "1" accepts φ, "0" accepts ∼φ, "-" neither, "*" both.
  static JudgmentSet from_string(std::string_view text);

  std::size_t size() const noexcept { return verdicts_.size(); }
  Verdict operator[](std::size_t issue) const { return verdicts_.at(issue); }
  void set(std::size_t issue, Verdict v) { verdicts_.at(issue) = v; }
  const std::vector<Verdict>& verdicts() const noexcept { return verdicts_; }

  bool contains(Member m) const;
  bool is_complete() const noexcept;
  bool is_complement_free() const noexcept;
  // Characteristic value J(φ_issue); throws undefined_distance unless the
  // verdict is positive or negative.
  bool value(std::size_t issue) const;

  std::string to_string() const;  // inverse of from_string

  friend auto operator<=>(const JudgmentSet&, const JudgmentSet&) = default;

 private:
  std::vector<Verdict> verdicts_;
};

// Complementation-closed agenda stored as the ordered list Φ⁺. Copies are
// cheap and share the same immutable data.
class Agenda {
 public:
  // Rejects an empty list, members with a negation at the root, and
  // structural duplicates. `premises`, when given, tags each issue; the
  // complement of a premise is a premise.
  explicit Agenda(std::vector<Formula> positives, std::optional<std::vector<bool>> premises = std::nullopt);

  std::size_t size() const noexcept { return data_->positives.size(); }  // |Φ⁺|
  const std::vector<Formula>& positives() const noexcept { return data_->positives; }
  const Formula& positive(std::size_t issue) const { return data_->positives.at(issue); }
  Formula formula(Member m) const;
  // Φ in the order φ₁, ∼φ₁, φ₂, ∼φ₂, ...
  std::vector<Formula> formulas() const;

  std::optional<Member> find(const Formula& f) const;
  Member locate(const Formula& f) const;  // throws not_in_agenda
  bool contains(const Formula& f) const { return find(f).has_value(); }

  bool has_premise_partition() const noexcept { return data_->premises.has_value(); }
  bool is_premise(std::size_t issue) const;

  const std::set<std::string>& variables() const noexcept { return data_->variables; }
  // Every variable occurring in Φ is itself a member of Φ⁺.
  bool is_variable_closed() const;

  // J(Φ), computed on first use and shared by all copies of this agenda.
  const std::vector<JudgmentSet>& judgment_sets() const;

  friend bool operator==(const Agenda& a, const Agenda& b);

 private:
  struct Data {
    std::vector<Formula> positives;
    std::vector<Formula> negatives;
    std::optional<std::vector<bool>> premises;
    std::set<std::string> variables;
    mutable std::once_flag space_once;
    mutable std::vector<JudgmentSet> space;
  };
  std::shared_ptr<const Data> data_;
};

Agenda build_agenda(std::vector<Formula> positives);

// Judgment set holding exactly the given members of Φ.
JudgmentSet judgment_from_formulas(const std::vector<Formula>& members, const Agenda& agenda);
std::vector<Formula> formulas_of(const JudgmentSet& j, const Agenda& agenda);
// "{p, q, ~(p & q)}"
std::string describe(const JudgmentSet& j, const Agenda& agenda);

struct ValidationFlags {
  bool complete = false;
  bool complement_free = false;
  bool consistent = false;

  bool rational() const noexcept { return complete && complement_free && consistent; }
};

ValidationFlags validate_judgment_set(const JudgmentSet& j, const Agenda& agenda);

// J(Φ): all complete consistent judgment sets, canonical order.
std::vector<JudgmentSet> enumerate_judgment_sets(const Agenda& agenda);

// Number of issues on which two complete complement-free sets differ.
std::size_t hamming(const JudgmentSet& j, const JudgmentSet& k);

// Agents' judgment sets over one agenda. The number of agents is odd; every
// member must be complete, complement-free and consistent.
class Profile {
 public:
  Profile(Agenda agenda, std::vector<JudgmentSet> agents);

  // Skips the consistency check for members known to come from J(Φ).
  static Profile from_rational(Agenda agenda, std::vector<JudgmentSet> agents);

  const Agenda& agenda() const noexcept { return agenda_; }
  std::size_t n() const noexcept { return agents_.size(); }
  const std::vector<JudgmentSet>& agents() const noexcept { return agents_; }
  const JudgmentSet& agent(std::size_t i) const { return agents_.at(i); }

  // |N_φ| for φ = φ_issue and for its complement.
  std::size_t positive_support(std::size_t issue) const { return positive_support_.at(issue); }
  std::size_t support_count(Member m) const;

  Profile with_agent(std::size_t i, JudgmentSet replacement) const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.agenda_ == b.agenda_ && a.agents_ == b.agents_;
  }

 private:
  Profile(Agenda agenda, std::vector<JudgmentSet> agents, bool check_consistency);

  Agenda agenda_;
  std::vector<JudgmentSet> agents_;
  std::vector<std::size_t> positive_support_;
};

// Rows of characteristic bits, e.g. "[111 100 010]".
std::string to_string(const Profile& profile);

struct SupportCount {
  std::vector<std::size_t> agents;  // 0-based indices, ascending
  std::size_t count = 0;
};

SupportCount support(const Formula& phi, const Profile& profile);

// First member of J(Φ) in canonical order that contains every formula of S.
JudgmentSet complete_extension(const std::vector<Formula>& s, const Agenda& agenda);

std::size_t distance_sum(const JudgmentSet& j, const Profile& profile);

}  // namespace agorum
