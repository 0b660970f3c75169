#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace agorum {

enum class Connective : std::uint8_t {
  variable,
  top,
  bottom,
  negation,
  conjunction,
  disjunction,
  implication,
  biconditional,
};

// Immutable propositional formula. Copies share structure; identity is
// structural equality of the syntax tree, with no normalisation of any kind
// (p, p & T and ~~p are three different formulas).
class Formula {
 public:
  static Formula variable(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula biconditional(Formula left, Formula right);
  static Formula binary(Connective connective, Formula left, Formula right);

  Connective connective() const noexcept;
  bool is_negation() const noexcept { return connective() == Connective::negation; }
  bool is_variable() const noexcept { return connective() == Connective::variable; }
  bool is_binary() const noexcept;

  const std::string& name() const;     // variable
  const Formula& operand() const;      // negation
  const Formula& left() const;         // binary connectives
  const Formula& right() const;

  std::size_t hash() const noexcept;
  std::size_t node_count() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Renders in the input grammar with the fewest parentheses that still parse
// back to the identical tree.
std::string to_string(const Formula& formula);
std::ostream& operator<<(std::ostream& out, const Formula& formula);

// Grammar: identifiers [A-Za-z_][A-Za-z0-9_]*, constants T and F, operators
// ~ & | -> <-> with that binding order (tightest first). & and | associate
// to the left, -> to the right, <-> to the left. '#' starts a comment.
Formula parse_formula(std::string_view text);

bool is_identifier(std::string_view text) noexcept;

}  // namespace agorum

template <>
struct std::hash<agorum::Formula> {
  std::size_t operator()(const agorum::Formula& f) const noexcept { return f.hash(); }
};
