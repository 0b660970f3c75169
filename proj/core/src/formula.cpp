#include "agorum/formula.hpp"

#include <optional>
#include <ostream>

#include "agorum/error.hpp"

namespace agorum {

struct Formula::Node {
  Connective connective;
  std::string name;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::size_t hash;
  std::size_t count;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int precedence(Connective c) {
  switch (c) {
    case Connective::biconditional: return 1;
    case Connective::implication: return 2;
    case Connective::disjunction: return 3;
    case Connective::conjunction: return 4;
    case Connective::negation: return 5;
    default: return 6;
  }
}

std::string_view symbol(Connective c) {
  switch (c) {
    case Connective::conjunction: return " & ";
    case Connective::disjunction: return " | ";
    case Connective::implication: return " -> ";
    case Connective::biconditional: return " <-> ";
    default: return "";
  }
}

void render(const Formula& f, int min_precedence, std::string& out) {
  const int own = precedence(f.connective());
  const bool wrap = own < min_precedence;
  if (wrap) out.push_back('(');
  switch (f.connective()) {
    case Connective::variable: out += f.name(); break;
    case Connective::top: out.push_back('T'); break;
    case Connective::bottom: out.push_back('F'); break;
    case Connective::negation:
      out.push_back('~');
      render(f.operand(), own, out);
      break;
    default: {
      const bool right_assoc = f.connective() == Connective::implication;
      render(f.left(), right_assoc ? own + 1 : own, out);
      out += symbol(f.connective());
      render(f.right(), right_assoc ? own : own + 1, out);
      break;
    }
  }
  if (wrap) out.push_back(')');
}

}  // namespace

Formula Formula::variable(std::string name) {
  if (name.empty()) throw Error(ErrorCode::invalid_argument, "variable name must be nonempty");
  const std::size_t h = mix(std::hash<std::string>{}(name), 1);
  return Formula(std::make_shared<const Node>(
      Node{Connective::variable, std::move(name), std::nullopt, std::nullopt, h, 1}));
}

Formula Formula::top() {
  static const Formula value(std::make_shared<const Node>(
      Node{Connective::top, {}, std::nullopt, std::nullopt, mix(0, 2), 1}));
  return value;
}

Formula Formula::bottom() {
  static const Formula value(std::make_shared<const Node>(
      Node{Connective::bottom, {}, std::nullopt, std::nullopt, mix(0, 3), 1}));
  return value;
}

Formula Formula::negation(Formula operand) {
  const std::size_t h = mix(operand.hash(), 4);
  const std::size_t count = operand.node_count() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::negation, {}, std::move(operand), std::nullopt, h, count}));
}

Formula Formula::binary(Connective connective, Formula left, Formula right) {
  switch (connective) {
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication:
    case Connective::biconditional:
      break;
    default:
      throw Error(ErrorCode::invalid_argument, "not a binary connective");
  }
  const std::size_t h =
      mix(mix(left.hash(), right.hash()), 16 + static_cast<std::size_t>(connective));
  const std::size_t count = left.node_count() + right.node_count() + 1;
  return Formula(std::make_shared<const Node>(
      Node{connective, {}, std::move(left), std::move(right), h, count}));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return binary(Connective::conjunction, std::move(l), std::move(r));
}
Formula Formula::disjunction(Formula l, Formula r) {
  return binary(Connective::disjunction, std::move(l), std::move(r));
}
Formula Formula::implication(Formula l, Formula r) {
  return binary(Connective::implication, std::move(l), std::move(r));
}
Formula Formula::biconditional(Formula l, Formula r) {
  return binary(Connective::biconditional, std::move(l), std::move(r));
}

Connective Formula::connective() const noexcept { return node_->connective; }

bool Formula::is_binary() const noexcept {
  const Connective c = connective();
  return c == Connective::conjunction || c == Connective::disjunction ||
         c == Connective::implication || c == Connective::biconditional;
}

const std::string& Formula::name() const {
  if (!is_variable()) throw Error(ErrorCode::invalid_argument, "formula is not a variable");
  return node_->name;
}

const Formula& Formula::operand() const {
  if (!is_negation()) throw Error(ErrorCode::invalid_argument, "formula is not a negation");
  return *node_->left;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw Error(ErrorCode::invalid_argument, "formula is not binary");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (!is_binary()) throw Error(ErrorCode::invalid_argument, "formula is not binary");
  return *node_->right;
}

std::size_t Formula::hash() const noexcept { return node_->hash; }
std::size_t Formula::node_count() const noexcept { return node_->count; }

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->count != b.node_->count ||
      a.node_->connective != b.node_->connective)
    return false;
  switch (a.connective()) {
    case Connective::variable: return a.node_->name == b.node_->name;
    case Connective::top:
    case Connective::bottom: return true;
    case Connective::negation: return *a.node_->left == *b.node_->left;
    default:
      return *a.node_->left == *b.node_->left && *a.node_->right == *b.node_->right;
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->connective <=> b.node_->connective; c != 0) return c;
  switch (a.connective()) {
    case Connective::variable: return a.node_->name <=> b.node_->name;
    case Connective::top:
    case Connective::bottom: return std::strong_ordering::equal;
    case Connective::negation: return *a.node_->left <=> *b.node_->left;
    default:
      if (auto c = *a.node_->left <=> *b.node_->left; c != 0) return c;
      return *a.node_->right <=> *b.node_->right;
  }
}

std::string to_string(const Formula& formula) {
  std::string out;
  render(formula, 0, out);
  return out;
}

std::ostream& operator<<(std::ostream& out, const Formula& formula) {
  return out << to_string(formula);
}

}  // namespace agorum
