#include <cctype>
#include <vector>

#include "agorum/error.hpp"
#include "agorum/formula.hpp"

namespace agorum {

namespace {

enum class Token { identifier, top, bottom, tilde, amp, bar, arrow, double_arrow, lparen, rparen, end };

struct Lexeme {
  Token token;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Lexeme> tokenize(std::string_view text) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t column = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      Token t = Token::identifier;
      if (word == "T") t = Token::top;
      if (word == "F") t = Token::bottom;
      out.push_back({t, std::move(word), column});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Token::tilde, "~", column}); ++i; continue;
      case '&': out.push_back({Token::amp, "&", column}); ++i; continue;
      case '|': out.push_back({Token::bar, "|", column}); ++i; continue;
      case '(': out.push_back({Token::lparen, "(", column}); ++i; continue;
      case ')': out.push_back({Token::rparen, ")", column}); ++i; continue;
      case '-':
        if (text.substr(i, 2) == "->") {
          out.push_back({Token::arrow, "->", column});
          i += 2;
          continue;
        }
        break;
      case '<':
        if (text.substr(i, 3) == "<->") {
          out.push_back({Token::double_arrow, "<->", column});
          i += 3;
          continue;
        }
        break;
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", column);
  }
  out.push_back({Token::end, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Lexeme> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    if (peek().token == Token::end) throw ParseError("empty formula", peek().column);
    Formula f = biconditional();
    if (peek().token != Token::end)
      throw ParseError("unexpected '" + peek().text + "'", peek().column);
    return f;
  }

 private:
  const Lexeme& peek() const { return tokens_[pos_]; }
  const Lexeme& take() { return tokens_[pos_++]; }

  Formula biconditional() {
    Formula f = implication();
    while (peek().token == Token::double_arrow) {
      take();
      f = Formula::biconditional(std::move(f), implication());
    }
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (peek().token == Token::arrow) {
      take();
      return Formula::implication(std::move(f), implication());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().token == Token::bar) {
      take();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().token == Token::amp) {
      take();
      f = Formula::conjunction(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (peek().token == Token::tilde) {
      take();
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    const Lexeme& lx = take();
    switch (lx.token) {
      case Token::identifier: return Formula::variable(lx.text);
      case Token::top: return Formula::top();
      case Token::bottom: return Formula::bottom();
      case Token::lparen: {
        Formula f = biconditional();
        if (peek().token != Token::rparen) throw ParseError("expected ')'", peek().column);
        take();
        return f;
      }
      case Token::end: throw ParseError("unexpected end of formula", lx.column);
      default: throw ParseError("unexpected '" + lx.text + "'", lx.column);
    }
  }

  std::vector<Lexeme> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

bool is_identifier(std::string_view text) noexcept {
  if (text.empty() || !ident_start(text.front())) return false;
  for (char c : text)
    if (!ident_char(c)) return false;
  return text != "T" && text != "F";
}

}  // namespace agorum
