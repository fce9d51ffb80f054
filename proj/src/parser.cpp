#include "trel/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

namespace trel {
namespace {

enum class TokenKind { Ident, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  TokenKind kind;
  SourceSpan span;
  std::string_view text;
};

struct Spelling {
  std::string_view text;
  TokenKind kind;
};

// Longest spellings first so "<->" wins over any prefix.
constexpr std::array kSpellings = {
    Spelling{"<->", TokenKind::Iff},     Spelling{"↔", TokenKind::Iff},
    Spelling{"->", TokenKind::Implies},  Spelling{"→", TokenKind::Implies},
    Spelling{"∨", TokenKind::Or},   Spelling{"|", TokenKind::Or},
    Spelling{"∧", TokenKind::And},  Spelling{"&", TokenKind::And},
    Spelling{"¬", TokenKind::Not},  Spelling{"~", TokenKind::Not},
    Spelling{"(", TokenKind::LParen},    Spelling{")", TokenKind::RParen},
};

constexpr int kMaxNesting = 2000;

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (std::isspace(c)) {
      ++pos;
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t end = pos + 1;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) {
        ++end;
      }
      const std::string_view word = text.substr(pos, end - pos);
      tokens.push_back({word == "v" ? TokenKind::Or : TokenKind::Ident, {pos, end}, word});
      pos = end;
      continue;
    }
    bool matched = false;
    for (const Spelling& s : kSpellings) {
      if (text.substr(pos).starts_with(s.text)) {
        tokens.push_back({s.kind, {pos, pos + s.text.size()}, s.text});
        pos += s.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      // Report a whole UTF-8 sequence rather than a lone lead byte.
      std::size_t end = pos + 1;
      while (end < text.size() && (static_cast<unsigned char>(text[end]) & 0xC0) == 0x80) ++end;
      throw ParseError({pos, end}, "unexpected character '" +
                                       std::string(text.substr(pos, end - pos)) + "'");
    }
  }
  tokens.push_back({TokenKind::End, {text.size(), text.size()}, {}});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != TokenKind::End) fail("expected end of input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::string_view expected) const {
    const Token& t = peek();
    std::string message(expected);
    message += t.kind == TokenKind::End ? std::string(", found end of input")
                                        : ", found '" + std::string(t.text) + "'";
    message += " at offset " + std::to_string(t.span.start);
    throw ParseError(t.span, message);
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (accept(TokenKind::Iff)) {
      Formula rhs = parse_implies();
      lhs = Formula::conjunction(Formula::implication(lhs, rhs), Formula::implication(rhs, lhs));
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept(TokenKind::Implies)) {
      Nesting guard(*this);
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(TokenKind::Or)) lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(TokenKind::And)) lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  Formula parse_unary() {
    if (accept(TokenKind::Not)) {
      Nesting guard(*this);
      return Formula::negation(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (peek().kind == TokenKind::Ident) return Formula::variable(std::string(advance().text));
    if (accept(TokenKind::LParen)) {
      Nesting guard(*this);
      Formula inner = parse_iff();
      if (!accept(TokenKind::RParen)) fail("expected ')'");
      return inner;
    }
    fail("expected variable, '~' or '('");
  }

  struct Nesting {
    explicit Nesting(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("formula nested too deeply; expected operand");
    }
    ~Nesting() { --parser.depth_; }
    Parser& parser;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string describe(const ParseError& error, std::string_view text) {
  std::string out = "syntax error: ";
  out += error.what();
  out += '\n';
  out += "  ";
  out += text;
  out += "\n  ";
  const SourceSpan span = error.span();
  // Column counts code points so the caret lines up under UTF-8 input.
  auto columns = [&](std::size_t from, std::size_t to) {
    std::size_t n = 0;
    for (std::size_t i = from; i < to && i < text.size(); ++i) {
      if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++n;
    }
    return n;
  };
  out.append(columns(0, span.start), ' ');
  out.append(std::max<std::size_t>(1, columns(span.start, span.end)), '^');
  return out;
}

}  // namespace trel
