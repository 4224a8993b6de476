#include <cctype>
#include <optional>

#include "cff/errors.hpp"
#include "cff/term.hpp"

namespace cff {

namespace {

enum class Tok { Nat, Ident, Plus, Monus, Star, Slash, Percent, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

// UTF-8 encoding of U+2238 DOT MINUS, accepted as an alias of "-.".
constexpr std::string_view kDotMinus = "\xE2\x88\xB8";

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start, {}};
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Nat, start, src_.substr(start, pos_ - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, start, src_.substr(start, pos_ - start)};
    }
    if (src_.substr(pos_).starts_with(kDotMinus)) {
      pos_ += kDotMinus.size();
      return {Tok::Monus, start, src_.substr(start, kDotMinus.size())};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::Plus, start, "+"};
      case '*': return {Tok::Star, start, "*"};
      case '/': return {Tok::Slash, start, "/"};
      case '%': return {Tok::Percent, start, "%"};
      case '^': return {Tok::Caret, start, "^"};
      case '(': return {Tok::LParen, start, "("};
      case ')': return {Tok::RParen, start, ")"};
      case ',': return {Tok::Comma, start, ","};
      case '-':
        if (pos_ < src_.size() && src_[pos_] == '.') {
          ++pos_;
          return {Tok::Monus, start, "-."};
        }
        if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
          throw ParseError(start, "negative literals are not allowed");
        throw ParseError(start, "'-' must be written as the monus operator '-.'");
      default:
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, ParseOptions options) : lexer_(src), options_(options) { advance(); }

  Term parse_all() {
    Term t = sum();
    if (cur_.kind != Tok::End) throw ParseError(cur_.pos, "unexpected '" + std::string(cur_.text) + "'");
    return t;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, std::string_view what) {
    if (cur_.kind != kind) {
      const std::string found = cur_.kind == Tok::End ? "end of input" : "'" + std::string(cur_.text) + "'";
      throw ParseError(cur_.pos, "expected " + std::string(what) + ", found " + found);
    }
    advance();
  }

  Term sum() {
    Term lhs = product();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Monus) {
      const Op op = cur_.kind == Tok::Plus ? Op::Add : Op::Monus;
      advance();
      lhs = Term::binary(op, std::move(lhs), product());
    }
    return lhs;
  }

  Term product() {
    Term lhs = power();
    for (;;) {
      Op op;
      if (cur_.kind == Tok::Star)
        op = Op::Mul;
      else if (cur_.kind == Tok::Slash)
        op = Op::Div;
      else if (cur_.kind == Tok::Percent)
        op = Op::Mod;
      else
        return lhs;
      advance();
      lhs = Term::binary(op, std::move(lhs), power());
    }
  }

  Term power() {
    Term base = atom();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    return pow(std::move(base), power());
  }

  Term atom() {
    const Token tok = cur_;
    switch (tok.kind) {
      case Tok::Nat:
        advance();
        return Term::constant(Natural(std::string(tok.text), 10));
      case Tok::Ident: {
        advance();
        if (cur_.kind != Tok::LParen) return Term::var(std::string(tok.text));
        if (!options_.allow_calls) throw ParseError(tok.pos, "calls are not allowed in strict terms");
        const std::size_t arity = reserved_arity(tok.text);
        if (arity == 0) throw ParseError(tok.pos, "unknown function '" + std::string(tok.text) + "'");
        advance();
        std::vector<Term> args;
        args.push_back(sum());
        while (cur_.kind == Tok::Comma) {
          advance();
          args.push_back(sum());
        }
        const std::size_t close = cur_.pos;
        expect(Tok::RParen, "')'");
        if (args.size() != arity)
          throw ParseError(close, "'" + std::string(tok.text) + "' takes " + std::to_string(arity) +
                                      " argument(s), got " + std::to_string(args.size()));
        return Term::call(std::string(tok.text), std::move(args));
      }
      case Tok::LParen: {
        advance();
        Term inner = sum();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End:
        throw ParseError(tok.pos, "unexpected end of input");
      default:
        throw ParseError(tok.pos, "unexpected '" + std::string(tok.text) + "'");
    }
  }

  Lexer lexer_;
  ParseOptions options_;
  Token cur_{Tok::End, 0, {}};
};

}  // namespace

Term parse(std::string_view text, ParseOptions options) { return Parser(text, options).parse_all(); }

}  // namespace cff
