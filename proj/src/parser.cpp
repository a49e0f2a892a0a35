#include <cctype>
#include <optional>

#include "cmlocus/errors.hpp"
#include "cmlocus/polynomial.hpp"

namespace cmlocus {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    auto t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == s_.size()) {
      tok_ = {Tok::End, {}, pos_};
      return;
    }
    auto start = pos_;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Tok::Number, s_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      tok_ = {Tok::Ident, s_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(ErrorCode::Parse, std::string("unexpected character '") + c + "'", start);
    }
    tok_ = {kind, s_.substr(start, 1), start};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, {}, 0};
};

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : lex_(text), ring_(ring) {}

  Polynomial parse() {
    auto p = expr();
    if (lex_.peek().kind != Tok::End) fail("unexpected '" + std::string(lex_.peek().text) + "'", lex_.peek().offset);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t offset, ErrorCode code = ErrorCode::Parse) {
    throw ParseError(code, msg + " at offset " + std::to_string(offset), offset);
  }

  Polynomial expr() {
    auto acc = term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool minus = lex_.take().kind == Tok::Minus;
      auto rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  static bool starts_factor(Tok k) { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

  Polynomial term() {
    auto acc = unary();
    for (;;) {
      auto k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        acc = acc * unary();
      } else if (k == Tok::Slash) {
        auto at = lex_.take().offset;
        auto d = unary();
        if (!d.is_constant()) fail("division by a non-constant", at);
        if (d.is_zero()) fail("division by zero", at, ErrorCode::DivisionByZero);
        acc = acc.scaled(d.leading_coeff().inverse());
      } else if (starts_factor(k)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      return -unary();
    }
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    auto base = primary();
    if (lex_.peek().kind != Tok::Caret) return base;
    lex_.take();
    auto t = lex_.peek();
    if (t.kind != Tok::Number) fail("malformed exponent (expected a non-negative integer)", t.offset);
    lex_.take();
    if (t.text.size() > 5 || std::stoul(std::string(t.text)) > 65535) fail("exponent too large", t.offset);
    auto e = std::stoul(std::string(t.text));
    auto result = Polynomial::constant(ring_, 1);
    for (unsigned long i = 0; i < e; ++i) result = result * base;
    return result;
  }

  Polynomial primary() {
    auto t = lex_.take();
    switch (t.kind) {
      case Tok::Number: {
        mpz_class z(std::string(t.text), 10);
        return Polynomial::constant(ring_, FieldElement::from_rational(mpq_class(z), ring_->field()));
      }
      case Tok::Ident:
        return identifier(t);
      case Tok::LParen: {
        auto p = expr();
        if (lex_.peek().kind != Tok::RParen) fail("expected ')'", lex_.peek().offset);
        lex_.take();
        return p;
      }
      case Tok::End:
        fail("unexpected end of input", t.offset);
      default:
        fail("unexpected '" + std::string(t.text) + "'", t.offset);
    }
  }

  // A known variable, or else a juxtaposition of variable names ("xz").
  Polynomial identifier(const Token& t) {
    if (auto i = ring_->variable_index(t.text)) return Polynomial::variable(ring_, *i);
    auto split = segment(t.text);
    if (!split) fail("unknown variable '" + std::string(t.text) + "'", t.offset, ErrorCode::UnknownVariable);
    auto p = Polynomial::constant(ring_, 1);
    for (auto i : *split) p = p * Polynomial::variable(ring_, i);
    return p;
  }

  std::optional<std::vector<std::size_t>> segment(std::string_view s) const {
    // reach[k]: a split of s[0,k) into variable names, if any.
    std::vector<std::optional<std::vector<std::size_t>>> reach(s.size() + 1);
    reach[0].emplace();
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!reach[k]) continue;
      for (std::size_t v = 0; v < ring_->num_variables(); ++v) {
        const auto& name = ring_->variables()[v];
        if (s.substr(k).starts_with(name) && !reach[k + name.size()]) {
          reach[k + name.size()] = *reach[k];
          reach[k + name.size()]->push_back(v);
        }
      }
    }
    return reach[s.size()];
  }

  Lexer lex_;
  const RingPtr& ring_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace cmlocus
