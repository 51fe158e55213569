#include <cctype>

#include "adk/poly2.hpp"

namespace adk {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t pos = 0;
  mpz_class num;
  std::string ident;
};

class Lexer {
public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& cur() const { return cur_; }
  void advance() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    cur_.pos = p_;
    if (p_ >= s_.size()) {
      cur_.kind = Tok::End;
      return;
    }
    char c = s_[p_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      cur_.kind = Tok::Int;
      // explicit base 10: the default base-0 constructor reads 029 as octal
      cur_.num = mpz_class(s_.substr(start, p_ - start), 10);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = p_;
      while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
      cur_.kind = Tok::Ident;
      cur_.ident = s_.substr(start, p_ - start);
      return;
    }
    ++p_;
    switch (c) {
      case '+': cur_.kind = Tok::Plus; return;
      case '-': cur_.kind = Tok::Minus; return;
      case '*': cur_.kind = Tok::Star; return;
      case '^': cur_.kind = Tok::Caret; return;
      case '/': cur_.kind = Tok::Slash; return;
      case '(': cur_.kind = Tok::LParen; return;
      case ')': cur_.kind = Tok::RParen; return;
      default:
        fail(Errc::SyntaxError, "unexpected character '" + std::string(1, c) + "'",
             static_cast<long>(cur_.pos));
    }
  }

private:
  const std::string& s_;
  size_t p_ = 0;
  Token cur_;
};

// Recursive-descent parser producing a Poly2; in univariate mode the single
// variable maps to the x slot.
class Parser {
public:
  Parser(const std::string& s, FieldPtr field, bool univariate)
      : lex_(s), f_(std::move(field)), uni_(univariate) {}

  Poly2 parse() {
    Poly2 e = expr(true);
    if (lex_.cur().kind != Tok::End)
      fail(Errc::SyntaxError, "expected operator or end of input",
           static_cast<long>(lex_.cur().pos));
    return e;
  }

private:
  Poly2 expr(bool allow_leading_minus) {
    bool neg = false;
    if (allow_leading_minus && lex_.cur().kind == Tok::Minus) {
      neg = true;
      lex_.advance();
    }
    Poly2 acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (lex_.cur().kind == Tok::Plus) {
        lex_.advance();
        acc = acc + term();
      } else if (lex_.cur().kind == Tok::Minus) {
        lex_.advance();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly2 term() {
    Poly2 acc = factor();
    while (lex_.cur().kind == Tok::Star) {
      lex_.advance();
      acc = acc * factor();
    }
    return acc;
  }

  Poly2 factor() {
    Poly2 b = base();
    if (lex_.cur().kind == Tok::Caret) {
      lex_.advance();
      const Token& t = lex_.cur();
      if (t.kind == Tok::LParen)
        fail(Errc::NonIntegerExponent, "exponent must be a nonnegative integer literal",
             static_cast<long>(t.pos));
      if (t.kind != Tok::Int)
        fail(Errc::SyntaxError, "expected a nonnegative integer exponent",
             static_cast<long>(t.pos));
      mpz_class e = t.num;
      size_t epos = t.pos;
      lex_.advance();
      if (lex_.cur().kind == Tok::Slash)
        fail(Errc::NonIntegerExponent, "exponent must be an integer", static_cast<long>(epos));
      if (e > 4096) fail(Errc::InvalidArgument, "exponent too large", static_cast<long>(epos));
      return b.pow(static_cast<uint32_t>(e.get_ui()));
    }
    return b;
  }

  Poly2 base() {
    const Token t = lex_.cur();
    switch (t.kind) {
      case Tok::Int: {
        lex_.advance();
        mpz_class num = t.num;
        if (lex_.cur().kind == Tok::Slash) {
          lex_.advance();
          const Token& d = lex_.cur();
          if (d.kind != Tok::Int)
            fail(Errc::SyntaxError, "expected integer denominator",
                 static_cast<long>(d.pos));
          mpz_class den = d.num;
          lex_.advance();
          if (den == 0) fail(Errc::InvalidArgument, "zero denominator", static_cast<long>(d.pos));
          mpq_class q(num, den);
          q.canonicalize();
          return Poly2::constant(f_->from_mpq(q));
        }
        return Poly2::constant(f_->from_mpz(num));
      }
      case Tok::Ident: {
        lex_.advance();
        if (!uni_) {
          if (t.ident == "x") return Poly2::x(f_);
          if (t.ident == "y") return Poly2::y(f_);
        } else {
          if (t.ident == "t") return Poly2::x(f_);
        }
        fail(Errc::UnknownVariable, "unknown variable '" + t.ident + "'",
             static_cast<long>(t.pos));
      }
      case Tok::LParen: {
        lex_.advance();
        Poly2 e = expr(true);
        if (lex_.cur().kind != Tok::RParen)
          fail(Errc::SyntaxError, "expected ')'", static_cast<long>(lex_.cur().pos));
        lex_.advance();
        return e;
      }
      case Tok::Minus:
        fail(Errc::SyntaxError, "unexpected '-'", static_cast<long>(t.pos));
      default:
        fail(Errc::SyntaxError, "expected a variable, number, or '('",
             static_cast<long>(t.pos));
    }
  }

  Lexer lex_;
  FieldPtr f_;
  bool uni_;
};

} // namespace

Poly2 parse_poly2(const std::string& input, const FieldPtr& field) {
  return Parser(input, field, false).parse();
}

UPoly parse_upoly(const std::string& input, const FieldPtr& field) {
  Poly2 p = Parser(input, field, true).parse();
  std::vector<FieldElem> c(p.deg_x() + 1, field->zero());
  for (const auto& [e, v] : p.terms()) c[e.i] = v;
  return UPoly(field, std::move(c));
}

FieldElem parse_elem(const std::string& input, const FieldPtr& field) {
  if (field->kind() == Field::Kind::Extension) {
    UPoly p = parse_upoly(input, field);
    return p.eval(field->generator());
  }
  UPoly p = parse_upoly(input, field); // raises UnknownVariable on any 't'
  if (p.degree() > 0)
    fail(Errc::UnknownVariable, "'t' denotes the generator of an extension field");
  return p.coeff(0);
}

FieldPtr Field::parse_spec(const std::string& spec) {
  if (spec == "q") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    const std::string num = spec.substr(3);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::InvalidArgument, "bad prime in field spec: " + spec);
    return Field::prime(mpz_class(num, 10).get_ui());
  }
  if (spec.rfind("ext:", 0) == 0) {
    const std::string rest = spec.substr(4);
    size_t colon = rest.rfind(':');
    if (colon == std::string::npos)
      fail(Errc::InvalidArgument, "field spec needs ext:<base>:<modulus>: " + spec);
    FieldPtr base = parse_spec(rest.substr(0, colon));
    UPoly modulus = parse_upoly(rest.substr(colon + 1), base);
    return Field::extension(base, modulus);
  }
  fail(Errc::InvalidArgument, "unknown field spec: " + spec + " (expected q, fp:<p>, ext:<base>:<modulus>)");
}

} // namespace adk
