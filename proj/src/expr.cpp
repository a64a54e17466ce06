#include "complement/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace complement {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Nesting deeper than this is rejected instead of recursing further.
constexpr int kMaxDepth = 256;

}  // namespace

struct ExprFactory {
  static Expr wrap(ExprNode node) { return Expr(std::make_shared<const ExprNode>(std::move(node))); }
};

namespace {
Expr make(ExprNode node) { return ExprFactory::wrap(std::move(node)); }
}  // namespace

Expr Expr::number(const Rational& value) {
  if (value < 0) throw std::invalid_argument("Number nodes hold nonnegative values; use neg()");
  Rational v = value;
  v.canonicalize();
  return make({NumberNode{v}});
}
Expr Expr::var() { return make({VarNode{}}); }
Expr Expr::phi() { return make({PhiNode{}}); }
Expr Expr::neg(Expr arg) { return make({NegNode{std::move(arg)}}); }
Expr Expr::add(Expr l, Expr r) { return make({BinaryNode{BinaryOp::Add, std::move(l), std::move(r)}}); }
Expr Expr::sub(Expr l, Expr r) { return make({BinaryNode{BinaryOp::Sub, std::move(l), std::move(r)}}); }
Expr Expr::mul(Expr l, Expr r) { return make({BinaryNode{BinaryOp::Mul, std::move(l), std::move(r)}}); }
Expr Expr::div(Expr l, Expr r) { return make({BinaryNode{BinaryOp::Div, std::move(l), std::move(r)}}); }
Expr Expr::pow(Expr base, const Rational& exponent) {
  Rational e = exponent;
  e.canonicalize();
  return make({PowNode{std::move(base), e}});
}
Expr Expr::sqrt(Expr arg) { return make({SqrtNode{std::move(arg)}}); }
Expr Expr::root(unsigned degree, Expr arg) {
  if (degree < 2) throw std::invalid_argument("root degree must be >= 2");
  return make({RootNode{degree, std::move(arg)}});
}
Expr Expr::ln(Expr arg) { return make({LnNode{std::move(arg)}}); }
Expr Expr::log(Expr base, Expr arg) {
  if (free_var_count(base) != 0) throw std::invalid_argument("logarithm base must not mention x");
  return make({LogNode{std::move(base), std::move(arg)}});
}

bool operator==(const Expr& a, const Expr& b) {
  return a.node_ == b.node_ || a.node_->v == b.node_->v;
}

Expr operator+(Expr a, Expr b) { return Expr::add(std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::sub(std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::mul(std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::div(std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::neg(std::move(a)); }

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(position) + ": expected " +
                         expected + ", found " + (found.empty() ? "end of input" : "'" + found + "'")),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Integer, Decimal, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::size_t begin;
  std::size_t end;
  std::string text;
  Rational value;  // Integer and Decimal
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string digits(s.substr(begin, i - begin));
      if (i < s.size() && s[i] == '.') {
        const std::size_t frac_begin = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == frac_begin) {
          throw ParseError(i, "digit after decimal point",
                           i < s.size() ? std::string(1, s[i]) : std::string());
        }
        std::string frac(s.substr(frac_begin, i - frac_begin));
        mpz_class num(digits + frac, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Rational v(num, den);
        v.canonicalize();
        out.push_back({Tok::Decimal, begin, i, std::string(s.substr(begin, i - begin)), v});
      } else {
        out.push_back({Tok::Integer, begin, i, digits, Rational(mpz_class(digits, 10))});
      }
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        ++i;
      }
      out.push_back({Tok::Ident, begin, i, std::string(s.substr(begin, i - begin)), {}});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(i, "number, identifier, operator or parenthesis", std::string(1, s[i]));
    }
    ++i;
    out.push_back({kind, begin, i, std::string(1, static_cast<char>(c)), {}});
  }
  out.push_back({Tok::End, s.size(), s.size(), "", {}});
  return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  Expr parse_all() {
    Expr e = expr();
    if (peek().kind != Tok::End) fail("operator or end of input");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().begin, expected, peek().text);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(what);
    ++pos_;
  }

  Expr expr() {
    if (++depth_ > kMaxDepth) fail("shallower nesting");
    Expr lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool plus = advance().kind == Tok::Plus;
      Expr rhs = term();
      lhs = plus ? Expr::add(std::move(lhs), std::move(rhs)) : Expr::sub(std::move(lhs), std::move(rhs));
    }
    --depth_;
    return lhs;
  }

  Expr term() {
    Expr lhs = factor(true);
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const bool mul = advance().kind == Tok::Star;
      Expr rhs = factor(mul);
      lhs = mul ? Expr::mul(std::move(lhs), std::move(rhs)) : Expr::div(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Expr factor(bool allow_ratio) {
    if (peek().kind == Tok::Minus) {
      ++pos_;
      return Expr::neg(power(allow_ratio));
    }
    return power(allow_ratio);
  }

  Expr power(bool allow_ratio) {
    Expr base = atom(allow_ratio);
    if (peek().kind != Tok::Caret) return base;
    ++pos_;
    return Expr::pow(std::move(base), exponent());
  }

  // "^" rational: an integer, "-" integer, or a parenthesised signed literal.
  Rational exponent() {
    const bool parens = peek().kind == Tok::LParen;
    if (parens) ++pos_;
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      negative = true;
      ++pos_;
    }
    if (peek().kind != Tok::Integer && !(parens && peek().kind == Tok::Decimal)) {
      fail(parens ? "rational exponent" : "integer exponent (parenthesise fractions)");
    }
    Rational value = parens ? literal(true) : advance().value;
    if (parens) expect(Tok::RParen, "')' after exponent");
    return negative ? Rational(-value) : value;
  }

  // A numeric literal, folding adjacent "p/q" when allowed.
  Rational literal(bool allow_ratio) {
    const Token& first = advance();
    if (first.kind != Tok::Integer || !allow_ratio) return first.value;
    const Token& slash = peek();
    const Token& den = peek(1);
    if (slash.kind == Tok::Slash && slash.begin == first.end && den.kind == Tok::Integer &&
        den.begin == slash.end) {
      if (den.value == 0) throw ParseError(den.begin, "nonzero denominator", den.text);
      pos_ += 2;
      Rational v(first.value.get_num(), den.value.get_num());
      v.canonicalize();
      return v;
    }
    return first.value;
  }

  Expr atom(bool allow_ratio) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer:
      case Tok::Decimal:
        return Expr::number(literal(allow_ratio));
      case Tok::LParen: {
        ++pos_;
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        return identifier();
      default:
        fail("number, 'x', 'phi', function or '('");
    }
  }

  Expr identifier() {
    const Token name = advance();
    if (name.text == "x") return Expr::var();
    if (name.text == "phi") return Expr::phi();
    if (name.text == "sqrt" || name.text == "cbrt" || name.text == "ln") {
      expect(Tok::LParen, "'(' after function name");
      Expr arg = expr();
      expect(Tok::RParen, "')' (function takes one argument)");
      if (name.text == "sqrt") return Expr::sqrt(std::move(arg));
      if (name.text == "cbrt") return Expr::root(3, std::move(arg));
      return Expr::ln(std::move(arg));
    }
    if (name.text == "root") {
      expect(Tok::LParen, "'(' after function name");
      const Token& k = peek();
      if (k.kind != Tok::Integer) fail("integer root degree");
      if (k.value < 2 || !k.value.get_num().fits_uint_p()) {
        throw ParseError(k.begin, "integer root degree >= 2", k.text);
      }
      const unsigned degree = static_cast<unsigned>(k.value.get_num().get_ui());
      ++pos_;
      expect(Tok::Comma, "',' after root degree");
      Expr arg = expr();
      expect(Tok::RParen, "')' (root takes two arguments)");
      return Expr::root(degree, std::move(arg));
    }
    if (name.text == "log") {
      expect(Tok::LParen, "'(' after function name");
      const std::size_t base_pos = peek().begin;
      Expr base = expr();
      if (free_var_count(base) != 0) throw ParseError(base_pos, "constant logarithm base", "x");
      expect(Tok::Comma, "',' (log takes a base and an argument)");
      Expr arg = expr();
      expect(Tok::RParen, "')' (log takes two arguments)");
      return Expr::log(std::move(base), std::move(arg));
    }
    throw ParseError(name.begin, "'x', 'phi' or one of sqrt, cbrt, root, ln, log", name.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string print_rational_atom(const Rational& q) {
  if (q.get_den() == 1 && q >= 0) return q.get_str();
  return "(" + q.get_str() + ")";
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const NumberNode& n) { return print_rational_atom(n.value); },
          [](const VarNode&) { return std::string("x"); },
          [](const PhiNode&) { return std::string("phi"); },
          [](const NegNode& n) { return "(-" + print(n.arg) + ")"; },
          [](const BinaryNode& n) {
            const char* op = n.op == BinaryOp::Add   ? " + "
                             : n.op == BinaryOp::Sub ? " - "
                             : n.op == BinaryOp::Mul ? " * "
                                                     : " / ";
            return "(" + print(n.lhs) + op + print(n.rhs) + ")";
          },
          [](const PowNode& n) {
            return "(" + print(n.base) + "^" + print_rational_atom(n.exponent) + ")";
          },
          [](const SqrtNode& n) { return "sqrt(" + print(n.arg) + ")"; },
          [](const RootNode& n) {
            return "root(" + std::to_string(n.degree) + ", " + print(n.arg) + ")";
          },
          [](const LnNode& n) { return "ln(" + print(n.arg) + ")"; },
          [](const LogNode& n) { return "log(" + print(n.base) + ", " + print(n.arg) + ")"; },
      },
      e.node().v);
}

int free_var_count(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const NumberNode&) { return 0; },
          [](const VarNode&) { return 1; },
          [](const PhiNode&) { return 0; },
          [](const NegNode& n) { return free_var_count(n.arg); },
          [](const BinaryNode& n) { return std::max(free_var_count(n.lhs), free_var_count(n.rhs)); },
          [](const PowNode& n) { return free_var_count(n.base); },
          [](const SqrtNode& n) { return free_var_count(n.arg); },
          [](const RootNode& n) { return free_var_count(n.arg); },
          [](const LnNode& n) { return free_var_count(n.arg); },
          [](const LogNode& n) { return std::max(free_var_count(n.base), free_var_count(n.arg)); },
      },
      e.node().v);
}

}  // namespace complement
