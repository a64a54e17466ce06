// A small expression language over one variable x.
//
// Grammar, lowest to highest precedence:
//
//   expr   := term { ("+"|"-") term }
//   term   := factor { ("*"|"/") factor }
//   factor := ["-"] power
//   power  := atom [ "^" rational ]
//   atom   := NUMBER | "x" | "phi" | "(" expr ")" | FUNC "(" expr { "," expr } ")"
//   FUNC   := sqrt | cbrt | root | ln | log
//
// An integer literal written as "p/q" with no surrounding whitespace is read
// as one exact rational constant, except as the right operand of "/", so
// "x/2/3" still means (x/2)/3. Fractional exponents must be parenthesised:
// "x^(1/2)".
#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace complement {

using Rational = mpq_class;

struct ExprNode;

class Expr {
 public:
  static Expr number(const Rational& value);
  static Expr number(long value) { return number(Rational(value)); }
  static Expr var();
  static Expr phi();
  static Expr neg(Expr arg);
  static Expr add(Expr lhs, Expr rhs);
  static Expr sub(Expr lhs, Expr rhs);
  static Expr mul(Expr lhs, Expr rhs);
  static Expr div(Expr lhs, Expr rhs);
  static Expr pow(Expr base, const Rational& exponent);
  static Expr sqrt(Expr arg);
  static Expr root(unsigned degree, Expr arg);
  static Expr ln(Expr arg);
  static Expr log(Expr base, Expr arg);

  const ExprNode& node() const { return *node_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  friend struct ExprFactory;
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

enum class BinaryOp { Add, Sub, Mul, Div };

// Nonnegative; negative constants are spelled Neg(Number).
struct NumberNode {
  Rational value;
  bool operator==(const NumberNode& o) const { return value == o.value; }
};
struct VarNode {
  bool operator==(const VarNode&) const = default;
};
struct PhiNode {
  bool operator==(const PhiNode&) const = default;
};
struct NegNode {
  Expr arg;
  bool operator==(const NegNode&) const = default;
};
struct BinaryNode {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
  bool operator==(const BinaryNode&) const = default;
};
struct PowNode {
  Expr base;
  Rational exponent;
  bool operator==(const PowNode& o) const { return base == o.base && exponent == o.exponent; }
};
struct SqrtNode {
  Expr arg;
  bool operator==(const SqrtNode&) const = default;
};
struct RootNode {
  unsigned degree;  // >= 2
  Expr arg;
  bool operator==(const RootNode&) const = default;
};
struct LnNode {
  Expr arg;
  bool operator==(const LnNode&) const = default;
};
// `base` never mentions x.
struct LogNode {
  Expr base;
  Expr arg;
  bool operator==(const LogNode&) const = default;
};

struct ExprNode {
  std::variant<NumberNode, VarNode, PhiNode, NegNode, BinaryNode, PowNode, SqrtNode, RootNode,
               LnNode, LogNode>
      v;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

// Throws ParseError on any lexical, syntactic, arity or semantic violation.
Expr parse(std::string_view text);

// Fully parenthesised canonical text; parse(print(e)) == e.
std::string print(const Expr& e);

int free_var_count(const Expr& e);

}  // namespace complement
