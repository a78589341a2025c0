#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vc2d/jet.hpp"

namespace vc2d {

enum class UnaryOp : std::uint8_t { Neg, Sin, Cos, Exp, Ln, Sqrt, Tanh };
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Pow };

// One node of a parsed expression. Nodes live in an arena owned by the
// FieldExpr and refer to children by index; the root is the last node.
struct ExprNode {
  enum class Kind : std::uint8_t { Number, Variable, Unary, Binary };
  static constexpr std::uint32_t kNoOffset = 0xffffffffu;

  Kind kind = Kind::Number;
  UnaryOp uop = UnaryOp::Neg;
  BinaryOp bop = BinaryOp::Add;
  double number = 0.0;               // Kind::Number
  std::uint32_t var = 0;             // Kind::Variable: index into vars()
  std::uint32_t lhs = 0;             // child (unary operand, binary lhs)
  std::uint32_t rhs = 0;             // binary rhs
  std::uint32_t offset = kNoOffset;  // source position, kNoOffset if synthetic
};

// Immutable expression tree over an ordered list of variable names.
//
// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' number)?
//   base   := number | ident | ident '(' expr ')' | '(' expr ')' | '-' base
// Identifiers are [a-zA-Z_][a-zA-Z0-9_]*, whitespace is insignificant, and
// the callable names are neg, sin, cos, exp, ln, sqrt, tanh. Exponents are
// numeric literals, so powers always have a constant exponent.
class FieldExpr {
 public:
  static FieldExpr parse(std::string_view source, std::vector<std::string> vars);
  static FieldExpr number(double value, std::vector<std::string> vars);
  static FieldExpr variable(std::string_view name, std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<ExprNode>& nodes() const { return nodes_; }
  const std::string& source() const { return source_; }

  // value at the given variable assignment (values match vars() in order);
  // relaxed domain: sqrt(0) and 0^a with a > 0 are fine here
  double eval(std::span<const double> values) const;

  // value plus first and second partials via forward-mode AD; N must equal
  // vars().size() (instantiated for N = 1, 2, 3)
  template <int N>
  Jet<N> jet(std::span<const double> values) const;

  // reparseable text; parse(str()) reproduces the tree structurally
  std::string str() const;

  // replace every reference to vars()[var_index] by `replacement`
  // (same variable list required)
  FieldExpr substitute(std::uint32_t var_index, const FieldExpr& replacement) const;

  friend bool same_structure(const FieldExpr& a, const FieldExpr& b);

  friend FieldExpr operator+(const FieldExpr& a, const FieldExpr& b);
  friend FieldExpr operator-(const FieldExpr& a, const FieldExpr& b);
  friend FieldExpr operator*(const FieldExpr& a, const FieldExpr& b);
  friend FieldExpr operator/(const FieldExpr& a, const FieldExpr& b);
  friend FieldExpr operator-(const FieldExpr& a);
  friend FieldExpr apply(UnaryOp op, const FieldExpr& a);
  // exponent must be finite and >= 0 (negative powers spell as division)
  friend FieldExpr pow(const FieldExpr& base, double exponent);

 private:
  FieldExpr() = default;
  static FieldExpr binary(BinaryOp op, const FieldExpr& a, const FieldExpr& b);

  std::vector<ExprNode> nodes_;
  std::vector<std::string> vars_;
  std::string source_;  // original text when parsed, empty when built
};

inline FieldExpr sin(const FieldExpr& a) { return apply(UnaryOp::Sin, a); }
inline FieldExpr cos(const FieldExpr& a) { return apply(UnaryOp::Cos, a); }
inline FieldExpr exp(const FieldExpr& a) { return apply(UnaryOp::Exp, a); }
inline FieldExpr ln(const FieldExpr& a) { return apply(UnaryOp::Ln, a); }
inline FieldExpr sqrt(const FieldExpr& a) { return apply(UnaryOp::Sqrt, a); }
inline FieldExpr tanh(const FieldExpr& a) { return apply(UnaryOp::Tanh, a); }

}  // namespace vc2d
