#include "vc2d/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "vc2d/errors.hpp"

namespace vc2d {
namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind = Kind::End;
  std::size_t offset = 0;
  std::string_view text;
  double value = 0.0;  // Kind::Number
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Token t;
    t.offset = pos_;
    if (pos_ >= src_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': t.kind = Token::Kind::Plus; break;
      case '-': t.kind = Token::Kind::Minus; break;
      case '*': t.kind = Token::Kind::Star; break;
      case '/': t.kind = Token::Kind::Slash; break;
      case '^': t.kind = Token::Kind::Caret; break;
      case '(': t.kind = Token::Kind::LParen; break;
      case ')': t.kind = Token::Kind::RParen; break;
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    t.text = src_.substr(pos_, 1);
    ++pos_;
    return t;
  }

 private:
  Token lex_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_ + 1;
      if (mark < src_.size() && (src_[mark] == '+' || src_[mark] == '-')) ++mark;
      if (mark < src_.size() && std::isdigit(static_cast<unsigned char>(src_[mark]))) {
        pos_ = mark;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    Token t;
    t.kind = Token::Kind::Number;
    t.offset = start;
    t.text = src_.substr(start, pos_ - start);
    auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
    if (res.ec != std::errc{}) throw ParseError("malformed numeric literal", start);
    return t;
  }

  Token lex_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    Token t;
    t.kind = Token::Kind::Ident;
    t.offset = start;
    t.text = src_.substr(start, pos_ - start);
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool lookup_function(std::string_view name, UnaryOp& op) {
  if (name == "neg") op = UnaryOp::Neg;
  else if (name == "sin") op = UnaryOp::Sin;
  else if (name == "cos") op = UnaryOp::Cos;
  else if (name == "exp") op = UnaryOp::Exp;
  else if (name == "ln") op = UnaryOp::Ln;
  else if (name == "sqrt") op = UnaryOp::Sqrt;
  else if (name == "tanh") op = UnaryOp::Tanh;
  else return false;
  return true;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars, std::vector<ExprNode>& out)
      : lexer_(src), vars_(vars), nodes_(out) {
    advance();
  }

  std::uint32_t run() {
    const std::uint32_t root = parse_expr();
    if (tok_.kind != Token::Kind::End)
      throw ParseError("expected end of input or an operator", tok_.offset);
    return root;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  std::uint32_t add(ExprNode n) {
    nodes_.push_back(n);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::uint32_t parse_expr() {
    std::uint32_t lhs = parse_term();
    while (tok_.kind == Token::Kind::Plus || tok_.kind == Token::Kind::Minus) {
      const bool plus = tok_.kind == Token::Kind::Plus;
      const std::uint32_t off = static_cast<std::uint32_t>(tok_.offset);
      advance();
      const std::uint32_t rhs = parse_term();
      ExprNode n;
      n.kind = ExprNode::Kind::Binary;
      n.bop = plus ? BinaryOp::Add : BinaryOp::Sub;
      n.lhs = lhs;
      n.rhs = rhs;
      n.offset = off;
      lhs = add(n);
    }
    return lhs;
  }

  std::uint32_t parse_term() {
    std::uint32_t lhs = parse_factor();
    while (tok_.kind == Token::Kind::Star || tok_.kind == Token::Kind::Slash) {
      const bool star = tok_.kind == Token::Kind::Star;
      const std::uint32_t off = static_cast<std::uint32_t>(tok_.offset);
      advance();
      const std::uint32_t rhs = parse_factor();
      ExprNode n;
      n.kind = ExprNode::Kind::Binary;
      n.bop = star ? BinaryOp::Mul : BinaryOp::Div;
      n.lhs = lhs;
      n.rhs = rhs;
      n.offset = off;
      lhs = add(n);
    }
    return lhs;
  }

  std::uint32_t parse_factor() {
    std::uint32_t base = parse_base();
    if (tok_.kind == Token::Kind::Caret) {
      const std::uint32_t off = static_cast<std::uint32_t>(tok_.offset);
      advance();
      if (tok_.kind != Token::Kind::Number)
        throw ParseError("expected a numeric exponent after '^'", tok_.offset);
      ExprNode num;
      num.kind = ExprNode::Kind::Number;
      num.number = tok_.value;
      num.offset = static_cast<std::uint32_t>(tok_.offset);
      const std::uint32_t rhs = add(num);
      advance();
      ExprNode n;
      n.kind = ExprNode::Kind::Binary;
      n.bop = BinaryOp::Pow;
      n.lhs = base;
      n.rhs = rhs;
      n.offset = off;
      base = add(n);
    }
    return base;
  }

  std::uint32_t parse_base() {
    switch (tok_.kind) {
      case Token::Kind::Number: {
        ExprNode n;
        n.kind = ExprNode::Kind::Number;
        n.number = tok_.value;
        n.offset = static_cast<std::uint32_t>(tok_.offset);
        advance();
        return add(n);
      }
      case Token::Kind::Ident: {
        const Token ident = tok_;
        advance();
        if (tok_.kind == Token::Kind::LParen) {
          UnaryOp op;
          if (!lookup_function(ident.text, op))
            throw ParseError("unknown function '" + std::string(ident.text) + "'", ident.offset);
          advance();
          const std::uint32_t arg = parse_expr();
          expect_rparen();
          ExprNode n;
          n.kind = ExprNode::Kind::Unary;
          n.uop = op;
          n.lhs = arg;
          n.offset = static_cast<std::uint32_t>(ident.offset);
          return add(n);
        }
        const auto it = std::find(vars_.begin(), vars_.end(), std::string(ident.text));
        if (it == vars_.end())
          throw UnknownVariableError("unknown variable '" + std::string(ident.text) + "'",
                                     ident.offset);
        ExprNode n;
        n.kind = ExprNode::Kind::Variable;
        n.var = static_cast<std::uint32_t>(it - vars_.begin());
        n.offset = static_cast<std::uint32_t>(ident.offset);
        return add(n);
      }
      case Token::Kind::LParen: {
        advance();
        const std::uint32_t inner = parse_expr();
        expect_rparen();
        return inner;
      }
      case Token::Kind::Minus: {
        const std::uint32_t off = static_cast<std::uint32_t>(tok_.offset);
        advance();
        const std::uint32_t child = parse_base();
        // fold unary minus on literals so "-2" prints and reparses as itself
        if (nodes_[child].kind == ExprNode::Kind::Number &&
            child == nodes_.size() - 1) {
          nodes_[child].number = -nodes_[child].number;
          nodes_[child].offset = off;
          return child;
        }
        ExprNode n;
        n.kind = ExprNode::Kind::Unary;
        n.uop = UnaryOp::Neg;
        n.lhs = child;
        n.offset = off;
        return add(n);
      }
      default:
        throw ParseError("expected a number, variable, function or '('", tok_.offset);
    }
  }

  void expect_rparen() {
    if (tok_.kind != Token::Kind::RParen) throw ParseError("expected ')'", tok_.offset);
    advance();
  }

  Lexer lexer_;
  Token tok_;
  const std::vector<std::string>& vars_;
  std::vector<ExprNode>& nodes_;
};

std::string describe_position(const ExprNode& n) {
  if (n.offset == ExprNode::kNoOffset) return "";
  return " (at offset " + std::to_string(n.offset) + ")";
}

[[noreturn]] void throw_domain(const std::string& what, const ExprNode& n) {
  throw DomainError(what + describe_position(n));
}

bool integral_exponent(double e, long long& n) {
  if (!(std::abs(e) < 9.0e15)) return false;
  const double r = std::nearbyint(e);
  if (r != e) return false;
  n = static_cast<long long>(r);
  return true;
}

// Core evaluator. Domain checks are done on values before the derivative
// rules run; for N >= 1 a point where the value exists but the derivative
// does not (sqrt at 0) is rejected as non-differentiable.
template <int N>
Jet<N> eval_node(const std::vector<ExprNode>& nodes, std::uint32_t idx,
                 std::span<const Jet<N>> vars) {
  const ExprNode& n = nodes[idx];
  switch (n.kind) {
    case ExprNode::Kind::Number:
      return Jet<N>::constant(n.number);
    case ExprNode::Kind::Variable:
      return vars[n.var];
    case ExprNode::Kind::Unary: {
      const Jet<N> a = eval_node<N>(nodes, n.lhs, vars);
      switch (n.uop) {
        case UnaryOp::Neg:
          return -a;
        case UnaryOp::Sin:
          return chain(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v));
        case UnaryOp::Cos:
          return chain(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v));
        case UnaryOp::Exp: {
          const double e = std::exp(a.v);
          return chain(a, e, e, e);
        }
        case UnaryOp::Ln:
          if (!(a.v > 0.0)) throw_domain("ln: argument must be positive", n);
          return chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
        case UnaryOp::Sqrt: {
          if (a.v < 0.0) throw_domain("sqrt: argument must be non-negative", n);
          if constexpr (N == 0) {
            return Jet<N>::constant(std::sqrt(a.v));
          } else {
            if (a.v == 0.0)
              throw NonDifferentiableError("sqrt: not differentiable at 0" +
                                           describe_position(n));
            const double s = std::sqrt(a.v);
            return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
          }
        }
        case UnaryOp::Tanh: {
          const double t = std::tanh(a.v);
          const double sech2 = 1.0 - t * t;
          return chain(a, t, sech2, -2.0 * t * sech2);
        }
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      if (n.bop == BinaryOp::Pow) {
        const Jet<N> base = eval_node<N>(nodes, n.lhs, vars);
        const double e = nodes[n.rhs].number;  // parser guarantees a literal
        long long k = 0;
        if (integral_exponent(e, k)) {
          if (k >= 0) return pow_int(base, static_cast<unsigned long long>(k));
          if (base.v == 0.0) throw_domain("pow: zero base with negative exponent", n);
          return reciprocal(pow_int(base, static_cast<unsigned long long>(-k)));
        }
        if constexpr (N == 0) {
          if (base.v < 0.0)
            throw_domain("pow: negative base with non-integer exponent", n);
          if (base.v == 0.0) {
            if (e > 0.0) return Jet<N>::constant(0.0);
            throw_domain("pow: zero base with non-positive exponent", n);
          }
          return Jet<N>::constant(std::pow(base.v, e));
        } else {
          if (!(base.v > 0.0))
            throw_domain("pow: non-integer exponent needs a positive base", n);
          const double p = std::pow(base.v, e);
          return chain(base, p, e * std::pow(base.v, e - 1.0),
                       e * (e - 1.0) * std::pow(base.v, e - 2.0));
        }
      }
      const Jet<N> a = eval_node<N>(nodes, n.lhs, vars);
      const Jet<N> b = eval_node<N>(nodes, n.rhs, vars);
      switch (n.bop) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Div:
          if (b.v == 0.0) throw_domain("division by zero", n);
          return a / b;
        case BinaryOp::Pow: break;  // handled above
      }
      break;
    }
  }
  throw std::logic_error("corrupt expression node");
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

const char* function_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "neg";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Tanh: return "tanh";
  }
  return "?";
}

// precedence levels used by the printer: additive 1, multiplicative 2,
// unary minus and negative literals 3, power 4, atoms 5
int print_level(const std::vector<ExprNode>& nodes, std::uint32_t idx) {
  const ExprNode& n = nodes[idx];
  switch (n.kind) {
    case ExprNode::Kind::Number:
      return n.number < 0.0 ? 3 : 5;
    case ExprNode::Kind::Variable:
      return 5;
    case ExprNode::Kind::Unary:
      return n.uop == UnaryOp::Neg ? 3 : 5;
    case ExprNode::Kind::Binary:
      switch (n.bop) {
        case BinaryOp::Add:
        case BinaryOp::Sub: return 1;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 2;
        case BinaryOp::Pow: return 4;
      }
  }
  return 5;
}

void print_node(std::string& out, const std::vector<ExprNode>& nodes,
                const std::vector<std::string>& vars, std::uint32_t idx, int min_level) {
  const ExprNode& n = nodes[idx];
  const bool parens = print_level(nodes, idx) < min_level;
  if (parens) out += '(';
  switch (n.kind) {
    case ExprNode::Kind::Number:
      out += format_number(n.number);
      break;
    case ExprNode::Kind::Variable:
      out += vars[n.var];
      break;
    case ExprNode::Kind::Unary:
      if (n.uop == UnaryOp::Neg) {
        out += '-';
        print_node(out, nodes, vars, n.lhs, 5);
      } else {
        out += function_name(n.uop);
        out += '(';
        print_node(out, nodes, vars, n.lhs, 1);
        out += ')';
      }
      break;
    case ExprNode::Kind::Binary:
      switch (n.bop) {
        case BinaryOp::Add:
          print_node(out, nodes, vars, n.lhs, 1);
          out += " + ";
          print_node(out, nodes, vars, n.rhs, 2);
          break;
        case BinaryOp::Sub:
          print_node(out, nodes, vars, n.lhs, 1);
          out += " - ";
          print_node(out, nodes, vars, n.rhs, 2);
          break;
        case BinaryOp::Mul:
          print_node(out, nodes, vars, n.lhs, 2);
          out += " * ";
          print_node(out, nodes, vars, n.rhs, 3);
          break;
        case BinaryOp::Div:
          print_node(out, nodes, vars, n.lhs, 2);
          out += " / ";
          print_node(out, nodes, vars, n.rhs, 3);
          break;
        case BinaryOp::Pow:
          print_node(out, nodes, vars, n.lhs, 5);
          out += '^';
          out += format_number(nodes[n.rhs].number);
          break;
      }
      break;
  }
  if (parens) out += ')';
}

bool nodes_equal(const std::vector<ExprNode>& an, std::uint32_t ai,
                 const std::vector<ExprNode>& bn, std::uint32_t bi) {
  const ExprNode& a = an[ai];
  const ExprNode& b = bn[bi];
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprNode::Kind::Number:
      return a.number == b.number;
    case ExprNode::Kind::Variable:
      return a.var == b.var;
    case ExprNode::Kind::Unary:
      return a.uop == b.uop && nodes_equal(an, a.lhs, bn, b.lhs);
    case ExprNode::Kind::Binary:
      return a.bop == b.bop && nodes_equal(an, a.lhs, bn, b.lhs) &&
             nodes_equal(an, a.rhs, bn, b.rhs);
  }
  return false;
}

void check_same_vars(const FieldExpr& a, const FieldExpr& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("combined expressions must share a variable list");
}

std::uint32_t append_shifted(std::vector<ExprNode>& dst, const std::vector<ExprNode>& src) {
  const std::uint32_t shift = static_cast<std::uint32_t>(dst.size());
  for (ExprNode n : src) {
    if (n.kind == ExprNode::Kind::Unary) {
      n.lhs += shift;
    } else if (n.kind == ExprNode::Kind::Binary) {
      n.lhs += shift;
      n.rhs += shift;
    }
    dst.push_back(n);
  }
  return static_cast<std::uint32_t>(dst.size() - 1);  // root of src copy
}

// subtree copy used by substitute(); returns new root index
std::uint32_t copy_subst(std::vector<ExprNode>& dst, const std::vector<ExprNode>& src,
                         std::uint32_t idx, std::uint32_t var_index,
                         const std::vector<ExprNode>& replacement) {
  const ExprNode& n = src[idx];
  if (n.kind == ExprNode::Kind::Variable && n.var == var_index)
    return append_shifted(dst, replacement);
  ExprNode out = n;
  if (n.kind == ExprNode::Kind::Unary) {
    out.lhs = copy_subst(dst, src, n.lhs, var_index, replacement);
  } else if (n.kind == ExprNode::Kind::Binary) {
    out.lhs = copy_subst(dst, src, n.lhs, var_index, replacement);
    out.rhs = copy_subst(dst, src, n.rhs, var_index, replacement);
  }
  dst.push_back(out);
  return static_cast<std::uint32_t>(dst.size() - 1);
}

}  // namespace

FieldExpr FieldExpr::parse(std::string_view source, std::vector<std::string> vars) {
  FieldExpr e;
  e.vars_ = std::move(vars);
  e.source_ = std::string(source);
  Parser parser(source, e.vars_, e.nodes_);
  const std::uint32_t root = parser.run();
  // move the root to the arena tail so "last node is root" holds uniformly
  if (root != e.nodes_.size() - 1) {
    e.nodes_.push_back(e.nodes_[root]);
  }
  return e;
}

FieldExpr FieldExpr::number(double value, std::vector<std::string> vars) {
  FieldExpr e;
  e.vars_ = std::move(vars);
  ExprNode n;
  n.kind = ExprNode::Kind::Number;
  n.number = value;
  e.nodes_.push_back(n);
  return e;
}

FieldExpr FieldExpr::variable(std::string_view name, std::vector<std::string> vars) {
  FieldExpr e;
  e.vars_ = std::move(vars);
  const auto it = std::find(e.vars_.begin(), e.vars_.end(), std::string(name));
  if (it == e.vars_.end())
    throw std::invalid_argument("variable '" + std::string(name) + "' is not in the list");
  ExprNode n;
  n.kind = ExprNode::Kind::Variable;
  n.var = static_cast<std::uint32_t>(it - e.vars_.begin());
  e.nodes_.push_back(n);
  return e;
}

double FieldExpr::eval(std::span<const double> values) const {
  if (values.size() != vars_.size())
    throw std::invalid_argument("eval: wrong number of variable values");
  constexpr std::size_t kMaxVars = 8;
  if (values.size() > kMaxVars) throw std::invalid_argument("eval: too many variables");
  std::array<Jet<0>, kMaxVars> seeds{};
  for (std::size_t i = 0; i < values.size(); ++i) seeds[i].v = values[i];
  return eval_node<0>(nodes_, static_cast<std::uint32_t>(nodes_.size() - 1),
                      std::span<const Jet<0>>(seeds.data(), values.size())).v;
}

template <int N>
Jet<N> FieldExpr::jet(std::span<const double> values) const {
  if (values.size() != vars_.size() || vars_.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("jet: variable count mismatch");
  std::array<Jet<N>, N> seeds;
  for (int i = 0; i < N; ++i) seeds[i] = Jet<N>::variable(values[i], i);
  return eval_node<N>(nodes_, static_cast<std::uint32_t>(nodes_.size() - 1),
                      std::span<const Jet<N>>(seeds));
}

template Jet<1> FieldExpr::jet<1>(std::span<const double>) const;
template Jet<2> FieldExpr::jet<2>(std::span<const double>) const;
template Jet<3> FieldExpr::jet<3>(std::span<const double>) const;

std::string FieldExpr::str() const {
  std::string out;
  print_node(out, nodes_, vars_, static_cast<std::uint32_t>(nodes_.size() - 1), 1);
  return out;
}

FieldExpr FieldExpr::substitute(std::uint32_t var_index, const FieldExpr& replacement) const {
  if (vars_ != replacement.vars_)
    throw std::invalid_argument("substitute: variable lists differ");
  if (var_index >= vars_.size()) throw std::invalid_argument("substitute: bad variable index");
  FieldExpr e;
  e.vars_ = vars_;
  copy_subst(e.nodes_, nodes_, static_cast<std::uint32_t>(nodes_.size() - 1), var_index,
             replacement.nodes_);
  return e;
}

bool same_structure(const FieldExpr& a, const FieldExpr& b) {
  if (a.vars_ != b.vars_) return false;
  return nodes_equal(a.nodes_, static_cast<std::uint32_t>(a.nodes_.size() - 1), b.nodes_,
                     static_cast<std::uint32_t>(b.nodes_.size() - 1));
}

FieldExpr FieldExpr::binary(BinaryOp op, const FieldExpr& a, const FieldExpr& b) {
  check_same_vars(a, b);
  FieldExpr e = a;
  const std::uint32_t lhs = static_cast<std::uint32_t>(e.nodes_.size() - 1);
  const std::uint32_t rhs = append_shifted(e.nodes_, b.nodes_);
  ExprNode n;
  n.kind = ExprNode::Kind::Binary;
  n.bop = op;
  n.lhs = lhs;
  n.rhs = rhs;
  e.nodes_.push_back(n);
  e.source_.clear();
  return e;
}

FieldExpr operator+(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr::binary(BinaryOp::Add, a, b);
}
FieldExpr operator-(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr::binary(BinaryOp::Sub, a, b);
}
FieldExpr operator*(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr::binary(BinaryOp::Mul, a, b);
}
FieldExpr operator/(const FieldExpr& a, const FieldExpr& b) {
  return FieldExpr::binary(BinaryOp::Div, a, b);
}

FieldExpr operator-(const FieldExpr& a) { return apply(UnaryOp::Neg, a); }

FieldExpr apply(UnaryOp op, const FieldExpr& a) {
  FieldExpr e = a;
  ExprNode n;
  n.kind = ExprNode::Kind::Unary;
  n.uop = op;
  n.lhs = static_cast<std::uint32_t>(e.nodes_.size() - 1);
  e.nodes_.push_back(n);
  e.source_.clear();
  return e;
}

FieldExpr pow(const FieldExpr& base, double exponent) {
  if (!(exponent >= 0.0) || !std::isfinite(exponent))
    throw std::invalid_argument("pow: exponent must be finite and non-negative");
  FieldExpr e = base;
  ExprNode num;
  num.kind = ExprNode::Kind::Number;
  num.number = exponent;
  const std::uint32_t lhs = static_cast<std::uint32_t>(e.nodes_.size() - 1);
  e.nodes_.push_back(num);
  ExprNode n;
  n.kind = ExprNode::Kind::Binary;
  n.bop = BinaryOp::Pow;
  n.lhs = lhs;
  n.rhs = static_cast<std::uint32_t>(e.nodes_.size() - 1);
  e.nodes_.push_back(n);
  e.source_.clear();
  return e;
}

}  // namespace vc2d
