#pragma once

// Expression grammar for polynomials and points (LL(1), explicit '*'):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' UINT)?
//   primary := NUMBER | 'I' | 'J' | 'K' | IDENT | '(' expr ')'
//   point   := '(' expr (',' expr)* ')'
//
// IDENT is a variable x1..xn (aliases x, y, z) or, over Q(al,be,t), one of
// the scalars al, be, t. Division is only by nonzero scalar constants.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnull/errors.hpp"
#include "qnull/poly.hpp"

namespace qnull {

struct Ast {
  enum class Kind { Number, Unit, Ident, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  std::string text;  // literal text, unit letter or identifier
  int exponent = 0;  // Pow only
  std::size_t pos = 0;
  std::vector<std::unique_ptr<Ast>> kids;

  /// Fully parenthesized rendering, used for debugging and tests.
  std::string to_string() const;
};

std::unique_ptr<Ast> parse_ast(std::string_view src);
/// Parses "(e1, e2, ...)" into one AST per coordinate.
std::vector<std::unique_ptr<Ast>> parse_point_ast(std::string_view src);

/// Resolves an identifier to a 0-based variable index for arity n, or nullopt
/// when it is not a variable name. Throws ArityError for x_k with k > n.
std::optional<int> variable_index(const std::string& name, int n, std::size_t pos);

// Scalar literal and identifier hooks per field.
Rat parse_number_rat(const std::string& text, std::size_t pos);
inline Rat scalar_from_number(const std::string& text, std::size_t pos, const Rat*) { return parse_number_rat(text, pos); }
double scalar_from_number(const std::string& text, std::size_t pos, const double*);
inline RatFunc scalar_from_number(const std::string& text, std::size_t pos, const RatFunc*) {
  return RatFunc(parse_number_rat(text, pos));
}
inline std::optional<Rat> scalar_from_ident(const std::string&, const Rat*) { return std::nullopt; }
inline std::optional<double> scalar_from_ident(const std::string&, const double*) { return std::nullopt; }
std::optional<RatFunc> scalar_from_ident(const std::string& name, const RatFunc*);

template <class S>
QPoly<S> lower_ast(const Ast& node, int n, const AlgebraPtr<S>& alg) {
  using Q = Quaternion<S>;
  auto constant = [&](const Q& q) { return QPoly<S>::constant(n, q.with_algebra(alg)); };
  switch (node.kind) {
    case Ast::Kind::Number:
      return constant(Q::scalar(scalar_from_number(node.text, node.pos, static_cast<const S*>(nullptr))));
    case Ast::Kind::Unit:
      if (node.text == "I") return constant(Q::unit_i(alg));
      if (node.text == "J") return constant(Q::unit_j(alg));
      return constant(Q::unit_k(alg));
    case Ast::Kind::Ident: {
      if (auto s = scalar_from_ident(node.text, static_cast<const S*>(nullptr))) return constant(Q::scalar(*s));
      auto idx = variable_index(node.text, n, node.pos);
      if (!idx) throw ArityError("unknown identifier '" + node.text + "' at " + std::to_string(node.pos));
      return QPoly<S>::variable(n, *idx, alg);
    }
    case Ast::Kind::Neg:
      return -lower_ast<S>(*node.kids[0], n, alg);
    case Ast::Kind::Add:
      return lower_ast<S>(*node.kids[0], n, alg) + lower_ast<S>(*node.kids[1], n, alg);
    case Ast::Kind::Sub:
      return lower_ast<S>(*node.kids[0], n, alg) - lower_ast<S>(*node.kids[1], n, alg);
    case Ast::Kind::Mul:
      return lower_ast<S>(*node.kids[0], n, alg) * lower_ast<S>(*node.kids[1], n, alg);
    case Ast::Kind::Div: {
      QPoly<S> num = lower_ast<S>(*node.kids[0], n, alg);
      QPoly<S> den = lower_ast<S>(*node.kids[1], n, alg);
      bool scalar_const = den.terms().size() == 1 && den.terms().begin()->first == Monomial(n, 0) &&
                          den.terms().begin()->second.is_scalar();
      if (!scalar_const) throw SyntaxError("division only by a nonzero scalar constant", node.kids[1]->pos);
      S inv = inverse(den.terms().begin()->second.real_part());
      QPoly<S> out(n, alg);
      for (const auto& [e, c] : num.terms()) out.add_term(e, c.scaled(inv));
      return out;
    }
    case Ast::Kind::Pow: {
      QPoly<S> base = lower_ast<S>(*node.kids[0], n, alg);
      QPoly<S> acc = QPoly<S>::constant(n, Q::scalar(S(1), alg));
      for (int k = 0; k < node.exponent; ++k) acc = acc * base;
      return acc;
    }
  }
  throw Error("unreachable AST kind");
}

/// Left-coefficient normal form of the expression; quaternion literals are
/// collected in written order since the variables are central.
template <class S>
QPoly<S> parse_poly(std::string_view src, int n, const AlgebraPtr<S>& alg = nullptr) {
  return lower_ast<S>(*parse_ast(src), n, alg);
}

template <class S>
Quaternion<S> parse_quaternion(std::string_view src, const AlgebraPtr<S>& alg = nullptr) {
  QPoly<S> p = parse_poly<S>(src, 0, alg);
  if (p.is_zero()) return Quaternion<S>::scalar(S(0), alg);
  return p.terms().begin()->second.with_algebra(alg);
}

template <class S>
QTuple<S> parse_point(std::string_view src, const AlgebraPtr<S>& alg = nullptr) {
  QTuple<S> out;
  for (const auto& ast : parse_point_ast(src)) {
    QPoly<S> p = lower_ast<S>(*ast, 0, alg);
    out.push_back(p.is_zero() ? Quaternion<S>::scalar(S(0), alg) : p.terms().begin()->second.with_algebra(alg));
  }
  return out;
}

/// Largest variable index referenced (x1.. / x,y,z), 0 when none.
int max_variable_index(const Ast& node);

}  // namespace qnull
