#include "qnull/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace qnull {

namespace {

struct Token {
  enum class Type { Number, Ident, Op, End };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }
  bool accept_op(char c) {
    if (cur_.type == Token::Type::Op && cur_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect_op(char c) {
    if (!accept_op(c)) throw SyntaxError(std::string("expected '") + c + "'", cur_.pos);
  }

 private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= src_.size()) {
      cur_ = {Token::Type::End, "", start};
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[i_])) || src_[i_] == '.')) ++i_;
      if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
        std::size_t j = i_ + 1;
        if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
        if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
          i_ = j;
          while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
        }
      }
      cur_ = {Token::Type::Number, std::string(src_.substr(start, i_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) ++i_;
      cur_ = {Token::Type::Ident, std::string(src_.substr(start, i_ - start)), start};
      return;
    }
    static const std::string_view kOps = "+-*/^(),";
    if (kOps.find(c) == std::string_view::npos) throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    ++i_;
    cur_ = {Token::Type::Op, std::string(1, c), start};
  }

  std::string_view src_;
  std::size_t i_ = 0;
  Token cur_{Token::Type::End, "", 0};
};

std::unique_ptr<Ast> make(Ast::Kind k, std::size_t pos, std::string text = {}) {
  auto a = std::make_unique<Ast>();
  a->kind = k;
  a->pos = pos;
  a->text = std::move(text);
  return a;
}

std::unique_ptr<Ast> binary(Ast::Kind k, std::size_t pos, std::unique_ptr<Ast> l, std::unique_ptr<Ast> r) {
  auto a = make(k, pos);
  a->kids.push_back(std::move(l));
  a->kids.push_back(std::move(r));
  return a;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  std::unique_ptr<Ast> expr() {
    auto lhs = term();
    while (true) {
      std::size_t pos = lex_.peek().pos;
      if (lex_.accept_op('+')) {
        lhs = binary(Ast::Kind::Add, pos, std::move(lhs), term());
      } else if (lex_.accept_op('-')) {
        lhs = binary(Ast::Kind::Sub, pos, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Ast> term() {
    auto lhs = unary();
    while (true) {
      std::size_t pos = lex_.peek().pos;
      if (lex_.accept_op('*')) {
        lhs = binary(Ast::Kind::Mul, pos, std::move(lhs), unary());
      } else if (lex_.accept_op('/')) {
        lhs = binary(Ast::Kind::Div, pos, std::move(lhs), unary());
      } else {
        const Token& t = lex_.peek();
        if (t.type == Token::Type::Number || t.type == Token::Type::Ident || (t.type == Token::Type::Op && t.text == "("))
          throw SyntaxError("implicit multiplication is not allowed; use '*'", t.pos);
        return lhs;
      }
    }
  }

  std::unique_ptr<Ast> unary() {
    std::size_t pos = lex_.peek().pos;
    if (lex_.accept_op('-')) {
      auto a = make(Ast::Kind::Neg, pos);
      a->kids.push_back(unary());
      return a;
    }
    return power();
  }

  std::unique_ptr<Ast> power() {
    auto base = primary();
    std::size_t pos = lex_.peek().pos;
    if (!lex_.accept_op('^')) return base;
    const Token& t = lex_.peek();
    if (t.type != Token::Type::Number || t.text.find_first_not_of("0123456789") != std::string::npos)
      throw SyntaxError("exponent must be a non-negative integer", t.pos);
    auto a = make(Ast::Kind::Pow, pos);
    a->exponent = std::stoi(lex_.take().text);
    a->kids.push_back(std::move(base));
    return a;
  }

  std::unique_ptr<Ast> primary() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Number) {
      Token tok = lex_.take();
      return make(Ast::Kind::Number, tok.pos, tok.text);
    }
    if (t.type == Token::Type::Ident) {
      Token tok = lex_.take();
      if (tok.text == "I" || tok.text == "J" || tok.text == "K") return make(Ast::Kind::Unit, tok.pos, tok.text);
      return make(Ast::Kind::Ident, tok.pos, tok.text);
    }
    if (lex_.accept_op('(')) {
      auto inner = expr();
      lex_.expect_op(')');
      return inner;
    }
    throw SyntaxError(t.type == Token::Type::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
  }

  void expect_end() {
    if (lex_.peek().type != Token::Type::End) throw SyntaxError("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
  }

  Lexer& lexer() { return lex_; }

 private:
  Lexer lex_;
};

}  // namespace

std::string Ast::to_string() const {
  switch (kind) {
    case Kind::Number:
    case Kind::Unit:
    case Kind::Ident: return text;
    case Kind::Neg: return "(-" + kids[0]->to_string() + ")";
    case Kind::Pow: return "(" + kids[0]->to_string() + "^" + std::to_string(exponent) + ")";
    case Kind::Add: return "(" + kids[0]->to_string() + " + " + kids[1]->to_string() + ")";
    case Kind::Sub: return "(" + kids[0]->to_string() + " - " + kids[1]->to_string() + ")";
    case Kind::Mul: return "(" + kids[0]->to_string() + " * " + kids[1]->to_string() + ")";
    case Kind::Div: return "(" + kids[0]->to_string() + " / " + kids[1]->to_string() + ")";
  }
  return "?";
}

std::unique_ptr<Ast> parse_ast(std::string_view src) {
  Parser p(src);
  auto a = p.expr();
  p.expect_end();
  return a;
}

std::vector<std::unique_ptr<Ast>> parse_point_ast(std::string_view src) {
  Parser p(src);
  auto& lex = p.lexer();
  lex.expect_op('(');
  std::vector<std::unique_ptr<Ast>> out;
  out.push_back(p.expr());
  while (lex.accept_op(',')) out.push_back(p.expr());
  lex.expect_op(')');
  p.expect_end();
  return out;
}

std::optional<int> variable_index(const std::string& name, int n, std::size_t pos) {
  int idx = -1;
  if (name == "x") idx = 0;
  else if (name == "y") idx = 1;
  else if (name == "z") idx = 2;
  else if (name.size() >= 2 && name[0] == 'x' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    idx = std::stoi(name.substr(1)) - 1;
    if (idx < 0) throw ArityError("variables are numbered from x1 (at " + std::to_string(pos) + ")");
  }
  if (idx < 0) return std::nullopt;
  if (idx >= n) {
    throw ArityError("variable '" + name + "' at " + std::to_string(pos) + " exceeds arity " + std::to_string(n));
  }
  return idx;
}

Rat parse_number_rat(const std::string& text, std::size_t pos) {
  std::string mant = text;
  long exp10 = 0;
  if (auto e = mant.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(mant.substr(e + 1));
    mant = mant.substr(0, e);
  }
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    std::string frac = mant.substr(dot + 1);
    if (frac.find('.') != std::string::npos) throw SyntaxError("malformed number '" + text + "'", pos);
    exp10 -= static_cast<long>(frac.size());
    mant = mant.substr(0, dot) + frac;
  }
  if (mant.empty()) throw SyntaxError("malformed number '" + text + "'", pos);
  mpz_class m(mant, 10), p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  return exp10 < 0 ? Rat(mpq_class(m, p10)) : Rat(mpz_class(m * p10));
}

double scalar_from_number(const std::string& text, std::size_t pos, const double*) {
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw SyntaxError("malformed number '" + text + "'", pos);
  return v;
}

std::optional<RatFunc> scalar_from_ident(const std::string& name, const RatFunc*) {
  for (int v = 0; v < kFuncVars; ++v)
    if (name == kFuncVarNames[v]) return RatFunc::var(v);
  return std::nullopt;
}

int max_variable_index(const Ast& node) {
  int m = 0;
  if (node.kind == Ast::Kind::Ident) {
    try {
      if (auto idx = variable_index(node.text, 1 << 20, node.pos)) m = *idx + 1;
    } catch (const ArityError&) {
    }
  }
  for (const auto& k : node.kids) m = std::max(m, max_variable_index(*k));
  return m;
}

}  // namespace qnull
