// Recursive-descent parser for the expression grammar in gft/expr.hpp.

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "gft/error.hpp"
#include "gft/expr.hpp"

namespace gft {

namespace {

struct Func {
  std::string_view name;
  JetFn fn;
};

constexpr Func kFuncs[] = {
    {"sin", JetFn::Sin}, {"cos", JetFn::Cos}, {"tan", JetFn::Tan},   {"cot", JetFn::Cot},
    {"exp", JetFn::Exp}, {"log", JetFn::Log}, {"sqrt", JetFn::Sqrt},
};

class Parser {
 public:
  Parser(std::string_view text, char variable) : text_(text), variable_(variable) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"operator", "end of input"}, "unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  char variable_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& msg) const {
    throw SyntaxError(pos_, std::move(expected), msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)}, std::string("expected '") + c + "'");
  }

  static bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }
  static bool starts_base(char c) { return starts_number(c) || std::isalpha(static_cast<unsigned char>(c)) || c == '('; }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = std::make_shared<ExprNode>(ExprNode{NodeKind::Add, {}, 0, JetFn::Exp, lhs, term()});
      } else if (accept('-')) {
        lhs = std::make_shared<ExprNode>(ExprNode{NodeKind::Sub, {}, 0, JetFn::Exp, lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    bool literal = false;
    NodePtr lhs = unary(&literal);
    for (;;) {
      if (accept('*')) {
        lhs = std::make_shared<ExprNode>(ExprNode{NodeKind::Mul, {}, 0, JetFn::Exp, lhs, unary(&literal)});
      } else if (accept('/')) {
        lhs = std::make_shared<ExprNode>(ExprNode{NodeKind::Div, {}, 0, JetFn::Exp, lhs, unary(&literal)});
      } else if (literal && starts_base(peek())) {
        // "2z", "4cot(z)": a bare literal times whatever follows.
        lhs = std::make_shared<ExprNode>(ExprNode{NodeKind::Mul, {}, 0, JetFn::Exp, lhs, unary(&literal)});
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary(bool* literal) {
    if (accept('-')) {
      *literal = false;
      return std::make_shared<ExprNode>(ExprNode{NodeKind::Neg, {}, 0, JetFn::Exp, unary(literal), nullptr});
    }
    return factor(literal);
  }

  NodePtr factor(bool* literal) {
    NodePtr b = base(literal);
    if (accept('^')) {
      *literal = false;
      double sign = 1.0;
      if (accept('-')) {
        sign = -1.0;
      } else {
        accept('+');
      }
      skip_ws();
      if (!starts_number(peek())) fail({"realnum"}, "exponent must be a real literal");
      const double e = sign * realnum();
      return std::make_shared<ExprNode>(ExprNode{NodeKind::Pow, {}, e, JetFn::Exp, b, nullptr});
    }
    return b;
  }

  double realnum() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
      pos_ = start;
      fail({"digit"}, "malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) {
      pos_ = start;
      fail({"realnum"}, "number out of range");
    }
    return value;
  }

  NodePtr base(bool* literal) {
    *literal = false;
    const char c = peek();
    if (starts_number(c)) {
      *literal = true;
      return make_const(realnum());
    }
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word.size() == 1 && word[0] == variable_) return make_var();
      if (word == "i") return make_const(cplx(0.0, 1.0));
      if (word == "pi") return make_const(std::numbers::pi);
      for (const Func& f : kFuncs) {
        if (word == f.name) {
          expect('(');
          NodePtr arg = expr();
          expect(')');
          return std::make_shared<ExprNode>(ExprNode{NodeKind::Func, {}, 0, f.fn, arg, nullptr});
        }
      }
      pos_ = start;
      fail({std::string(1, variable_), "i", "pi", "sin", "cos", "tan", "cot", "exp", "log", "sqrt"},
           "unknown identifier '" + std::string(word) + "'");
    }
    fail({"realnum", "i", "pi", std::string(1, variable_), "(", "function"},
         c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }
};

}  // namespace

FunctionExpr parse(std::string_view text, char variable) {
  Parser p(text, variable);
  return FunctionExpr(p.parse_all(), variable);
}

}  // namespace gft
