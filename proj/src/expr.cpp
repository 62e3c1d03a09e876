#include "gft/expr.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "gft/error.hpp"

namespace gft {

namespace {

void compile(const NodePtr& n, std::vector<Instr>& out) {
  if (n->lhs) compile(n->lhs, out);
  if (n->rhs) compile(n->rhs, out);
  out.push_back(Instr{n->kind, n->value, n->exponent, n->fn});
}

bool is_const(const NodePtr& n) { return n->kind == NodeKind::Const; }
bool is_value(const NodePtr& n, double v) { return is_const(n) && n->value == cplx(v, 0.0); }

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* func_name(JetFn fn) {
  switch (fn) {
    case JetFn::Exp: return "exp";
    case JetFn::Log: return "log";
    case JetFn::Sin: return "sin";
    case JetFn::Cos: return "cos";
    case JetFn::Tan: return "tan";
    case JetFn::Cot: return "cot";
    case JetFn::Sqrt: return "sqrt";
  }
  return "?";
}

std::string format_const(cplx c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return re < 0 || std::signbit(re) ? "(-" + format_real(-re) + ")" : format_real(re);
  std::string s = "(";
  if (re != 0.0) s += (re < 0 ? "-" : "") + format_real(std::abs(re)) + (im < 0 ? " - " : " + ");
  else if (im < 0) s += "-";
  // a bare unit keeps parse(print(e)) a fixed point of print
  s += std::abs(im) == 1.0 ? "i)" : format_real(std::abs(im)) + "*i)";
  return s;
}

void print_node(const NodePtr& n, char var, std::string& out) {
  switch (n->kind) {
    case NodeKind::Const: out += format_const(n->value); return;
    case NodeKind::Var: out += var; return;
    case NodeKind::Neg:
      out += "(-";
      print_node(n->lhs, var, out);
      out += ")";
      return;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
    case NodeKind::Div: {
      static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
      out += "(";
      print_node(n->lhs, var, out);
      out += ops[static_cast<int>(n->kind) - static_cast<int>(NodeKind::Add)];
      print_node(n->rhs, var, out);
      out += ")";
      return;
    }
    case NodeKind::Pow:
      out += "(";
      print_node(n->lhs, var, out);
      out += ")^" + format_real(n->exponent);
      return;
    case NodeKind::Func:
      out += func_name(n->fn);
      out += "(";
      print_node(n->lhs, var, out);
      out += ")";
      return;
  }
}

}  // namespace

FunctionExpr::FunctionExpr(NodePtr root, char variable) : root_(std::move(root)), variable_(variable) {
  auto prog = std::make_shared<std::vector<Instr>>();
  compile(root_, *prog);
  program_ = std::move(prog);
}

FunctionExpr FunctionExpr::var(char variable) { return FunctionExpr(make_var(), variable); }

FunctionExpr FunctionExpr::constant(cplx c, char variable) { return FunctionExpr(make_const(c), variable); }

FunctionExpr FunctionExpr::with_singular_points(std::vector<cplx> points) const {
  FunctionExpr e = *this;
  e.singular_points_ = std::move(points);
  return e;
}

FunctionExpr FunctionExpr::with_exclusion_radius(double radius) const {
  FunctionExpr e = *this;
  e.exclusion_radius_ = radius;
  return e;
}

Jet3 FunctionExpr::try_eval_jet(cplx z0, JetStatus& status) const noexcept {
  status = JetStatus::Ok;
  // Expressions are shallow; a small fixed stack avoids allocation per call.
  constexpr std::size_t kInline = 32;
  Jet3 inline_stack[kInline];
  std::vector<Jet3> heap;
  const auto& prog = *program_;
  Jet3* stack = inline_stack;
  if (prog.size() > kInline) {
    heap.resize(prog.size());
    stack = heap.data();
  }
  std::size_t sp = 0;
  for (const Instr& ins : prog) {
    switch (ins.kind) {
      case NodeKind::Const: stack[sp++] = Jet3::constant(ins.value); break;
      case NodeKind::Var: stack[sp++] = seed_variable(z0); break;
      case NodeKind::Neg: stack[sp - 1] = -stack[sp - 1]; break;
      case NodeKind::Add: --sp; stack[sp - 1] += stack[sp]; break;
      case NodeKind::Sub: --sp; stack[sp - 1] -= stack[sp]; break;
      case NodeKind::Mul: --sp; stack[sp - 1] = stack[sp - 1] * stack[sp]; break;
      case NodeKind::Div:
        --sp;
        stack[sp - 1] = try_divide(stack[sp - 1], stack[sp], status);
        if (status != JetStatus::Ok) return {};
        break;
      case NodeKind::Pow:
        stack[sp - 1] = try_pow(stack[sp - 1], ins.exponent, status);
        if (status != JetStatus::Ok) return {};
        break;
      case NodeKind::Func:
        stack[sp - 1] = try_apply(ins.fn, stack[sp - 1], status);
        if (status != JetStatus::Ok) return {};
        break;
    }
  }
  return stack[0];
}

std::optional<cplx> FunctionExpr::try_eval_value(cplx z0) const noexcept {
  std::vector<cplx> stack;
  stack.reserve(program_->size());
  for (const Instr& ins : *program_) {
    switch (ins.kind) {
      case NodeKind::Const: stack.push_back(ins.value); break;
      case NodeKind::Var: stack.push_back(z0); break;
      case NodeKind::Neg: stack.back() = -stack.back(); break;
      case NodeKind::Add: stack[stack.size() - 2] += stack.back(); stack.pop_back(); break;
      case NodeKind::Sub: stack[stack.size() - 2] -= stack.back(); stack.pop_back(); break;
      case NodeKind::Mul: stack[stack.size() - 2] *= stack.back(); stack.pop_back(); break;
      case NodeKind::Div:
        if (stack.back() == cplx(0.0)) return std::nullopt;
        stack[stack.size() - 2] /= stack.back();
        stack.pop_back();
        break;
      case NodeKind::Pow: {
        cplx& a = stack.back();
        if (a == cplx(0.0) && ins.exponent <= 0.0) return std::nullopt;
        a = std::pow(a, ins.exponent);
        break;
      }
      case NodeKind::Func: {
        cplx& a = stack.back();
        switch (ins.fn) {
          case JetFn::Exp: a = std::exp(a); break;
          case JetFn::Log:
            if (a == cplx(0.0)) return std::nullopt;
            a = std::log(a);
            break;
          case JetFn::Sin: a = std::sin(a); break;
          case JetFn::Cos: a = std::cos(a); break;
          case JetFn::Tan: a = std::tan(a); break;
          case JetFn::Cot: a = std::cos(a) / std::sin(a); break;
          case JetFn::Sqrt: a = std::sqrt(a); break;
        }
        break;
      }
    }
  }
  const cplx v = stack.back();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::nullopt;
  return v;
}

Jet3 FunctionExpr::eval_jet(cplx z0) const {
  JetStatus status = JetStatus::Ok;
  Jet3 r = try_eval_jet(z0, status);
  if (status == JetStatus::DivisionAtZero) {
    throw Error(ErrorKind::DivisionAtZero, "evaluating " + print());
  }
  if (status == JetStatus::BranchPointOrPole) {
    throw Error(ErrorKind::BranchPointOrPole, "evaluating " + print());
  }
  return r;
}

std::string FunctionExpr::print() const {
  std::string out;
  print_node(root_, variable_, out);
  return out;
}

NodePtr make_const(cplx c) { return std::make_shared<ExprNode>(ExprNode{NodeKind::Const, c, 0, JetFn::Exp, nullptr, nullptr}); }

NodePtr make_var() { return std::make_shared<ExprNode>(ExprNode{NodeKind::Var, {}, 0, JetFn::Exp, nullptr, nullptr}); }

NodePtr make_neg(NodePtr a) {
  if (is_const(a)) return make_const(-a->value);
  if (a->kind == NodeKind::Neg) return a->lhs;
  return std::make_shared<ExprNode>(ExprNode{NodeKind::Neg, {}, 0, JetFn::Exp, std::move(a), nullptr});
}

NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b) {
  switch (kind) {
    case NodeKind::Add:
      if (is_value(a, 0)) return b;
      if (is_value(b, 0)) return a;
      if (is_const(a) && is_const(b)) return make_const(a->value + b->value);
      break;
    case NodeKind::Sub:
      if (is_value(b, 0)) return a;
      if (is_value(a, 0)) return make_neg(b);
      if (is_const(a) && is_const(b)) return make_const(a->value - b->value);
      break;
    case NodeKind::Mul:
      if (is_value(a, 0) || is_value(b, 0)) return make_const(0.0);
      if (is_value(a, 1)) return b;
      if (is_value(b, 1)) return a;
      if (is_value(a, -1)) return make_neg(b);
      if (is_value(b, -1)) return make_neg(a);
      if (is_const(a) && is_const(b)) return make_const(a->value * b->value);
      break;
    case NodeKind::Div:
      if (is_value(a, 0) && !is_value(b, 0)) return make_const(0.0);
      if (is_value(b, 1)) return a;
      if (is_const(a) && is_const(b) && b->value != cplx(0.0)) return make_const(a->value / b->value);
      break;
    default:
      throw Error(ErrorKind::InvalidArgument, "make_binary: not a binary node kind");
  }
  return std::make_shared<ExprNode>(ExprNode{kind, {}, 0, JetFn::Exp, std::move(a), std::move(b)});
}

NodePtr make_pow(NodePtr base, double exponent) {
  if (exponent == 0.0) return make_const(1.0);
  if (exponent == 1.0) return base;
  return std::make_shared<ExprNode>(ExprNode{NodeKind::Pow, {}, exponent, JetFn::Exp, std::move(base), nullptr});
}

NodePtr make_func(JetFn fn, NodePtr arg) {
  return std::make_shared<ExprNode>(ExprNode{NodeKind::Func, {}, 0, fn, std::move(arg), nullptr});
}

FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr(make_binary(NodeKind::Add, a.root(), b.root()), a.variable());
}
FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr(make_binary(NodeKind::Sub, a.root(), b.root()), a.variable());
}
FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr(make_binary(NodeKind::Mul, a.root(), b.root()), a.variable());
}
FunctionExpr operator/(const FunctionExpr& a, const FunctionExpr& b) {
  return FunctionExpr(make_binary(NodeKind::Div, a.root(), b.root()), a.variable());
}
FunctionExpr operator*(cplx s, const FunctionExpr& a) {
  return FunctionExpr(make_binary(NodeKind::Mul, make_const(s), a.root()), a.variable());
}

FunctionExpr reciprocal(const FunctionExpr& f) {
  return FunctionExpr(make_binary(NodeKind::Div, make_const(1.0), f.root()), f.variable());
}

namespace {

NodePtr diff(const NodePtr& n) {
  using K = NodeKind;
  switch (n->kind) {
    case K::Const: return make_const(0.0);
    case K::Var: return make_const(1.0);
    case K::Neg: return make_neg(diff(n->lhs));
    case K::Add: return make_binary(K::Add, diff(n->lhs), diff(n->rhs));
    case K::Sub: return make_binary(K::Sub, diff(n->lhs), diff(n->rhs));
    case K::Mul:
      return make_binary(K::Add, make_binary(K::Mul, diff(n->lhs), n->rhs), make_binary(K::Mul, n->lhs, diff(n->rhs)));
    case K::Div: {
      // u'/v - u v'/v^2
      NodePtr du = diff(n->lhs), dv = diff(n->rhs);
      NodePtr first = make_binary(K::Div, du, n->rhs);
      NodePtr second = make_binary(K::Div, make_binary(K::Mul, n->lhs, dv), make_pow(n->rhs, 2.0));
      return make_binary(K::Sub, first, second);
    }
    case K::Pow: {
      NodePtr scaled = make_binary(K::Mul, make_const(n->exponent), make_pow(n->lhs, n->exponent - 1.0));
      return make_binary(K::Mul, scaled, diff(n->lhs));
    }
    case K::Func: {
      const NodePtr& u = n->lhs;
      NodePtr du = diff(u);
      NodePtr outer;
      switch (n->fn) {
        case JetFn::Exp: outer = n; break;
        case JetFn::Log: return make_binary(K::Div, du, u);
        case JetFn::Sin: outer = make_func(JetFn::Cos, u); break;
        case JetFn::Cos: outer = make_neg(make_func(JetFn::Sin, u)); break;
        case JetFn::Tan: outer = make_binary(K::Add, make_const(1.0), make_pow(n, 2.0)); break;
        case JetFn::Cot: outer = make_neg(make_binary(K::Add, make_const(1.0), make_pow(n, 2.0))); break;
        case JetFn::Sqrt: return make_binary(K::Div, du, make_binary(K::Mul, make_const(2.0), n));
      }
      return make_binary(K::Mul, outer, du);
    }
  }
  return make_const(0.0);
}

NodePtr subst(const NodePtr& n, const NodePtr& inner) {
  if (n->kind == NodeKind::Var) return inner;
  if (n->kind == NodeKind::Const) return n;
  auto copy = std::make_shared<ExprNode>(*n);
  if (n->lhs) copy->lhs = subst(n->lhs, inner);
  if (n->rhs) copy->rhs = subst(n->rhs, inner);
  return copy;
}

}  // namespace

FunctionExpr derivative(const FunctionExpr& f) { return FunctionExpr(diff(f.root()), f.variable()); }

FunctionExpr mobius_compose(const FunctionExpr& f, cplx a, cplx b, cplx c, cplx d) {
  if (std::abs(a * d - b * c) < kSingularityThreshold) {
    throw Error(ErrorKind::DegenerateMobius, "ad - bc vanishes");
  }
  using K = NodeKind;
  NodePtr num = make_binary(K::Add, make_binary(K::Mul, make_const(a), f.root()), make_const(b));
  NodePtr den = make_binary(K::Add, make_binary(K::Mul, make_const(c), f.root()), make_const(d));
  return FunctionExpr(make_binary(K::Div, num, den), f.variable());
}

FunctionExpr substitute(const FunctionExpr& outer, const FunctionExpr& inner) {
  return FunctionExpr(subst(outer.root(), inner.root()), outer.variable());
}

LaurentCheck laurent_b_check(const FunctionExpr& e, double probe_radius) {
  if (!(probe_radius > 0.0 && probe_radius <= 0.1)) {
    throw Error(ErrorKind::InvalidArgument, "probe radius must lie in (0, 0.1]");
  }
  constexpr int kPoints = 64;
  cplx residue = 0.0, a0 = 0.0;
  for (int k = 0; k < kPoints; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / kPoints;
    const cplx z = std::polar(probe_radius, phi);
    JetStatus status = JetStatus::Ok;
    const cplx v = e.try_eval_jet(z, status).v0;
    if (status != JetStatus::Ok || !std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorKind::EvaluationFailed, "probe circle meets a singularity of " + e.print());
    }
    residue += z * v;
    a0 += v - 1.0 / z;
  }
  LaurentCheck out;
  out.residue_estimate = residue / static_cast<double>(kPoints);
  out.a0_estimate = a0 / static_cast<double>(kPoints);
  out.is_b_form = std::abs(out.residue_estimate - 1.0) <= kLaurentTolerance;
  return out;
}

}  // namespace gft
