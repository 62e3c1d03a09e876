#pragma once

// One-variable complex expressions: parse, print, evaluate on jets and
// rewrite at the tree level (reciprocal, derivative, Mobius post-composition).
//
// Grammar (whitespace ignored):
//   expr   := term (("+"|"-") term)*
//   term   := unary (("*"|"/") unary)*
//   unary  := "-" unary | factor
//   factor := base ("^" ["-"|"+"] realnum)?
//   base   := realnum | "i" | "pi" | VAR | "(" expr ")" | func "(" expr ")"
//   func   := "sin"|"cos"|"tan"|"cot"|"exp"|"log"|"sqrt"
// VAR is "z" by default ("x" for real weights q). A numeric literal directly
// followed by a base is an implicit product, so "2z" reads as "2*z".

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/jet.hpp"

namespace gft {

enum class NodeKind { Const, Var, Neg, Add, Sub, Mul, Div, Pow, Func };

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  NodeKind kind = NodeKind::Const;
  cplx value{};          // Const
  double exponent = 0;   // Pow
  JetFn fn = JetFn::Exp; // Func
  NodePtr lhs;           // unary operand, or left operand
  NodePtr rhs;
};

/// Postorder instruction for the stack evaluator.
struct Instr {
  NodeKind kind;
  cplx value;
  double exponent;
  JetFn fn;
};

/// Immutable parsed expression. Copies share the tree.
class FunctionExpr {
 public:
  explicit FunctionExpr(NodePtr root, char variable = 'z');

  static FunctionExpr var(char variable = 'z');
  static FunctionExpr constant(cplx c, char variable = 'z');

  const NodePtr& root() const noexcept { return root_; }
  char variable() const noexcept { return variable_; }
  const std::vector<Instr>& program() const noexcept { return *program_; }

  /// Declared singular points (poles, branch points) inside or on the disk.
  const std::vector<cplx>& singular_points() const noexcept { return singular_points_; }
  /// Radius of the punctured neighbourhood of z = 0 excluded from sampling.
  double exclusion_radius() const noexcept { return exclusion_radius_; }

  FunctionExpr with_singular_points(std::vector<cplx> points) const;
  FunctionExpr with_exclusion_radius(double radius) const;

  Jet3 eval_jet(cplx z0) const;
  cplx eval(cplx z0) const { return eval_jet(z0).v0; }
  /// Non-throwing variant; status reports the first failing node.
  Jet3 try_eval_jet(cplx z0, JetStatus& status) const noexcept;
  /// Value only, without derivatives, so it stays usable arbitrarily close
  /// to a branch point; nullopt on an exact pole or a non-finite result.
  std::optional<cplx> try_eval_value(cplx z0) const noexcept;

  /// Fully parenthesised text that parses back to the same tree.
  std::string print() const;

 private:
  NodePtr root_;
  char variable_;
  std::shared_ptr<const std::vector<Instr>> program_;
  std::vector<cplx> singular_points_;
  double exclusion_radius_ = 1e-3;
};

inline constexpr double kDefaultExclusionRadius = 1e-3;

FunctionExpr parse(std::string_view text, char variable = 'z');

inline Jet3 eval_jet(const FunctionExpr& e, cplx z0) { return e.eval_jet(z0); }

// Tree construction with light constant folding (0*x, 1*x, x+0, c op c).
NodePtr make_const(cplx c);
NodePtr make_var();
NodePtr make_neg(NodePtr a);
NodePtr make_binary(NodeKind kind, NodePtr a, NodePtr b);
NodePtr make_pow(NodePtr base, double exponent);
NodePtr make_func(JetFn fn, NodePtr arg);

FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b);
FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b);
FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b);
FunctionExpr operator/(const FunctionExpr& a, const FunctionExpr& b);
FunctionExpr operator*(cplx s, const FunctionExpr& a);

FunctionExpr reciprocal(const FunctionExpr& f);
/// Symbolic d/dz.
FunctionExpr derivative(const FunctionExpr& f);
/// (a f + b) / (c f + d); DegenerateMobius when |ad - bc| < 1e-13.
FunctionExpr mobius_compose(const FunctionExpr& f, cplx a, cplx b, cplx c, cplx d);
/// outer(inner(z)).
FunctionExpr substitute(const FunctionExpr& outer, const FunctionExpr& inner);

struct LaurentCheck {
  bool is_b_form = false;
  cplx a0_estimate{};
  cplx residue_estimate{};  // mean of z e(z) over the probe circle
};

/// Probes lim z e(z) at 0 on a circle of the given radius (0 < r <= 0.1).
/// The circle mean is exact for Laurent series up to aliasing of the
/// 64-point rule, so the residue estimate is stable across radii.
LaurentCheck laurent_b_check(const FunctionExpr& e, double probe_radius);

inline constexpr double kLaurentTolerance = 1e-6;

}  // namespace gft
