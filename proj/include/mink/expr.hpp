#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mink/jet.hpp"

namespace mink {

enum class Fn { Sin, Cos, Sinh, Cosh, Tan, Tanh, Exp, Log, Sqrt };

/// Free parameter values (e.g. a radius or pitch) bound at evaluation time.
using ParamBindings = std::map<std::string, double>;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Number, Var, Param, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind;
    double number = 0;    // Number value or Pow exponent
    std::string name;     // Var / Param
    Fn fn = Fn::Sin;      // Call
    NodePtr a, b;
    int pos = 0;          // byte offset in the source text
};

/// Immutable expression tree. Copies share nodes; evaluation is pure, so
/// concurrent evaluation of a shared tree is safe.
struct Expr {
    NodePtr root;
};

/// Parse with the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' literal)?
///   atom   := literal | ident | ident '(' expr ')' | '(' expr ')'
/// Identifiers in allowed_vars become variables, known function names become
/// calls, anything else becomes a free parameter reference. pi is reserved.
/// Throws Error{SyntaxError} with the byte offset on malformed input.
Expr parse(const std::string& src, const std::vector<std::string>& allowed_vars);

/// Evaluate with every variable bound to a jet.
Jet eval_jet_env(const Expr& tree, const std::map<std::string, Jet>& vars,
                 const ParamBindings& params);

/// Evaluate a single-variable tree at t0, seeding var as the jet of t.
Jet eval_jet(const Expr& tree, const std::string& var, double t0,
             const ParamBindings& params);

/// Evaluate a two-variable tree along the parameter-domain curve
/// (u(t), v(t)) at t0 by seeding u and v with their own jets in t.
Jet eval_jet2(const Expr& tree, const Expr& u_of_t, const Expr& v_of_t,
              double t0, const ParamBindings& params);

/// Exact symbolic partial derivative with respect to one variable name.
Expr differentiate(const Expr& tree, const std::string& var);

std::string pretty(const Expr& tree);

bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace mink
