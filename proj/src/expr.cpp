#include "mink/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace mink {

namespace {

const std::pair<const char*, Fn> kFunctions[] = {
    {"sin", Fn::Sin},   {"cos", Fn::Cos},   {"sinh", Fn::Sinh},
    {"cosh", Fn::Cosh}, {"tan", Fn::Tan},   {"tanh", Fn::Tanh},
    {"exp", Fn::Exp},   {"log", Fn::Log},   {"sqrt", Fn::Sqrt},
};

const char* fn_name(Fn f) {
    for (const auto& [name, fn] : kFunctions)
        if (fn == f) return name;
    return "?";
}

bool lookup_fn(const std::string& s, Fn& out) {
    for (const auto& [name, fn] : kFunctions) {
        if (s == name) {
            out = fn;
            return true;
        }
    }
    return false;
}

NodePtr mk(Node n) { return std::make_shared<const Node>(std::move(n)); }

NodePtr number(double v, int pos = 0) {
    Node n;
    n.kind = Node::Kind::Number;
    n.number = v;
    n.pos = pos;
    return mk(std::move(n));
}

bool is_const(const NodePtr& n, double v) {
    return n->kind == Node::Kind::Number && n->number == v;
}

NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, int pos = 0) {
    // light folding keeps derivative trees small
    if (k == Node::Kind::Add) {
        if (is_const(a, 0)) return b;
        if (is_const(b, 0)) return a;
    } else if (k == Node::Kind::Sub) {
        if (is_const(b, 0)) return a;
    } else if (k == Node::Kind::Mul) {
        if (is_const(a, 0) || is_const(b, 0)) return number(0);
        if (is_const(a, 1)) return b;
        if (is_const(b, 1)) return a;
    } else if (k == Node::Kind::Div) {
        if (is_const(a, 0)) return number(0);
        if (is_const(b, 1)) return a;
    }
    if (a->kind == Node::Kind::Number && b->kind == Node::Kind::Number) {
        switch (k) {
            case Node::Kind::Add: return number(a->number + b->number);
            case Node::Kind::Sub: return number(a->number - b->number);
            case Node::Kind::Mul: return number(a->number * b->number);
            default: break;
        }
    }
    Node n;
    n.kind = k;
    n.a = std::move(a);
    n.b = std::move(b);
    n.pos = pos;
    return mk(std::move(n));
}

NodePtr negate(NodePtr a, int pos = 0) {
    if (a->kind == Node::Kind::Number) return number(-a->number, pos);
    Node n;
    n.kind = Node::Kind::Neg;
    n.a = std::move(a);
    n.pos = pos;
    return mk(std::move(n));
}

NodePtr call(Fn f, NodePtr a, int pos = 0) {
    Node n;
    n.kind = Node::Kind::Call;
    n.fn = f;
    n.a = std::move(a);
    n.pos = pos;
    return mk(std::move(n));
}

NodePtr power(NodePtr a, double e, int pos = 0) {
    if (e == 1.0) return a;
    if (e == 0.0) return number(1, pos);
    Node n;
    n.kind = Node::Kind::Pow;
    n.a = std::move(a);
    n.number = e;
    n.pos = pos;
    return mk(std::move(n));
}

struct Parser {
    const std::string& src;
    const std::vector<std::string>& vars;
    size_t i = 0;

    void skip() {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    }
    char peek() {
        skip();
        return i < src.size() ? src[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what, size_t at) {
        raise(Err::SyntaxError, what + " at offset " + std::to_string(at),
              static_cast<long>(at));
    }

    double literal() {
        skip();
        const size_t start = i;
        size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        if (j < src.size() && src[j] == '.') {
            ++j;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        }
        if (j == start || (j == start + 1 && src[start] == '.'))
            fail("expected a numeric literal", start);
        if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
            size_t k = j + 1;
            if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
            size_t d = k;
            while (d < src.size() && std::isdigit(static_cast<unsigned char>(src[d]))) ++d;
            if (d > k) j = d;
        }
        const double v = std::stod(src.substr(start, j - start));
        i = j;
        return v;
    }

    NodePtr atom() {
        skip();
        const size_t at = i;
        if (i >= src.size()) fail("unexpected end of input", at);
        const char ch = src[i];
        if (ch == '(') {
            ++i;
            NodePtr e = expr();
            if (peek() != ')') fail("expected ')'", i);
            ++i;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            return number(literal(), static_cast<int>(at));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string name = src.substr(i, j - i);
            i = j;
            if (peek() == '(') {
                Fn f;
                if (!lookup_fn(name, f))
                    fail("unknown function '" + name + "'", at);
                ++i;
                NodePtr arg = expr();
                if (peek() != ')') fail("expected ')'", i);
                ++i;
                return call(f, std::move(arg), static_cast<int>(at));
            }
            Node n;
            n.pos = static_cast<int>(at);
            if (name == "pi") {
                n.kind = Node::Kind::Pi;
            } else if (std::find(vars.begin(), vars.end(), name) != vars.end()) {
                n.kind = Node::Kind::Var;
                n.name = name;
            } else {
                Fn f;
                if (lookup_fn(name, f))
                    fail("function '" + name + "' needs an argument list", at);
                n.kind = Node::Kind::Param;
                n.name = name;
            }
            return mk(std::move(n));
        }
        fail(std::string("unexpected character '") + ch + "'", at);
    }

    NodePtr powterm() {
        NodePtr base = atom();
        if (peek() == '^') {
            const size_t at = i;
            ++i;
            skip();
            if (i >= src.size() ||
                !(std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.'))
                fail("exponent must be a numeric literal", i);
            const double e = literal();
            return power(std::move(base), e, static_cast<int>(at));
        }
        return base;
    }

    NodePtr factor() {
        if (peek() == '-') {
            const size_t at = i;
            ++i;
            return negate(factor(), static_cast<int>(at));
        }
        return powterm();
    }

    NodePtr term() {
        NodePtr acc = factor();
        for (;;) {
            const char op = peek();
            if (op != '*' && op != '/') return acc;
            const size_t at = i;
            ++i;
            NodePtr rhs = factor();
            acc = binary(op == '*' ? Node::Kind::Mul : Node::Kind::Div,
                         std::move(acc), std::move(rhs), static_cast<int>(at));
        }
    }

    NodePtr expr() {
        NodePtr acc = term();
        for (;;) {
            const char op = peek();
            if (op != '+' && op != '-') return acc;
            const size_t at = i;
            ++i;
            NodePtr rhs = term();
            acc = binary(op == '+' ? Node::Kind::Add : Node::Kind::Sub,
                         std::move(acc), std::move(rhs), static_cast<int>(at));
        }
    }
};

Jet eval_node(const Node& n, const std::map<std::string, Jet>& vars,
              const ParamBindings& params) {
    switch (n.kind) {
        case Node::Kind::Number: return Jet::constant(n.number);
        case Node::Kind::Pi: return Jet::constant(M_PI);
        case Node::Kind::Var: {
            auto it = vars.find(n.name);
            if (it == vars.end())
                raise(Err::UnknownIdentifier, "variable '" + n.name + "' is not bound", n.pos);
            return it->second;
        }
        case Node::Kind::Param: {
            auto it = params.find(n.name);
            if (it == params.end())
                raise(Err::UnknownIdentifier, "parameter '" + n.name + "' is not bound", n.pos);
            return Jet::constant(it->second);
        }
        case Node::Kind::Neg: return -eval_node(*n.a, vars, params);
        case Node::Kind::Add: return eval_node(*n.a, vars, params) + eval_node(*n.b, vars, params);
        case Node::Kind::Sub: return eval_node(*n.a, vars, params) - eval_node(*n.b, vars, params);
        case Node::Kind::Mul: return eval_node(*n.a, vars, params) * eval_node(*n.b, vars, params);
        case Node::Kind::Div: return eval_node(*n.a, vars, params) / eval_node(*n.b, vars, params);
        case Node::Kind::Pow: return pow_const(eval_node(*n.a, vars, params), n.number);
        case Node::Kind::Call: {
            const Jet a = eval_node(*n.a, vars, params);
            switch (n.fn) {
                case Fn::Sin: return sin(a);
                case Fn::Cos: return cos(a);
                case Fn::Sinh: return sinh(a);
                case Fn::Cosh: return cosh(a);
                case Fn::Tan: return tan(a);
                case Fn::Tanh: return tanh(a);
                case Fn::Exp: return exp(a);
                case Fn::Log: return log(a);
                case Fn::Sqrt: return sqrt(a);
            }
            break;
        }
    }
    raise(Err::SyntaxError, "malformed expression node", n.pos);
}

NodePtr diff_node(const NodePtr& n, const std::string& var) {
    switch (n->kind) {
        case Node::Kind::Number:
        case Node::Kind::Pi:
        case Node::Kind::Param:
            return number(0);
        case Node::Kind::Var:
            return number(n->name == var ? 1 : 0);
        case Node::Kind::Neg:
            return negate(diff_node(n->a, var));
        case Node::Kind::Add:
            return binary(Node::Kind::Add, diff_node(n->a, var), diff_node(n->b, var));
        case Node::Kind::Sub:
            return binary(Node::Kind::Sub, diff_node(n->a, var), diff_node(n->b, var));
        case Node::Kind::Mul:
            return binary(Node::Kind::Add,
                          binary(Node::Kind::Mul, diff_node(n->a, var), n->b),
                          binary(Node::Kind::Mul, n->a, diff_node(n->b, var)));
        case Node::Kind::Div:
            return binary(Node::Kind::Div,
                          binary(Node::Kind::Sub,
                                 binary(Node::Kind::Mul, diff_node(n->a, var), n->b),
                                 binary(Node::Kind::Mul, n->a, diff_node(n->b, var))),
                          binary(Node::Kind::Mul, n->b, n->b));
        case Node::Kind::Pow:
            return binary(Node::Kind::Mul,
                          binary(Node::Kind::Mul, number(n->number),
                                 power(n->a, n->number - 1)),
                          diff_node(n->a, var));
        case Node::Kind::Call: {
            NodePtr inner = diff_node(n->a, var);
            NodePtr d;
            switch (n->fn) {
                case Fn::Sin: d = call(Fn::Cos, n->a); break;
                case Fn::Cos: d = negate(call(Fn::Sin, n->a)); break;
                case Fn::Sinh: d = call(Fn::Cosh, n->a); break;
                case Fn::Cosh: d = call(Fn::Sinh, n->a); break;
                case Fn::Tan: {
                    NodePtr c = call(Fn::Cos, n->a);
                    d = binary(Node::Kind::Div, number(1), binary(Node::Kind::Mul, c, c));
                    break;
                }
                case Fn::Tanh: {
                    NodePtr c = call(Fn::Cosh, n->a);
                    d = binary(Node::Kind::Div, number(1), binary(Node::Kind::Mul, c, c));
                    break;
                }
                case Fn::Exp: d = call(Fn::Exp, n->a); break;
                case Fn::Log: d = binary(Node::Kind::Div, number(1), n->a); break;
                case Fn::Sqrt:
                    d = binary(Node::Kind::Div, number(1),
                               binary(Node::Kind::Mul, number(2), call(Fn::Sqrt, n->a)));
                    break;
            }
            return binary(Node::Kind::Mul, std::move(d), std::move(inner));
        }
    }
    return number(0);
}

void pretty_node(const NodePtr& n, std::ostringstream& os) {
    switch (n->kind) {
        case Node::Kind::Number: {
            std::ostringstream tmp;
            tmp.precision(17);
            tmp << n->number;
            os << tmp.str();
            break;
        }
        case Node::Kind::Pi: os << "pi"; break;
        case Node::Kind::Var:
        case Node::Kind::Param: os << n->name; break;
        case Node::Kind::Neg:
            os << "(-";
            pretty_node(n->a, os);
            os << ")";
            break;
        case Node::Kind::Add:
        case Node::Kind::Sub:
        case Node::Kind::Mul:
        case Node::Kind::Div: {
            const char op = n->kind == Node::Kind::Add   ? '+'
                            : n->kind == Node::Kind::Sub ? '-'
                            : n->kind == Node::Kind::Mul ? '*'
                                                         : '/';
            os << "(";
            pretty_node(n->a, os);
            os << op;
            pretty_node(n->b, os);
            os << ")";
            break;
        }
        case Node::Kind::Pow: {
            os << "(";
            pretty_node(n->a, os);
            std::ostringstream tmp;
            tmp.precision(17);
            tmp << n->number;
            os << "^" << tmp.str() << ")";
            break;
        }
        case Node::Kind::Call:
            os << fn_name(n->fn) << "(";
            pretty_node(n->a, os);
            os << ")";
            break;
    }
}

bool equal_node(const NodePtr& a, const NodePtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Node::Kind::Number: return a->number == b->number;
        case Node::Kind::Pi: return true;
        case Node::Kind::Var:
        case Node::Kind::Param: return a->name == b->name;
        case Node::Kind::Neg: return equal_node(a->a, b->a);
        case Node::Kind::Pow: return a->number == b->number && equal_node(a->a, b->a);
        case Node::Kind::Call: return a->fn == b->fn && equal_node(a->a, b->a);
        default: return equal_node(a->a, b->a) && equal_node(a->b, b->b);
    }
}

}  // namespace

Expr parse(const std::string& src, const std::vector<std::string>& allowed_vars) {
    Parser p{src, allowed_vars};
    NodePtr root = p.expr();
    p.skip();
    if (p.i != src.size())
        raise(Err::SyntaxError, "trailing input at offset " + std::to_string(p.i),
              static_cast<long>(p.i));
    return Expr{std::move(root)};
}

Jet eval_jet_env(const Expr& tree, const std::map<std::string, Jet>& vars,
                 const ParamBindings& params) {
    return eval_node(*tree.root, vars, params);
}

Jet eval_jet(const Expr& tree, const std::string& var, double t0,
             const ParamBindings& params) {
    std::map<std::string, Jet> vars;
    vars.emplace(var, Jet::variable(t0));
    return eval_node(*tree.root, vars, params);
}

Jet eval_jet2(const Expr& tree, const Expr& u_of_t, const Expr& v_of_t,
              double t0, const ParamBindings& params) {
    std::map<std::string, Jet> vars;
    vars.emplace("u", eval_jet(u_of_t, "t", t0, params));
    vars.emplace("v", eval_jet(v_of_t, "t", t0, params));
    return eval_node(*tree.root, vars, params);
}

Expr differentiate(const Expr& tree, const std::string& var) {
    return Expr{diff_node(tree.root, var)};
}

std::string pretty(const Expr& tree) {
    std::ostringstream os;
    pretty_node(tree.root, os);
    return os.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
    return equal_node(a.root, b.root);
}

}  // namespace mink
