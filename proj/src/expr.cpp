#include "lef/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

namespace lef {

namespace {

using ast::Func;
using ast::Kind;
using ast::Node;
using ast::NodePtr;

NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

struct Token {
    enum Type { Num, Ident, Op, LParen, RParen, End } type;
    double num = 0.0;
    std::string text;
    char op = 0;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            if (s_[pos_] == '\n') { ++line_; col_ = 0; }
            ++pos_; ++col_;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_ + 1;
        if (pos_ >= s_.size()) { tok_.type = Token::End; return; }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = 0;
            tok_.num = std::stod(s_.substr(pos_), &end);
            tok_.type = Token::Num;
            pos_ += end; col_ += static_cast<int>(end);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = pos_;
            while (e < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[e])) || s_[e] == '_'))
                ++e;
            tok_.type = Token::Ident;
            tok_.text = s_.substr(pos_, e - pos_);
            col_ += static_cast<int>(e - pos_);
            pos_ = e;
            return;
        }
        switch (c) {
            case '(': tok_.type = Token::LParen; break;
            case ')': tok_.type = Token::RParen; break;
            case '+': case '-': case '*': case '/': case '^':
                tok_.type = Token::Op;
                tok_.op = c;
                break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_ + 1);
        }
        ++pos_; ++col_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 0;
    Token tok_;
};

// precedence: ^ (right assoc) > unary - > * / > + -
class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    NodePtr run() {
        NodePtr e = sum();
        const Token& t = lex_.peek();
        if (t.type != Token::End)
            throw ParseError("trailing input", t.line, t.col);
        return e;
    }

  private:
    NodePtr sum() {
        NodePtr e = term();
        while (lex_.peek().type == Token::Op &&
               (lex_.peek().op == '+' || lex_.peek().op == '-')) {
            const char op = lex_.take().op;
            e = make(op == '+' ? Kind::Add : Kind::Sub, e, term());
        }
        return e;
    }

    NodePtr term() {
        NodePtr e = unary();
        while (lex_.peek().type == Token::Op &&
               (lex_.peek().op == '*' || lex_.peek().op == '/')) {
            const char op = lex_.take().op;
            e = make(op == '*' ? Kind::Mul : Kind::Div, e, unary());
        }
        return e;
    }

    NodePtr unary() {
        if (lex_.peek().type == Token::Op && lex_.peek().op == '-') {
            lex_.take();
            return make(Kind::Neg, unary());
        }
        if (lex_.peek().type == Token::Op && lex_.peek().op == '+') {
            lex_.take();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (lex_.peek().type == Token::Op && lex_.peek().op == '^') {
            lex_.take();
            // right-associative; allow a signed exponent as in y2^-3
            NodePtr expo = unary();
            return make(Kind::Pow, base, expo);
        }
        return base;
    }

    NodePtr atom() {
        Token t = lex_.take();
        switch (t.type) {
            case Token::Num: {
                NodePtr n = make(Kind::Number);
                const_cast<Node&>(*n).number = t.num;
                return n;
            }
            case Token::LParen: {
                NodePtr e = sum();
                Token close = lex_.take();
                if (close.type != Token::RParen)
                    throw ParseError("expected ')'", close.line, close.col);
                return e;
            }
            case Token::Ident: {
                if (lex_.peek().type == Token::LParen) {
                    lex_.take();
                    Func f;
                    if (t.text == "exp") f = Func::Exp;
                    else if (t.text == "ln" || t.text == "log") f = Func::Ln;
                    else if (t.text == "sqrt") f = Func::Sqrt;
                    else throw ParseError("unknown function '" + t.text + "'", t.line, t.col);
                    NodePtr arg = sum();
                    Token close = lex_.take();
                    if (close.type != Token::RParen)
                        throw ParseError("expected ')'", close.line, close.col);
                    NodePtr n = make(Kind::Call, arg);
                    const_cast<Node&>(*n).func = f;
                    return n;
                }
                if (t.text == "x") return make(Kind::VarX);
                if (t.text == "y1") return make(Kind::VarY1);
                if (t.text == "y2") return make(Kind::VarY2);
                NodePtr n = make(Kind::Param);
                const_cast<Node&>(*n).name = t.text;
                return n;
            }
            default:
                throw ParseError("expected a value", t.line, t.col);
        }
    }

    Lexer lex_;
};

int prec(Kind k) {
    switch (k) {
        case Kind::Add: case Kind::Sub: return 1;
        case Kind::Mul: case Kind::Div: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        default: return 5;
    }
}

void print_node(const NodePtr& n, std::string& out, int parent_prec) {
    const int p = prec(n->kind);
    const bool paren = p < parent_prec;
    if (paren) out += '(';
    switch (n->kind) {
        case Kind::Number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n->number);
            out += buf;
            break;
        }
        case Kind::VarX: out += 'x'; break;
        case Kind::VarY1: out += "y1"; break;
        case Kind::VarY2: out += "y2"; break;
        case Kind::Param: out += n->name; break;
        case Kind::Neg:
            out += '-';
            print_node(n->a, out, p + 1);
            break;
        case Kind::Add:
            print_node(n->a, out, p);
            out += " + ";
            print_node(n->b, out, p + 1);
            break;
        case Kind::Sub:
            print_node(n->a, out, p);
            out += " - ";
            print_node(n->b, out, p + 1);
            break;
        case Kind::Mul:
            print_node(n->a, out, p);
            out += '*';
            print_node(n->b, out, p + 1);
            break;
        case Kind::Div:
            print_node(n->a, out, p);
            out += '/';
            print_node(n->b, out, p + 1);
            break;
        case Kind::Pow:
            print_node(n->a, out, p + 1);  // left side binds tighter
            out += '^';
            print_node(n->b, out, p);
            break;
        case Kind::Call:
            out += (n->func == Func::Exp ? "exp" : n->func == Func::Ln ? "ln" : "sqrt");
            out += '(';
            print_node(n->a, out, 0);
            out += ')';
            break;
    }
    if (paren) out += ')';
}

struct Env {
    double x, y1, y2;
    const Bindings* params;
};

double eval_node(const NodePtr& n, const Env& env) {
    switch (n->kind) {
        case Kind::Number: return n->number;
        case Kind::VarX: return env.x;
        case Kind::VarY1: return env.y1;
        case Kind::VarY2: return env.y2;
        case Kind::Param: {
            auto it = env.params->find(n->name);
            if (it == env.params->end()) throw UnboundParameter(n->name);
            return it->second;
        }
        case Kind::Neg: return -eval_node(n->a, env);
        case Kind::Add: return eval_node(n->a, env) + eval_node(n->b, env);
        case Kind::Sub: return eval_node(n->a, env) - eval_node(n->b, env);
        case Kind::Mul: return eval_node(n->a, env) * eval_node(n->b, env);
        case Kind::Div: {
            const double den = eval_node(n->b, env);
            if (den == 0.0) throw EvalDomainError("division by zero", to_string(n));
            return eval_node(n->a, env) / den;
        }
        case Kind::Pow: {
            const double base = eval_node(n->a, env);
            const double expo = eval_node(n->b, env);
            const bool integral = expo == std::floor(expo);
            if (base == 0.0 && expo < 0.0)
                throw EvalDomainError("zero raised to a negative power", to_string(n));
            if (base < 0.0 && !integral)
                throw EvalDomainError("fractional power of a negative base", to_string(n));
            return std::pow(base, expo);
        }
        case Kind::Call: {
            const double v = eval_node(n->a, env);
            switch (n->func) {
                case Func::Exp: return std::exp(v);
                case Func::Ln:
                    if (v <= 0.0) throw EvalDomainError("log of a non-positive value", to_string(n));
                    return std::log(v);
                case Func::Sqrt:
                    if (v < 0.0) throw EvalDomainError("sqrt of a negative value", to_string(n));
                    return std::sqrt(v);
            }
        }
    }
    throw std::logic_error("eval_node: bad AST");
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Number: return a->number == b->number;
        case Kind::Param: return a->name == b->name;
        case Kind::Call:
            return a->func == b->func && equal_nodes(a->a, b->a);
        default:
            return equal_nodes(a->a, b->a) && equal_nodes(a->b, b->b);
    }
}

void collect(const NodePtr& n, std::set<std::string>& params, bool* vars) {
    if (!n) return;
    if (n->kind == Kind::Param) params.insert(n->name);
    if (n->kind == Kind::VarX) vars[0] = true;
    if (n->kind == Kind::VarY1) vars[1] = true;
    if (n->kind == Kind::VarY2) vars[2] = true;
    collect(n->a, params, vars);
    collect(n->b, params, vars);
}

}  // namespace

Expr Expr::parse(const std::string& src) {
    if (src.empty()) throw ParseError("empty expression", 1, 1);
    return Expr(Parser(src).run());
}

Expr Expr::number(double v) {
    auto n = std::make_shared<ast::Node>();
    n->kind = Kind::Number;
    n->number = v;
    return Expr(n);
}

std::string Expr::str() const {
    if (!root_) return "";
    std::string out;
    print_node(root_, out, 0);
    return out;
}

std::string to_string(const ast::NodePtr& node) {
    std::string out;
    print_node(node, out, 0);
    return out;
}

double Expr::eval(double x, double y1, double y2, const Bindings& params) const {
    const double v = eval_node(root_, Env{x, y1, y2, &params});
    if (!std::isfinite(v)) throw EvalDomainError("non-finite result", str());
    return v;
}

double Expr::eval_x(double x, const Bindings& params) const {
    return eval(x, 0.0, 0.0, params);
}

std::vector<std::string> Expr::parameters() const {
    std::set<std::string> s;
    bool vars[3] = {false, false, false};
    collect(root_, s, vars);
    return {s.begin(), s.end()};
}

bool Expr::uses_var(ast::Kind which) const {
    std::set<std::string> s;
    bool vars[3] = {false, false, false};
    collect(root_, s, vars);
    if (which == Kind::VarX) return vars[0];
    if (which == Kind::VarY1) return vars[1];
    if (which == Kind::VarY2) return vars[2];
    return false;
}

bool operator==(const Expr& a, const Expr& b) { return equal_nodes(a.root_, b.root_); }

}  // namespace lef
