#ifndef LEF_EXPR_HPP
#define LEF_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lef {

using Bindings = std::map<std::string, double>;

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " +
                             std::to_string(col) + ")"),
          line(ln), column(col) {}
};

// Evaluation failed inside some subexpression (division by zero, log of a
// non-positive value, fractional power of a negative base, ...). what()
// names the offending subexpression.
struct EvalDomainError : std::runtime_error {
    std::string subexpr;
    EvalDomainError(const std::string& msg, std::string sub)
        : std::runtime_error(msg + " in '" + sub + "'"), subexpr(std::move(sub)) {}
};

struct UnboundParameter : std::runtime_error {
    std::string name;
    explicit UnboundParameter(std::string n)
        : std::runtime_error("unbound parameter '" + n + "'"), name(std::move(n)) {}
};

namespace ast {

enum class Kind { Number, VarX, VarY1, VarY2, Param, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Exp, Ln, Sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    double number = 0.0;      // Kind::Number
    std::string name;         // Kind::Param
    Func func = Func::Exp;    // Kind::Call
    NodePtr a, b;             // children
};

}  // namespace ast

// Parsed expression in the variables x, y1, y2 with named parameters.
// Immutable; cheap to copy.
class Expr {
  public:
    Expr() = default;

    static Expr parse(const std::string& src);
    static Expr number(double v);

    bool empty() const { return root_ == nullptr; }
    const ast::NodePtr& root() const { return root_; }

    std::string str() const;           // parses back to an identical tree

    double eval(double x, double y1, double y2, const Bindings& params = {}) const;
    // for coefficient functions g(x) and exact solutions
    double eval_x(double x, const Bindings& params = {}) const;

    // every parameter name referenced anywhere in the tree
    std::vector<std::string> parameters() const;
    bool uses_var(ast::Kind which) const;

    friend bool operator==(const Expr& a, const Expr& b);

  private:
    explicit Expr(ast::NodePtr r) : root_(std::move(r)) {}
    ast::NodePtr root_;
};

std::string to_string(const ast::NodePtr& node);

}  // namespace lef

#endif
