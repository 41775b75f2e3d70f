#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qact/scalar.hpp"

namespace qact {

struct ExprNode;
using AstPtr = std::shared_ptr<const ExprNode>;

// Immutable expression tree for the corpus mini-language. Powers carry
// integer-literal exponents only; Unit nodes (matrix units e(i,j)) appear
// only in matrix expressions.
struct ExprNode {
    enum class Kind { Number, Imag, Q, Param, Neg, Add, Sub, Mul, Div, Pow, Unit };
    Kind kind;
    Rat value;         // Number
    std::string name;  // Param
    AstPtr a, b;
    int expo = 0;      // Pow
    int row = 0, col = 0;  // Unit

    static AstPtr number(Rat v);
    static AstPtr imag();
    static AstPtr q();
    static AstPtr param(std::string n);
    static AstPtr neg(AstPtr x);
    static AstPtr add(AstPtr x, AstPtr y);
    static AstPtr sub(AstPtr x, AstPtr y);
    static AstPtr mul(AstPtr x, AstPtr y);
    static AstPtr div(AstPtr x, AstPtr y);
    static AstPtr pow(AstPtr x, int e);
    static AstPtr unit(int i, int j);
};

bool ast_equal(const AstPtr& x, const AstPtr& y);

using ParamEnv = std::map<std::string, Scalar>;

// Whitespace-insensitive recursive-descent parser; precedence ^ > unary- > */ > +-,
// binary operators left-associative. Implicit multiplication is a syntax error.
AstPtr parse_expr(const std::string& text);

std::string print_expr(const AstPtr& ast);

// Exact value of the expression; throws UnboundParameter / DivisionByZero.
Scalar eval_expr(const AstPtr& ast, const ParamEnv& env);

// Collects parameter names referenced by the expression.
void collect_params(const AstPtr& ast, std::vector<std::string>& out);

// Replaces every occurrence of q by the given subtree (used for the q <-> 1/q
// convention flip).
AstPtr subst_q(const AstPtr& ast, const AstPtr& replacement);

// Sum of coefficient * e(row,col) terms; rows/cols are 1-based.
struct MatTerm {
    AstPtr coeff;
    int row, col;
};

struct MatExpr {
    int n = 4;
    std::vector<MatTerm> terms;
};

// Parses a matrix expression: a sum of terms, each a product/quotient chain
// containing exactly one e(i,j) factor ("0" denotes the zero matrix). Terms
// with the same (i,j) are merged by coefficient addition.
MatExpr parse_matrix(const std::string& text, int n = 4);

void collect_params(const MatExpr& m, std::vector<std::string>& out);

}  // namespace qact
