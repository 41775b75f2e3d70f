#include "qact/expr.hpp"

#include <algorithm>
#include <cctype>

namespace qact {

namespace {

AstPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

}  // namespace

AstPtr ExprNode::number(Rat v) {
    ExprNode n{Kind::Number};
    n.value = std::move(v);
    return make(std::move(n));
}
AstPtr ExprNode::imag() { return make(ExprNode{Kind::Imag}); }
AstPtr ExprNode::q() { return make(ExprNode{Kind::Q}); }
AstPtr ExprNode::param(std::string nm) {
    ExprNode n{Kind::Param};
    n.name = std::move(nm);
    return make(std::move(n));
}
AstPtr ExprNode::neg(AstPtr x) {
    ExprNode n{Kind::Neg};
    n.a = std::move(x);
    return make(std::move(n));
}
AstPtr ExprNode::add(AstPtr x, AstPtr y) {
    ExprNode n{Kind::Add};
    n.a = std::move(x);
    n.b = std::move(y);
    return make(std::move(n));
}
AstPtr ExprNode::sub(AstPtr x, AstPtr y) {
    ExprNode n{Kind::Sub};
    n.a = std::move(x);
    n.b = std::move(y);
    return make(std::move(n));
}
AstPtr ExprNode::mul(AstPtr x, AstPtr y) {
    ExprNode n{Kind::Mul};
    n.a = std::move(x);
    n.b = std::move(y);
    return make(std::move(n));
}
AstPtr ExprNode::div(AstPtr x, AstPtr y) {
    ExprNode n{Kind::Div};
    n.a = std::move(x);
    n.b = std::move(y);
    return make(std::move(n));
}
AstPtr ExprNode::pow(AstPtr x, int e) {
    ExprNode n{Kind::Pow};
    n.a = std::move(x);
    n.expo = e;
    return make(std::move(n));
}
AstPtr ExprNode::unit(int i, int j) {
    ExprNode n{Kind::Unit};
    n.row = i;
    n.col = j;
    return make(std::move(n));
}

bool ast_equal(const AstPtr& x, const AstPtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case ExprNode::Kind::Number: return x->value == y->value;
        case ExprNode::Kind::Imag:
        case ExprNode::Kind::Q: return true;
        case ExprNode::Kind::Param: return x->name == y->name;
        case ExprNode::Kind::Neg: return ast_equal(x->a, y->a);
        case ExprNode::Kind::Pow: return x->expo == y->expo && ast_equal(x->a, y->a);
        case ExprNode::Kind::Unit: return x->row == y->row && x->col == y->col;
        default: return ast_equal(x->a, y->a) && ast_equal(x->b, y->b);
    }
}

namespace {

class Parser {
public:
    Parser(const std::string& text, bool units) : s_(text), units_(units) {}

    AstPtr run() {
        AstPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("end of input or operator");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_, expected,
                         "syntax error at byte " + std::to_string(pos_) + ": expected " +
                             expected);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    AstPtr expr() {
        AstPtr lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = ExprNode::add(lhs, term());
            } else if (eat('-')) {
                lhs = ExprNode::sub(lhs, term());
            } else {
                return lhs;
            }
        }
    }

    AstPtr term() {
        AstPtr lhs = factor();
        for (;;) {
            if (eat('*')) {
                lhs = ExprNode::mul(lhs, factor());
            } else if (eat('/')) {
                lhs = ExprNode::div(lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    AstPtr factor() {
        if (eat('-')) return ExprNode::neg(factor());
        return power();
    }

    AstPtr power() {
        AstPtr base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            int e = integer("integer exponent");
            return ExprNode::pow(base, neg ? -e : e);
        }
        return base;
    }

    int integer(const std::string& what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail(what);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) fail("smaller integer literal");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    AstPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("number, parameter, 'q', 'i' or '('");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            AstPtr e = expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ExprNode::number(Rat(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                ++pos_;
            }
            std::string name = s_.substr(start, pos_ - start);
            if (name == "q") return ExprNode::q();
            if (name == "i") return ExprNode::imag();
            if (units_ && name == "e" && peek() == '(') {
                eat('(');
                int i = integer("row index");
                if (!eat(',')) fail("','");
                int j = integer("column index");
                if (!eat(')')) fail("')'");
                return ExprNode::unit(i, j);
            }
            return ExprNode::param(name);
        }
        fail("number, parameter, 'q', 'i' or '('");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    bool units_;
};

int precedence(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub: return 1;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::Div: return 2;
        case ExprNode::Kind::Neg: return 3;
        case ExprNode::Kind::Pow: return 4;
        default: return 5;
    }
}

void print_rec(const AstPtr& x, std::string& out, int parent_prec, bool right_side) {
    int prec = precedence(x->kind);
    bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    if (parens) out += '(';
    switch (x->kind) {
        case ExprNode::Kind::Number:
            if (x->value < 0) {
                // negative literals only arise from programmatic ASTs
                out += "(0-" + x->value.get_str().substr(1) + ")";
            } else {
                out += x->value.get_str();
            }
            break;
        case ExprNode::Kind::Imag: out += 'i'; break;
        case ExprNode::Kind::Q: out += 'q'; break;
        case ExprNode::Kind::Param: out += x->name; break;
        case ExprNode::Kind::Unit:
            out += "e(" + std::to_string(x->row) + "," + std::to_string(x->col) + ")";
            break;
        case ExprNode::Kind::Neg:
            out += '-';
            print_rec(x->a, out, precedence(ExprNode::Kind::Neg), true);
            break;
        case ExprNode::Kind::Add:
            print_rec(x->a, out, prec, false);
            out += '+';
            print_rec(x->b, out, prec, true);
            break;
        case ExprNode::Kind::Sub:
            print_rec(x->a, out, prec, false);
            out += '-';
            print_rec(x->b, out, prec, true);
            break;
        case ExprNode::Kind::Mul:
            print_rec(x->a, out, prec, false);
            out += '*';
            print_rec(x->b, out, prec, true);
            break;
        case ExprNode::Kind::Div:
            print_rec(x->a, out, prec, false);
            out += '/';
            print_rec(x->b, out, prec, true);
            break;
        case ExprNode::Kind::Pow: {
            print_rec(x->a, out, precedence(ExprNode::Kind::Pow) + 1, false);
            out += '^';
            if (x->expo < 0) {
                out += '-' + std::to_string(-x->expo);
            } else {
                out += std::to_string(x->expo);
            }
            break;
        }
    }
    if (parens) out += ')';
}

}  // namespace

AstPtr parse_expr(const std::string& text) { return Parser(text, false).run(); }

std::string print_expr(const AstPtr& ast) {
    std::string out;
    print_rec(ast, out, 0, false);
    return out;
}

Scalar eval_expr(const AstPtr& ast, const ParamEnv& env) {
    switch (ast->kind) {
        case ExprNode::Kind::Number: return Scalar(Coeff(ast->value));
        case ExprNode::Kind::Imag: return Scalar::i();
        case ExprNode::Kind::Q: return Scalar::q();
        case ExprNode::Kind::Param: {
            auto it = env.find(ast->name);
            if (it == env.end()) throw UnboundParameter(ast->name);
            return it->second;
        }
        case ExprNode::Kind::Neg: return -eval_expr(ast->a, env);
        case ExprNode::Kind::Add: return eval_expr(ast->a, env) + eval_expr(ast->b, env);
        case ExprNode::Kind::Sub: return eval_expr(ast->a, env) - eval_expr(ast->b, env);
        case ExprNode::Kind::Mul: return eval_expr(ast->a, env) * eval_expr(ast->b, env);
        case ExprNode::Kind::Div: return eval_expr(ast->a, env) / eval_expr(ast->b, env);
        case ExprNode::Kind::Pow: return eval_expr(ast->a, env).pow(ast->expo);
        case ExprNode::Kind::Unit:
            throw Error("matrix unit in scalar context");
    }
    throw Error("unreachable");
}

void collect_params(const AstPtr& ast, std::vector<std::string>& out) {
    if (!ast) return;
    if (ast->kind == ExprNode::Kind::Param) {
        if (std::find(out.begin(), out.end(), ast->name) == out.end()) out.push_back(ast->name);
    }
    collect_params(ast->a, out);
    collect_params(ast->b, out);
}

AstPtr subst_q(const AstPtr& ast, const AstPtr& replacement) {
    if (!ast) return ast;
    switch (ast->kind) {
        case ExprNode::Kind::Q: return replacement;
        case ExprNode::Kind::Number:
        case ExprNode::Kind::Imag:
        case ExprNode::Kind::Param:
        case ExprNode::Kind::Unit: return ast;
        case ExprNode::Kind::Neg: return ExprNode::neg(subst_q(ast->a, replacement));
        case ExprNode::Kind::Add:
            return ExprNode::add(subst_q(ast->a, replacement), subst_q(ast->b, replacement));
        case ExprNode::Kind::Sub:
            return ExprNode::sub(subst_q(ast->a, replacement), subst_q(ast->b, replacement));
        case ExprNode::Kind::Mul:
            return ExprNode::mul(subst_q(ast->a, replacement), subst_q(ast->b, replacement));
        case ExprNode::Kind::Div:
            return ExprNode::div(subst_q(ast->a, replacement), subst_q(ast->b, replacement));
        case ExprNode::Kind::Pow: return ExprNode::pow(subst_q(ast->a, replacement), ast->expo);
    }
    throw Error("unreachable");
}

namespace {

// Splits a parsed tree into additive terms, each with a sign.
void flatten_sum(const AstPtr& x, bool negate, std::vector<std::pair<bool, AstPtr>>& out) {
    switch (x->kind) {
        case ExprNode::Kind::Add:
            flatten_sum(x->a, negate, out);
            flatten_sum(x->b, negate, out);
            return;
        case ExprNode::Kind::Sub:
            flatten_sum(x->a, negate, out);
            flatten_sum(x->b, !negate, out);
            return;
        case ExprNode::Kind::Neg:
            flatten_sum(x->a, !negate, out);
            return;
        default:
            out.emplace_back(negate, x);
            return;
    }
}

void has_unit_check(const AstPtr& x) {
    if (!x) return;
    if (x->kind == ExprNode::Kind::Unit) throw Error("matrix unit nested inside a scalar factor");
    has_unit_check(x->a);
    has_unit_check(x->b);
}

// Walks a product/quotient chain, extracting the single e(i,j) factor.
// Units may not be divided by, raised to powers, or nested in sums.
void split_term(const AstPtr& x, bool in_denominator, std::vector<AstPtr>& scalar_factors,
                const ExprNode** unit) {
    switch (x->kind) {
        case ExprNode::Kind::Unit:
            if (in_denominator) throw Error("matrix unit in a denominator");
            if (*unit) throw Error("more than one matrix unit in a term");
            *unit = x.get();
            return;
        case ExprNode::Kind::Mul:
            split_term(x->a, in_denominator, scalar_factors, unit);
            split_term(x->b, in_denominator, scalar_factors, unit);
            return;
        case ExprNode::Kind::Div: {
            split_term(x->a, in_denominator, scalar_factors, unit);
            std::vector<AstPtr> denom;
            const ExprNode* u = nullptr;
            split_term(x->b, true, denom, &u);
            AstPtr d;
            for (const auto& f : denom) d = d ? ExprNode::mul(d, f) : f;
            if (d) scalar_factors.push_back(ExprNode::div(ExprNode::number(Rat(1)), d));
            return;
        }
        case ExprNode::Kind::Neg:
            scalar_factors.push_back(ExprNode::number(Rat(-1)));
            split_term(x->a, in_denominator, scalar_factors, unit);
            return;
        default:
            has_unit_check(x);
            scalar_factors.push_back(x);
            return;
    }
}

}  // namespace

MatExpr parse_matrix(const std::string& text, int n) {
    AstPtr root = Parser(text, true).run();
    MatExpr result;
    result.n = n;

    // literal zero matrix
    if (root->kind == ExprNode::Kind::Number && root->value == 0) return result;

    std::vector<std::pair<bool, AstPtr>> sum;
    flatten_sum(root, false, sum);
    for (auto& [negated, term] : sum) {
        std::vector<AstPtr> factors;
        const ExprNode* unit = nullptr;
        split_term(term, false, factors, &unit);
        if (!unit) throw Error("matrix term without a matrix unit: " + print_expr(term));
        if (unit->row < 1 || unit->row > n || unit->col < 1 || unit->col > n) {
            throw IndexOutOfRange("matrix unit index out of 1.." + std::to_string(n) + ": e(" +
                                  std::to_string(unit->row) + "," + std::to_string(unit->col) +
                                  ")");
        }
        AstPtr coeff;
        for (const auto& f : factors) coeff = coeff ? ExprNode::mul(coeff, f) : f;
        if (!coeff) coeff = ExprNode::number(Rat(1));
        if (negated) coeff = ExprNode::neg(coeff);
        bool merged = false;
        for (auto& t : result.terms) {
            if (t.row == unit->row && t.col == unit->col) {
                t.coeff = ExprNode::add(t.coeff, coeff);
                merged = true;
                break;
            }
        }
        if (!merged) result.terms.push_back(MatTerm{coeff, unit->row, unit->col});
    }
    return result;
}

void collect_params(const MatExpr& m, std::vector<std::string>& out) {
    for (const auto& t : m.terms) collect_params(t.coeff, out);
}

}  // namespace qact
