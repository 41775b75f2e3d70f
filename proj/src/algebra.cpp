#include "qact/algebra.hpp"

#include <cmath>

namespace qact {

Basis unital_closure(const std::vector<Mat>& gens) {
    if (gens.empty()) throw Error("unital_closure requires at least one generator");
    int n = gens.front().n();
    for (const auto& g : gens) {
        if (g.n() != n) throw DimensionMismatch("generators of mixed dimension");
    }
    Basis b(n * n);
    b.insert(Mat::identity(n).vectorize());
    for (const auto& g : gens) b.insert(g.vectorize());
    bool grew = true;
    while (grew && b.dim() < n * n) {
        grew = false;
        auto mats = b.matrices();
        for (const auto& m : mats) {
            for (const auto& g : gens) {
                if (b.insert((m * g).vectorize())) grew = true;
                if (b.insert((g * m).vectorize())) grew = true;
            }
        }
    }
    return b;
}

Basis centralizer(const Basis& b) {
    int amb = b.ambient();
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(amb))));
    if (n * n != amb || n == 0) throw DimensionMismatch("centralizer ambient is not square");

    // rows of the stacked commutator system, one per (B, i, l)
    Basis system(amb);
    for (const auto& row : b.rows()) {
        Mat B = Mat::from_vec(row);
        for (int i = 1; i <= n; ++i) {
            for (int l = 1; l <= n; ++l) {
                VecK constraint(static_cast<std::size_t>(amb));
                for (int r = 1; r <= n; ++r) {
                    for (int s = 1; s <= n; ++s) {
                        Scalar c(0);
                        if (i == r) c += B.at(s, l);
                        if (s == l) c -= B.at(i, r);
                        constraint[static_cast<std::size_t>(r - 1) * n + (s - 1)] = std::move(c);
                    }
                }
                system.insert(std::move(constraint));
            }
        }
    }

    // nullspace from the RREF of the system
    std::vector<bool> is_pivot(static_cast<std::size_t>(amb), false);
    for (int p : system.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    Basis null(amb);
    for (int f = 0; f < amb; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        VecK v(static_cast<std::size_t>(amb));
        v[static_cast<std::size_t>(f)] = Scalar(1);
        for (std::size_t r = 0; r < system.rows().size(); ++r) {
            const Scalar& c = system.rows()[r][static_cast<std::size_t>(f)];
            if (!c.is_zero()) {
                v[static_cast<std::size_t>(system.pivots()[r])] = -c;
            }
        }
        null.insert(std::move(v));
    }
    return null;
}

namespace {

void flatten_sum(const AstPtr& x, bool neg, std::vector<std::pair<bool, AstPtr>>& out) {
    switch (x->kind) {
        case ExprNode::Kind::Add:
            flatten_sum(x->a, neg, out);
            flatten_sum(x->b, neg, out);
            return;
        case ExprNode::Kind::Sub:
            flatten_sum(x->a, neg, out);
            flatten_sum(x->b, !neg, out);
            return;
        case ExprNode::Kind::Neg:
            flatten_sum(x->a, !neg, out);
            return;
        default: out.emplace_back(neg, x);
    }
}

void no_symbols_check(const AstPtr& x, const std::set<std::string>& params) {
    if (!x) return;
    if (x->kind == ExprNode::Kind::Param && !params.count(x->name)) {
        throw Error("pattern symbol nested inside a coefficient: " + x->name);
    }
    no_symbols_check(x->a, params);
    no_symbols_check(x->b, params);
}

void split_product(const AstPtr& x, const std::set<std::string>& params,
                   std::vector<AstPtr>& scalars, std::string& symbol) {
    switch (x->kind) {
        case ExprNode::Kind::Mul:
            split_product(x->a, params, scalars, symbol);
            split_product(x->b, params, scalars, symbol);
            return;
        case ExprNode::Kind::Div:
            split_product(x->a, params, scalars, symbol);
            no_symbols_check(x->b, params);
            scalars.push_back(ExprNode::div(ExprNode::number(Rat(1)), x->b));
            return;
        case ExprNode::Kind::Neg:
            scalars.push_back(ExprNode::number(Rat(-1)));
            split_product(x->a, params, scalars, symbol);
            return;
        case ExprNode::Kind::Param:
            if (!params.count(x->name)) {
                if (!symbol.empty()) {
                    throw Error("pattern term with two symbols: " + symbol + ", " + x->name);
                }
                symbol = x->name;
                return;
            }
            scalars.push_back(x);
            return;
        default:
            no_symbols_check(x, params);
            scalars.push_back(x);
    }
}

}  // namespace

Pattern parse_pattern(const std::vector<std::vector<std::string>>& cells,
                      const std::set<std::string>& params) {
    Pattern p;
    p.n = static_cast<int>(cells.size());
    int fresh = 0;
    auto note_symbol = [&](const std::string& s) {
        for (const auto& k : p.symbols) {
            if (k == s) return;
        }
        p.symbols.push_back(s);
    };
    for (const auto& row : cells) {
        if (static_cast<int>(row.size()) != p.n) throw Error("pattern grid is not square");
        p.cells.emplace_back();
        for (const auto& cell : row) {
            p.cells.back().emplace_back();
            auto& terms = p.cells.back().back();
            std::string trimmed;
            for (char c : cell) {
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
            }
            if (trimmed == "0") continue;
            if (trimmed == "*") {
                std::string s = "_a" + std::to_string(fresh++);
                note_symbol(s);
                terms.push_back(PatternTerm{s, ExprNode::number(Rat(1))});
                continue;
            }
            AstPtr root = parse_expr(cell);
            std::vector<std::pair<bool, AstPtr>> sum;
            flatten_sum(root, false, sum);
            for (auto& [neg, term] : sum) {
                std::vector<AstPtr> scalars;
                std::string symbol;
                split_product(term, params, scalars, symbol);
                if (symbol.empty()) {
                    throw Error("pattern term without a symbol in cell: " + cell);
                }
                AstPtr c;
                for (const auto& s : scalars) c = c ? ExprNode::mul(c, s) : s;
                if (!c) c = ExprNode::number(Rat(1));
                if (neg) c = ExprNode::neg(c);
                note_symbol(symbol);
                terms.push_back(PatternTerm{symbol, c});
            }
        }
    }
    return p;
}

Basis pattern_space(const Pattern& p, const ParamEnv& env) {
    std::vector<Mat> mats;
    for (const auto& sym : p.symbols) {
        Mat m(p.n);
        for (int i = 1; i <= p.n; ++i) {
            for (int j = 1; j <= p.n; ++j) {
                for (const auto& t : p.cells[static_cast<std::size_t>(i - 1)]
                                            [static_cast<std::size_t>(j - 1)]) {
                    if (t.symbol == sym) m.at(i, j) += eval_expr(t.coeff, env);
                }
            }
        }
        mats.push_back(std::move(m));
    }
    if (mats.empty()) return Basis(p.n * p.n);
    return rref_mats(mats);
}

}  // namespace qact
