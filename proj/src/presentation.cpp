#include "qact/presentation.hpp"

#include <fstream>
#include <sstream>

namespace qact {

const char* gen_name(GenSymbol g) {
    switch (g) {
        case GenSymbol::c11: return "c11";
        case GenSymbol::c12: return "c12";
        case GenSymbol::c21: return "c21";
        case GenSymbol::c22: return "c22";
    }
    return "?";
}

namespace {

bool gen_from_name(const std::string& s, GenSymbol& out) {
    if (s == "c11") out = GenSymbol::c11;
    else if (s == "c12") out = GenSymbol::c12;
    else if (s == "c21") out = GenSymbol::c21;
    else if (s == "c22") out = GenSymbol::c22;
    else return false;
    return true;
}

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

void check_scalar_factor(const AstPtr& x) {
    std::vector<std::string> params;
    collect_params(x, params);
    for (const auto& p : params) {
        GenSymbol g;
        if (gen_from_name(p, g)) {
            throw Error("generator symbol inside a scalar coefficient: " + p);
        }
        throw Error("relation coefficients may involve q only, found parameter: " + p);
    }
}

// Splits one product chain into scalar factors and an ordered generator word.
void split_product(const AstPtr& x, std::vector<AstPtr>& scalars,
                   std::vector<GenSymbol>& word) {
    switch (x->kind) {
        case ExprNode::Kind::Mul:
            split_product(x->a, scalars, word);
            split_product(x->b, scalars, word);
            return;
        case ExprNode::Kind::Div:
            split_product(x->a, scalars, word);
            check_scalar_factor(x->b);
            scalars.push_back(ExprNode::div(ExprNode::number(Rat(1)), x->b));
            return;
        case ExprNode::Kind::Neg:
            scalars.push_back(ExprNode::number(Rat(-1)));
            split_product(x->a, scalars, word);
            return;
        case ExprNode::Kind::Param: {
            GenSymbol g;
            if (gen_from_name(x->name, g)) {
                word.push_back(g);
                return;
            }
            check_scalar_factor(x);
            return;
        }
        default:
            check_scalar_factor(x);
            scalars.push_back(x);
    }
}

Relation parse_relation_line(const std::string& name, const std::string& body) {
    Relation rel;
    rel.name = name;
    AstPtr root = parse_expr(body);
    std::vector<std::pair<bool, AstPtr>> sum;
    flatten_sum(root, false, sum);
    for (auto& [neg, term] : sum) {
        std::vector<AstPtr> scalars;
        RelTerm t;
        split_product(term, scalars, t.word);
        if (t.word.empty()) {
            throw Error("relation " + name + " has a term with no generator word");
        }
        AstPtr c;
        for (const auto& s : scalars) c = c ? ExprNode::mul(c, s) : s;
        if (!c) c = ExprNode::number(Rat(1));
        if (neg) c = ExprNode::neg(c);
        t.coeff = c;
        rel.terms.push_back(std::move(t));
    }
    return rel;
}

}  // namespace

std::vector<Relation> parse_relations(const std::string& text) {
    std::vector<Relation> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw Error("relation line without ':': " + line);
        std::string name = line.substr(a, colon - a);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        out.push_back(parse_relation_line(name, line.substr(colon + 1)));
    }
    if (out.empty()) throw Error("relation file contains no relations");
    return out;
}

std::vector<Relation> load_relations(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open relation file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_relations(ss.str());
}

Mat eval_relation(const Relation& rel, const Assignment& asg, const ParamEnv& env) {
    int n = asg.m[0].n();
    Mat acc(n);
    for (const auto& t : rel.terms) {
        Mat prod = asg[t.word.front()];
        for (std::size_t k = 1; k < t.word.size(); ++k) prod = prod * asg[t.word[k]];
        acc = acc + prod * eval_expr(t.coeff, env);
    }
    return acc;
}

std::vector<RelationStatus> check_all(const std::vector<Relation>& rels, const Assignment& asg,
                                      const ParamEnv& env) {
    std::vector<RelationStatus> out;
    out.reserve(rels.size());
    for (const auto& r : rels) {
        Mat res = eval_relation(r, asg, env);
        bool zero = res.is_zero();
        out.push_back(RelationStatus{r.name, std::move(res), zero});
    }
    return out;
}

std::vector<Relation> flip_q_convention(const std::vector<Relation>& rels) {
    AstPtr inv_q = ExprNode::div(ExprNode::number(Rat(1)), ExprNode::q());
    std::vector<Relation> out;
    out.reserve(rels.size());
    for (const auto& r : rels) {
        Relation f;
        f.name = r.name;
        for (const auto& t : r.terms) {
            f.terms.push_back(RelTerm{subst_q(t.coeff, inv_q), t.word});
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace qact
