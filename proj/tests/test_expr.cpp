#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qact/expr.hpp"
#include "qact/mat.hpp"

using namespace qact;

TEST_CASE("parsing basics") {
    AstPtr p = parse_expr("q^2");
    CHECK(p->kind == ExprNode::Kind::Pow);
    CHECK(p->a->kind == ExprNode::Kind::Q);
    CHECK(p->expo == 2);

    AstPtr prod = parse_expr("q*l*d_");
    CHECK(prod->kind == ExprNode::Kind::Mul);
    CHECK(prod->b->name == "d_");

    AstPtr g = parse_expr("(1-q)*m");
    CHECK(g->kind == ExprNode::Kind::Mul);
    CHECK(g->a->kind == ExprNode::Kind::Sub);
}

TEST_CASE("precedence: caret binds tighter than unary minus") {
    // -q^2 means -(q^2)
    Scalar v = eval_expr(parse_expr("-q^2"), {});
    CHECK(v == -(Scalar::q() * Scalar::q()));
    // q^-2 has a negative literal exponent
    Scalar w = eval_expr(parse_expr("q^-2"), {});
    CHECK(w == Scalar::q().pow(-2));
}

TEST_CASE("syntax errors carry offsets") {
    CHECK_THROWS_AS(parse_expr("q+"), ParseError);
    CHECK_THROWS_AS(parse_expr("(q"), ParseError);
    CHECK_THROWS_AS(parse_expr("q q"), ParseError);  // implicit multiplication rejected
    CHECK_THROWS_AS(parse_expr("q^a"), ParseError);  // exponent must be an integer literal
    try {
        parse_expr("q*");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
        CHECK(!e.expected.empty());
    }
}

TEST_CASE("eval") {
    ParamEnv env;
    env["a"] = Scalar(3);
    CHECK(eval_expr(parse_expr("q^2/a"), env) ==
          Scalar::q() * Scalar::q() / Scalar(3));
    CHECK_THROWS_AS(eval_expr(parse_expr("b"), env), UnboundParameter);
    ParamEnv env2;
    env2["l"] = Scalar(2);
    env2["d_"] = Scalar(3);
    CHECK(eval_expr(parse_expr("q*l*d_"), env2) == Scalar::q() * Scalar(6));
    CHECK(eval_expr(parse_expr("i*i"), {}) == Scalar(-1));
    CHECK_THROWS_AS(eval_expr(parse_expr("1/(q-q)"), {}), DivisionByZero);
}

TEST_CASE("print/parse round trip") {
    const char* samples[] = {
        "q^2",          "a*e_type",  "q*l*d_",     "(1-q)*m",      "q^-2*a",
        "-(a+b)*q",     "a/b/g",     "a-(b-g)",    "1/(q-1)+1/(q+1)",
        "q^2/a",        "-q^3",      "i*q-2/3*a",  "(a+b)^3",
    };
    for (const char* s : samples) {
        AstPtr once = parse_expr(s);
        AstPtr twice = parse_expr(print_expr(once));
        CHECK_MESSAGE(ast_equal(once, twice), "round trip failed for ", s);
    }
}

TEST_CASE("eval is a homomorphism on random expression pairs") {
    // random small ASTs over {q, a, rationals}
    std::uint64_t state = 99;
    auto next = [&]() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        return z ^ (z >> 31);
    };
    std::function<AstPtr(int)> gen = [&](int depth) -> AstPtr {
        switch (next() % (depth > 0 ? 6 : 3)) {
            case 0: return ExprNode::number(Rat(static_cast<long>(next() % 7) + 1));
            case 1: return ExprNode::q();
            case 2: return ExprNode::param("a");
            case 3: return ExprNode::add(gen(depth - 1), gen(depth - 1));
            case 4: return ExprNode::mul(gen(depth - 1), gen(depth - 1));
            default: return ExprNode::neg(gen(depth - 1));
        }
    };
    ParamEnv env;
    env["a"] = Scalar::from_frac(5, 3);
    for (int iter = 0; iter < 200; ++iter) {
        AstPtr x = gen(3), y = gen(3);
        CHECK(eval_expr(ExprNode::add(x, y), env) == eval_expr(x, env) + eval_expr(y, env));
        CHECK(eval_expr(ExprNode::mul(x, y), env) == eval_expr(x, env) * eval_expr(y, env));
        Scalar yv = eval_expr(y, env);
        if (!yv.is_zero()) {
            CHECK(eval_expr(ExprNode::div(x, y), env) == eval_expr(x, env) / yv);
        }
    }
}

TEST_CASE("matrix expressions") {
    MatExpr m = parse_matrix("a*e(1,2)+b*e(2,3)+g*e(2,4)");
    CHECK(m.terms.size() == 3);
    ParamEnv env;
    env["a"] = Scalar(2);
    env["b"] = Scalar(3);
    env["g"] = Scalar(5);
    Mat mm = eval_matrix(m, env);
    CHECK(mm.at(1, 2) == Scalar(2));
    CHECK(mm.at(2, 3) == Scalar(3));
    CHECK(mm.at(2, 4) == Scalar(5));
    CHECK(mm.at(1, 1).is_zero());

    MatExpr ident = parse_matrix("1*e(1,1)+1*e(2,2)+1*e(3,3)+1*e(4,4)");
    CHECK(eval_matrix(ident, {}) == Mat::identity(4));

    MatExpr two = parse_matrix("q*e(1,3) - m*e(2,4)");
    CHECK(two.terms.size() == 2);
    ParamEnv env2;
    env2["m"] = Scalar(5);
    Mat t = eval_matrix(two, env2);
    CHECK(t.at(1, 3) == Scalar::q());
    CHECK(t.at(2, 4) == Scalar(-5));

    CHECK(parse_matrix("0").terms.empty());
    CHECK_THROWS_AS(parse_matrix("e(0,2)"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_matrix("e(1,5)"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_matrix("q+q"), Error);           // term without a unit
    CHECK_THROWS_AS(parse_matrix("e(1,1)*e(2,2)"), Error); // two units in one term

    // duplicate positions merge by coefficient addition
    MatExpr dup = parse_matrix("q*e(1,1)+e(1,1)");
    CHECK(dup.terms.size() == 1);
    CHECK(eval_matrix(dup, {}).at(1, 1) == Scalar::q() + Scalar(1));
}

TEST_CASE("matrix expression evaluation matches the sum of its terms") {
    const char* srcs[] = {
        "q^2*e(1,1)+q*e(2,2)+e(3,3)+e(4,4)",
        "-m*e(2,1)+e(4,3)",
        "a*e(1,2)+b*e(2,4)-q^2*e(3,4)",
    };
    ParamEnv env;
    env["a"] = Scalar(7);
    env["b"] = Scalar::from_frac(-2, 3);
    env["m"] = Scalar(4);
    for (const char* s : srcs) {
        MatExpr m = parse_matrix(s);
        Mat direct = eval_matrix(m, env);
        Mat assembled(4);
        for (const auto& t : m.terms) {
            assembled = assembled + Mat::unit(t.row, t.col) * eval_expr(t.coeff, env);
        }
        CHECK(direct == assembled);
    }
}
