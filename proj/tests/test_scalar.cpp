#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qact/scalar.hpp"

using namespace qact;

namespace {

// deterministic generator for the randomized axiom checks
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long small(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Coeff coeff() {
        Rat re(small(-4, 4), small(1, 3));
        re.canonicalize();
        Rat im(small(-2, 2), small(1, 2));
        im.canonicalize();
        return Coeff(re, im);
    }
    QPoly poly(int maxdeg) {
        std::vector<Coeff> cs;
        int d = static_cast<int>(next() % static_cast<std::uint64_t>(maxdeg + 1));
        for (int k = 0; k <= d; ++k) cs.push_back(coeff());
        return QPoly(std::move(cs));
    }
    Scalar scalar() {
        QPoly den = poly(2);
        while (den.is_zero()) den = poly(2);
        return Scalar(poly(2), den);
    }
};

Scalar q() { return Scalar::q(); }

}  // namespace

TEST_CASE("coefficient field basics") {
    Coeff i = Coeff::i();
    CHECK(i * i == Coeff(-1));
    CHECK((i * i.inverse()).is_one());
    CHECK_THROWS_AS(Coeff(0).inverse(), DivisionByZero);
    Coeff z(Rat(3, 4), Rat(-2, 5));
    CHECK((z * z.inverse()).is_one());
}

TEST_CASE("qpoly arithmetic and gcd") {
    QPoly one = QPoly::one();
    QPoly qq = QPoly::q();
    CHECK((qq - qq).is_zero());
    CHECK((qq * qq).degree() == 2);
    QPoly a = (qq - one) * (qq + one);  // q^2 - 1
    QPoly g = poly_gcd(a, qq - one);
    CHECK(g == (qq - one));  // already monic
    QPoly quot, rem;
    QPoly::divmod(a, qq + one, quot, rem);
    CHECK(rem.is_zero());
    CHECK(quot == qq - one);
}

TEST_CASE("scalar canonical form") {
    // q + (1 - q) = 1
    Scalar s = q() + (Scalar(1) - q());
    CHECK(s == Scalar(1));
    // 0 + x = x
    Scalar x = Scalar::from_frac(3, 7) * q();
    CHECK(Scalar(0) + x == x);
    // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
    Scalar lhs = (q() - Scalar(1)).inverse() + (q() + Scalar(1)).inverse();
    Scalar rhs = (q() * Scalar(2)) / (q() * q() - Scalar(1));
    CHECK(lhs == rhs);
}

TEST_CASE("scalar multiplication examples") {
    CHECK(q() * q().inverse() == Scalar(1));
    CHECK((q() - Scalar(1)) * (q() + Scalar(1)) == q() * q() - Scalar(1));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("scalar inverse examples") {
    Scalar q2 = q() * q();
    CHECK(q2.inverse() * q2 == Scalar(1));
    CHECK(q2.inverse() == Scalar(QPoly::one(), (QPoly::q() * QPoly::q())));
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    // (q^2-1)/(q-1) reduces, so its inverse is 1/(q+1)
    Scalar r = Scalar(q() * q() - Scalar(1)) / (q() - Scalar(1));
    CHECK(r == q() + Scalar(1));
    CHECK(r.inverse() == (q() + Scalar(1)).inverse());
}

TEST_CASE("eval_at and poles") {
    Scalar s = Scalar(1) - q();
    CHECK(s.eval_at(Coeff(2)) == Coeff(-1));
    Scalar pole = (q() - Scalar(1)).inverse();
    CHECK_THROWS_AS(pole.eval_at(Coeff(1)), PoleError);
    Scalar p = q() * q() + q();
    CHECK(p.eval_at(Coeff(3)) == Coeff(12));
}

TEST_CASE("field axioms on randomized triples") {
    Rng rng{42};
    for (int iter = 0; iter < 1000; ++iter) {
        Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar(0) == a);
        CHECK(a * Scalar(1) == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK_FALSE(a.is_zero());
        }
    }
}

TEST_CASE("canonicalization is idempotent") {
    Rng rng{7};
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = rng.scalar();
        // rebuilding from the stored num/den must reproduce the same value
        Scalar rebuilt(a.num(), a.den());
        CHECK(rebuilt == a);
        bool canonical_den = rebuilt.den().is_monic() || rebuilt.is_zero();
        CHECK(canonical_den);
        if (!a.is_zero()) {
            CHECK(poly_gcd(a.num(), a.den()).degree() == 0);
        }
    }
}
