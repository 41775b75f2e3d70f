#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qact/basis.hpp"

using namespace qact;

namespace {
Scalar q() { return Scalar::q(); }
Mat u(int i, int j) { return Mat::unit(i, j); }
}  // namespace

TEST_CASE("matrix unit product rule e_ij e_kl = delta_jk e_il") {
    CHECK(u(1, 2) * u(2, 3) == u(1, 3));
    CHECK((u(2, 1) * u(2, 3)).is_zero());
    CHECK(u(2, 4) * u(4, 3) == u(2, 3));
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            for (int k = 1; k <= 4; ++k) {
                for (int l = 1; l <= 4; ++l) {
                    Mat prod = u(i, j) * u(k, l);
                    if (j == k) {
                        CHECK(prod == u(i, l));
                    } else {
                        CHECK(prod.is_zero());
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(Mat::unit(5, 1), IndexOutOfRange);
}

TEST_CASE("products from the 2.2 generator pair") {
    ParamEnv env;
    env["m"] = Scalar(5);
    Mat c12 = eval_matrix(parse_matrix("q*e(1,3)-m*e(2,4)"), env);
    Mat c21 = eval_matrix(parse_matrix("-m*e(2,1)+e(4,3)"), env);
    CHECK(c12 * c21 == u(2, 3) * Scalar(-5));            // -mu e23
    CHECK(c21 * c12 == u(2, 3) * (q() * Scalar(-5)));    // -q mu e23
    CHECK(Mat::identity(4) * c12 == c12);
}

TEST_CASE("commutators") {
    Mat d1 = Mat::identity(4);
    d1.at(1, 1) = q();
    CHECK(commutator(d1, d1).is_zero());
    CHECK(commutator(Mat::identity(4), d1).is_zero());

    // CASE 2.2 diagonal pair: [C11, C22] = mu (q-1) e23
    ParamEnv env;
    env["m"] = Scalar(7);
    Mat c11 = eval_matrix(
        parse_matrix("e(1,1)+q^-1*e(2,2)+e(3,3)+q^-1*e(4,4)"), env);
    Mat c22 = eval_matrix(
        parse_matrix("q^2*e(1,1)+q^2*e(2,2)+q*e(3,3)+q*e(4,4)-q*m*e(2,3)"), env);
    CHECK(commutator(c11, c22) == u(2, 3) * (Scalar(7) * (q() - Scalar(1))));
}

TEST_CASE("inverse") {
    Mat d = eval_matrix(parse_matrix("q^2*e(1,1)+q*e(2,2)+e(3,3)+e(4,4)"), {});
    Mat dinv = d.inverse();
    CHECK(d * dinv == Mat::identity(4));
    CHECK(dinv.at(1, 1) == q().pow(-2));
    CHECK(dinv.at(2, 2) == q().pow(-1));

    Mat nil = Mat::identity(4) + u(3, 4);
    CHECK(nil.inverse() == Mat::identity(4) - u(3, 4));

    CHECK_THROWS_AS(u(1, 2).inverse(), SingularMatrix);
    CHECK_FALSE(u(1, 2).is_invertible());
}

TEST_CASE("kron") {
    Mat i2 = Mat::identity(2);
    CHECK(kron(i2, i2) == Mat::identity(4));
    CHECK(kron(Mat::unit(1, 2, 2), Mat::unit(1, 1, 2)) == u(1, 3));
    // span of upper ox upper has dimension 9
    std::vector<Mat> prods;
    std::vector<std::pair<int, int>> upper = {{1, 1}, {1, 2}, {2, 2}};
    for (auto [i, j] : upper) {
        for (auto [k, l] : upper) {
            prods.push_back(kron(Mat::unit(i, j, 2), Mat::unit(k, l, 2)));
        }
    }
    CHECK(rref_mats(prods).dim() == 9);
}

TEST_CASE("rref basics") {
    VecK v(16);
    v[3] = q();
    v[7] = Scalar(2);
    VecK w(16);
    for (int k = 0; k < 16; ++k) w[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k)] * Scalar(2);
    Basis b = rref({v, w}, 16);
    CHECK(b.dim() == 1);
    CHECK(b.rows()[0][3] == Scalar(1));  // pivot normalized

    std::vector<VecK> units;
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) units.push_back(u(i, j).vectorize());
    }
    CHECK(rref(units, 16).dim() == 16);
}

TEST_CASE("rref is canonical under shuffles and idempotent") {
    std::uint64_t state = 1234;
    auto next = [&]() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        return z ^ (z >> 31);
    };
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<VecK> rows;
        int count = 2 + static_cast<int>(next() % 5);
        for (int r = 0; r < count; ++r) {
            VecK v(9);
            for (auto& s : v) {
                long c = static_cast<long>(next() % 5) - 2;
                s = Scalar(c) + (next() % 2 ? q() * Scalar(static_cast<long>(next() % 3)) : Scalar(0));
            }
            rows.push_back(std::move(v));
        }
        Basis b1 = rref(rows, 9);
        // shuffle
        for (std::size_t k = rows.size(); k > 1; --k) {
            std::swap(rows[k - 1], rows[next() % k]);
        }
        Basis b2 = rref(rows, 9);
        CHECK(b1 == b2);
        Basis again = rref(b1.rows(), 9);
        CHECK(again == b1);
        // membership: every original row reduces to zero
        for (const auto& r : rows) CHECK(b1.contains(r));
    }
}

TEST_CASE("vectorize is linear and invertible") {
    Mat a = u(1, 2) * q() + u(3, 3) * Scalar(5);
    Mat b = u(2, 4) * Scalar::i();
    VecK va = a.vectorize(), vb = b.vectorize();
    VecK sum = (a + b).vectorize();
    for (std::size_t k = 0; k < 16; ++k) CHECK(sum[k] == va[k] + vb[k]);
    CHECK(Mat::from_vec(va) == a);
}

TEST_CASE("matrix ring axioms on random triples") {
    std::uint64_t state = 777;
    auto next = [&]() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        return z ^ (z >> 31);
    };
    auto rand_mat = [&]() {
        Mat m(4);
        for (int i = 1; i <= 4; ++i) {
            for (int j = 1; j <= 4; ++j) {
                if (next() % 3 == 0) {
                    m.at(i, j) = Scalar(static_cast<long>(next() % 7) - 3) +
                                 q() * Scalar(static_cast<long>(next() % 3));
                }
            }
        }
        return m;
    };
    for (int iter = 0; iter < 40; ++iter) {
        Mat a = rand_mat(), b = rand_mat(), c = rand_mat();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}
