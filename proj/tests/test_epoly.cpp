#include <doctest.h>

#include <random>

#include "cylschur/epoly.hpp"
#include "cylschur/xpoly.hpp"

using namespace cylschur;

TEST_CASE("ring operations") {
    EPoly e1 = EPoly::gen(2, 1);
    EPoly p = ring_ops(e1, e1, RingOp::mul, 4);
    EPoly::Key k(2, 0);
    k[0] = 2;
    CHECK(p.coeff(k) == 1);
    CHECK(p.terms().size() == 1);

    EPoly one = EPoly::constant(2, 1);
    CHECK(ring_ops(one + e1, one + e1, RingOp::sub, {}).is_zero());
    CHECK(EPoly::gen(1, 2).is_zero());  // e_2 = 0 when n = 1
    CHECK_THROWS(ring_ops(EPoly::gen(1, 1), EPoly::gen(2, 1), RingOp::add, {}));
}

TEST_CASE("degree cap truncates eagerly") {
    EPoly e2 = EPoly::gen(3, 2);
    EPoly p = EPoly::mul(e2, e2, 3);  // degree 4 > 3
    CHECK(p.is_zero());
}

TEST_CASE("f kernel examples") {
    // f_0 with n = 1 is 1 + e_1^2
    EPoly f0 = f_kernel(1, 0);
    CHECK(f0 == EPoly::constant(1, 1) + EPoly::gen(1, 1) * EPoly::gen(1, 1));
    // index symmetry
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= n; ++r) CHECK(f_kernel(n, r) == f_kernel(n, -r));
    // F_{2,6} vanishes for n = 1
    CHECK(big_f(1, 2, 6).is_zero());
}

TEST_CASE("big F symmetry and degeneration") {
    for (int n = 1; n <= 4; ++n)
        for (int N = 2; N <= 10; ++N)
            for (int r = 0; r <= n + N; ++r) {
                CHECK(big_f(n, r, N) == big_f(n, -r, N));
                CHECK(big_f_bar(n, r, N) == big_f_bar(n, -r, N));
            }
    // Only k = 0 survives once N > n + |r|
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= 3; ++r) {
            int N = n + r + 1;
            CHECK(big_f(n, r, N) == f_kernel(n, r));
            CHECK(big_f_bar(n, r, N) == f_kernel(n, r));
        }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(EMatrix(0, 0, 1)) == EPoly::constant(1, 1));

    EMatrix m(2, 2, 2);
    m.at(0, 0) = EPoly::gen(2, 1);
    m.at(0, 1) = EPoly::gen(2, 2);
    m.at(1, 0) = EPoly::constant(2, 1);
    m.at(1, 1) = EPoly::gen(2, 1);
    CHECK(determinant(m) ==
          EPoly::gen(2, 1) * EPoly::gen(2, 1) - EPoly::gen(2, 2));

    EMatrix d(3, 3, 1);
    for (int i = 0; i < 3; ++i) d.at(i, i) = EPoly::gen(1, 1);
    EPoly e1 = EPoly::gen(1, 1);
    CHECK(determinant(d) == e1 * e1 * e1);

    CHECK_THROWS(determinant(EMatrix(2, 3, 1)));
}

TEST_CASE("pfaffian basics") {
    EMatrix m(2, 2, 1);
    m.at(0, 1) = EPoly::gen(1, 1);
    m.at(1, 0) = -EPoly::gen(1, 1);
    CHECK(pfaffian(m) == EPoly::gen(1, 1));

    for (int p = 1; p <= 3; ++p) {
        EMatrix ones(2 * p, 2 * p, 1);
        for (int i = 0; i < 2 * p; ++i)
            for (int j = i + 1; j < 2 * p; ++j) {
                ones.at(i, j) = EPoly::constant(1, 1);
                ones.at(j, i) = EPoly::constant(1, -1);
            }
        CHECK(pfaffian(ones) == EPoly::constant(1, 1));
    }

    CHECK_THROWS(pfaffian(EMatrix(3, 3, 1)));
    EMatrix bad(2, 2, 1);
    bad.at(0, 1) = EPoly::constant(1, 1);
    bad.at(1, 0) = EPoly::constant(1, 1);
    CHECK_THROWS(pfaffian(bad));
}

TEST_CASE("generic 4x4 pfaffian expansion") {
    // Pf = a12 a34 - a13 a24 + a14 a23, with generators standing in for
    // the six independent entries.
    int n = 6;
    auto gen = [&](int k) { return EPoly::gen(n, k); };
    EMatrix m(4, 4, n);
    int idx = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            m.at(i, j) = gen(idx);
            m.at(j, i) = -gen(idx);
            ++idx;
        }
    // entries: a12=e1 a13=e2 a14=e3 a23=e4 a24=e5 a34=e6
    EPoly expect = gen(1) * gen(6) - gen(2) * gen(5) + gen(3) * gen(4);
    CHECK(pfaffian(m) == expect);
}

TEST_CASE("pfaffian squared is the determinant") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int size : {2, 4, 6})
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::vector<Int>> a(size, std::vector<Int>(size, 0));
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) {
                    int v = dist(rng);
                    a[i][j] = v;
                    a[j][i] = -v;
                }
            Int pf = int_pfaffian(a);
            CHECK(pf * pf == int_determinant(a));
        }
}

TEST_CASE("determinant is multilinear and alternating") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    auto random_poly = [&](int n) {
        EPoly p(n);
        for (int k = 0; k <= n; ++k) {
            int c = dist(rng);
            if (c) p += EPoly::mul(EPoly::constant(n, c), EPoly::gen(n, k), {});
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2;
        EMatrix m(3, 3, n);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = random_poly(n);
        EPoly base = determinant(m);

        // swap two rows: sign flips
        EMatrix swapped = m;
        for (int j = 0; j < 3; ++j) std::swap(swapped.at(0, j), swapped.at(1, j));
        CHECK(determinant(swapped) == -base);

        // scale a row by e_1: determinant scales
        EMatrix scaled = m;
        for (int j = 0; j < 3; ++j)
            scaled.at(2, j) = scaled.at(2, j) * EPoly::gen(n, 1);
        CHECK(determinant(scaled) == base * EPoly::gen(n, 1));

        // additivity in a row
        EMatrix m2 = m, msum = m;
        for (int j = 0; j < 3; ++j) {
            m2.at(1, j) = random_poly(n);
            msum.at(1, j) = m.at(1, j) + m2.at(1, j);
        }
        CHECK(determinant(msum) == base + determinant(m2));
    }
}

TEST_CASE("squarefree coefficient") {
    // e_2 * e_1 with n = 3: 3!/(2! 1!) = 3
    EPoly p = EPoly::gen(3, 2) * EPoly::gen(3, 1);
    CHECK(p.squarefree_coeff() == 3);
    CHECK(EPoly::gen(4, 4).squarefree_coeff() == 1);
    EPoly q = EPoly::gen(3, 1) * EPoly::gen(3, 1) * EPoly::gen(3, 1);
    CHECK(q.squarefree_coeff() == 6);
    // off-degree terms contribute nothing
    CHECK(EPoly::gen(3, 2).squarefree_coeff() == 0);
}

TEST_CASE("monomial expansion") {
    CHECK(monomial_expand(EPoly::gen(3, 2)) ==
          XPoly::monomial(3, {1, 1, 0}, 1) + XPoly::monomial(3, {1, 0, 1}, 1) +
              XPoly::monomial(3, {0, 1, 1}, 1));
    XPoly sq = monomial_expand(EPoly::gen(2, 1) * EPoly::gen(2, 1));
    CHECK(sq == XPoly::monomial(2, {2, 0}, 1) + XPoly::monomial(2, {1, 1}, 2) +
                    XPoly::monomial(2, {0, 2}, 1));
    // f_0 with n = 1 through degree 2
    CHECK(monomial_expand(f_kernel(1, 0), 2) ==
          XPoly::constant(1, 1) + XPoly::monomial(1, {2}, 1));
}

TEST_CASE("monomial expansion is a ring homomorphism on samples") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3;
        EPoly p(n), q(n);
        for (int k = 0; k <= n; ++k) {
            p += EPoly::mul(EPoly::constant(n, dist(rng)), EPoly::gen(n, k), {});
            q += EPoly::mul(EPoly::constant(n, dist(rng)), EPoly::gen(n, k), {});
        }
        int cap = 5;
        CHECK(monomial_expand(EPoly::mul(p, q, {}), cap) ==
              XPoly::mul(monomial_expand(p), monomial_expand(q), cap));
    }
}
