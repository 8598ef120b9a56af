#include <doctest.h>

#include <memory>
#include <random>

#include "cylschur/epoly.hpp"
#include "cylschur/minor_summation.hpp"

using namespace cylschur;

namespace {

ZOracle antisym_from(const std::function<EPoly(int)>& pos, int nvars) {
    return [pos, nvars](int i) {
        if (i == 0) return EPoly::zero(nvars);
        return i > 0 ? pos(i) : -pos(-i);
    };
}

}  // namespace

TEST_CASE("gordon reduction, h = 1 is literal") {
    ZOracle z = antisym_from(
        [](int i) { return EPoly::constant(1, Int(i * i + 1)); }, 1);
    for (auto v : {GordonVariant::base, GordonVariant::var1,
                   GordonVariant::var2, GordonVariant::var3})
        CHECK(verify_gordon(z, 1, v));
}

TEST_CASE("gordon reduction with integer constants") {
    ZOracle z =
        antisym_from([](int i) { return EPoly::constant(1, Int(i)); }, 1);
    for (int h = 1; h <= 3; ++h)
        for (auto v : {GordonVariant::base, GordonVariant::var1,
                       GordonVariant::var2, GordonVariant::var3})
            CHECK(verify_gordon(z, h, v));
}

TEST_CASE("gordon with the f-kernel substitution") {
    // z_i = f_{i-1} - f_{i+1}, the substitution behind the odd identity.
    int n = 2;
    ZOracle z = [n](int i) {
        if (i == 0) return EPoly::zero(n);
        return f_kernel(n, i - 1) - f_kernel(n, i + 1);
    };
    // antisymmetry: z_{-i} = f_{-i-1} - f_{-i+1} = f_{i+1} - f_{i-1} = -z_i
    for (int i = 1; i <= 4; ++i) CHECK(z(-i) == -z(i));
    for (int h = 1; h <= 2; ++h)
        for (auto v : {GordonVariant::base, GordonVariant::var1,
                       GordonVariant::var2, GordonVariant::var3})
            CHECK(verify_gordon(z, h, v));
}

TEST_CASE("gordon on randomized antisymmetric oracles") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        // random integer sequence z_1..z_8 extended antisymmetrically
        auto vals = std::make_shared<std::vector<Int>>();
        for (int i = 0; i < 9; ++i) vals->push_back(dist(rng));
        ZOracle z = [vals](int i) {
            int a = std::abs(i);
            Int v = a < static_cast<int>(vals->size()) ? (*vals)[a] : Int(0);
            if (i == 0) return EPoly::zero(1);
            return EPoly::constant(1, i > 0 ? v : -v);
        };
        int h = 1 + trial % 3;
        GordonVariant v = static_cast<GordonVariant>(trial % 4);
        CHECK(verify_gordon(z, h, v));
    }
}

namespace {

EMatrix random_int_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    EMatrix m(rows, cols, 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = EPoly::constant(1, dist(rng));
    return m;
}

EMatrix random_skew(int size, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    EMatrix a(size, size, 1);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            int v = dist(rng);
            a.at(i, j) = EPoly::constant(1, v);
            a.at(j, i) = EPoly::constant(1, -v);
        }
    return a;
}

EMatrix all_ones_skew(int size) {
    EMatrix a(size, size, 1);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            a.at(i, j) = EPoly::constant(1, 1);
            a.at(j, i) = EPoly::constant(1, -1);
        }
    return a;
}

}  // namespace

TEST_CASE("minor summation, single-minor case") {
    std::mt19937 rng(5);
    // m = p = 2: the sum has one term and both sides equal det M.
    EMatrix m = random_int_matrix(2, 2, rng);
    EMatrix a(2, 2, 1);
    a.at(0, 1) = EPoly::constant(1, 1);
    a.at(1, 0) = EPoly::constant(1, -1);
    CHECK(verify_minor_summation(m, a, MinorParity::even));
}

TEST_CASE("minor summation, all-ones special case") {
    std::mt19937 rng(17);
    // even: m=2, p=4 enumerates all six minors
    CHECK(verify_minor_summation(random_int_matrix(2, 4, rng), all_ones_skew(4),
                                 MinorParity::even));
    // odd: m=3, p=4 with the bordered all-ones matrix
    CHECK(verify_minor_summation(random_int_matrix(3, 4, rng), all_ones_skew(5),
                                 MinorParity::odd));
}

TEST_CASE("minor summation on random instances") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 100; ++trial) {
        if (trial % 2 == 0) {
            int m = 2, p = 2 + trial % 4;
            CHECK(verify_minor_summation(random_int_matrix(m, p, rng),
                                         random_skew(p, rng),
                                         MinorParity::even));
        } else {
            int m = 3, p = 3 + trial % 3;
            CHECK(verify_minor_summation(random_int_matrix(m, p, rng),
                                         random_skew(p + 1, rng),
                                         MinorParity::odd));
        }
    }
}

TEST_CASE("minor summation with polynomial entries") {
    // small polynomial instance: entries e_{j-i} style
    int n = 2;
    EMatrix m(2, 3, n);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = EPoly::gen(n, j - i + 1);
    std::mt19937 rng(3);
    EMatrix a(3, 3, n);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int v = dist(rng);
            a.at(i, j) = EPoly::constant(n, v);
            a.at(j, i) = EPoly::constant(n, -v);
        }
    CHECK(verify_minor_summation(m, a, MinorParity::even));
}

TEST_CASE("minor summation rejects bad dimensions") {
    std::mt19937 rng(1);
    CHECK_THROWS(verify_minor_summation(random_int_matrix(2, 3, rng),
                                        all_ones_skew(4), MinorParity::even));
    CHECK_THROWS(verify_minor_summation(random_int_matrix(3, 3, rng),
                                        all_ones_skew(3), MinorParity::odd));
}
