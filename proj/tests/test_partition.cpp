#include <doctest.h>

#include "cylschur/partition.hpp"

using namespace cylschur;

TEST_CASE("conjugate basics") {
    CHECK(Partition({4, 3, 2}).conjugate() == Partition({3, 3, 2, 1}));
    CHECK(Partition().conjugate() == Partition());
    // column-count oracle
    CHECK(Partition({5, 4}).conjugate() == Partition({2, 2, 2, 2, 1}));
}

TEST_CASE("conjugate is an involution") {
    for (int n = 0; n <= 12; ++n)
        for (auto& lam : partitions_of(n, n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("in_family uses the zero-padded spread") {
    CHECK(in_family(Partition({4, 3, 2}), 3, 2));
    CHECK_FALSE(in_family(Partition({4, 3, 2}), 3, 1));
    CHECK(in_family(Partition({1}), 3, 1));  // lambda_3 = 0, spread 1
    CHECK(in_family(Partition({4, 3, 2}), 3, std::nullopt));
    CHECK_FALSE(in_family(Partition({2, 2}), 3, 1));  // spread 2 via padding
}

TEST_CASE("iter_family examples and order") {
    auto f1 = iter_family(1, 5, 3);
    REQUIRE(f1.size() == 4);
    CHECK(f1[0] == Partition());
    CHECK(f1[1] == Partition({1}));
    CHECK(f1[2] == Partition({2}));
    CHECK(f1[3] == Partition({3}));

    auto f2 = iter_family(2, 1, 2);
    REQUIRE(f2.size() == 3);  // (2) excluded: spread 2 > 1
    CHECK(f2[0] == Partition());
    CHECK(f2[1] == Partition({1}));
    CHECK(f2[2] == Partition({1, 1}));

    auto f3 = iter_family(3, std::nullopt, 2);
    REQUIRE(f3.size() == 4);
    CHECK(f3[2] == Partition({2}));  // largest-first within a grade
    CHECK(f3[3] == Partition({1, 1}));
}

TEST_CASE("iter_family equals the brute-force filter") {
    for (int h = 1; h <= 4; ++h)
        for (int w = 1; w <= 3; ++w) {
            auto fam = iter_family(h, w, 6);
            std::vector<Partition> brute;
            for (int n = 0; n <= 6; ++n)
                for (auto& lam : partitions_of(n, n))
                    if (in_family(lam, h, w) && lam.length() <= h)
                        brute.push_back(lam);
            // duplicate-free and same content
            std::vector<Partition> a = fam, b = brute;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(std::unique(a.begin(), a.end()) == a.end());
            CHECK(a == b);
        }
}

TEST_CASE("vertical strips") {
    CHECK(is_vertical_strip(Partition({1}), Partition({2, 1})));
    CHECK_FALSE(is_vertical_strip(Partition({1}), Partition({3, 1})));
    CHECK(is_vertical_strip(Partition(), Partition({1, 1, 1})));
    CHECK_FALSE(is_vertical_strip(Partition({2, 1}), Partition({1})));
}

TEST_CASE("cylindric transpose of the running shape") {
    CHECK(cyl_transpose(Partition({4, 3, 2}), 3, 2) == Partition({5, 4}));
    CHECK(cyl_transpose(Partition(), 2, 3) == Partition());
    CHECK_THROWS(cyl_transpose(Partition({4, 3, 2}), 3, 1));
}

TEST_CASE("cylindric transpose round trip") {
    for (int h = 1; h <= 4; ++h)
        for (int w = 1; w <= 4; ++w)
            for (auto& lam : iter_family(h, w, 10)) {
                Partition tr = cyl_transpose(lam, h, w);
                CHECK(in_family(tr, w, h));
                CHECK(cyl_transpose(tr, w, h) == lam);
            }
}

TEST_CASE("single-row transpose via the one-period column read") {
    // (m) with h = w = 1: the cylinder of a single row of length m
    // transposes to a single column read back as another single row.
    for (int m = 1; m <= 5; ++m) {
        Partition tr = cyl_transpose(Partition({m}), 1, 1);
        CHECK(in_family(tr, 1, 1));
        CHECK(cyl_transpose(tr, 1, 1) == Partition({m}));
        CHECK(tr.size() == m);
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
}
