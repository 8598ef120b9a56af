#include <doctest.h>

#include "cylschur/periodic_kernels.hpp"

using namespace cylschur;

TEST_CASE("kernel antisymmetry") {
    for (int N : {3, 4, 5})
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j) {
                CHECK(d_kernel(2, N, j, i) == -d_kernel(2, N, i, j));
                CHECK(d_bar_kernel(2, N, j, i) == -d_bar_kernel(2, N, i, j));
                if (i == j) CHECK(d_kernel(2, N, i, i).is_zero());
            }
}

TEST_CASE("signed kernel entry identity") {
    // dbar_N(1,2) = Fbar_{0,N} + Fbar_{1,N} for N = 4, n = 2
    CHECK(d_bar_kernel(2, 4, 1, 2) == big_f_bar(2, 0, 4) + big_f_bar(2, 1, 4));
    for (int N : {3, 4, 5, 6})
        for (int i = 1; i <= 4; ++i)
            for (int j = i; j <= 4; ++j) {
                EPoly sum(3);
                for (int r = i - j + 1; r <= j - i; ++r)
                    sum += big_f_bar(3, r, N);
                CHECK(d_bar_kernel(3, N, i, j) == sum);
            }
}

TEST_CASE("reindexing lemmas") {
    CHECK(verify_reindexing_lemma(1, 4, 2, 6));
    CHECK(verify_reindexing_lemma(2, 4, 2, 6));
    CHECK(verify_reindexing_lemma(3, 4, 2, 6));
    CHECK(verify_reindexing_lemma(3, 5, 2, 6));
    CHECK(verify_reindexing_lemma(2, 5, 2, 6));
    CHECK(verify_reindexing_lemma(4, 5, 1, 6));
    CHECK_THROWS(verify_reindexing_lemma(4, 4, 1, 6));
}

TEST_CASE("full chain at the smallest cell") {
    auto rep = verify_periodic_kernel_chain(1, 4, 2, 6);
    CHECK(rep.all_ok);
    // every unconditional check ran
    int ran = 0;
    for (auto& c : rep.checks)
        if (c.ran) ++ran;
    CHECK(ran >= 8);
}

TEST_CASE("chain over the acceptance grid") {
    for (int h : {1, 2})
        for (int N : {4, 5})
            for (int n : {1, 2}) {
                auto rep = verify_periodic_kernel_chain(h, N, n, 6);
                CHECK_MESSAGE(rep.all_ok, "h=", h, " N=", N, " n=", n);
            }
}

TEST_CASE("guarded pieces are skipped when the hypothesis fails") {
    // h = 2: the odd side needs N > 5, so at N = 4 it must be skipped.
    auto rep = verify_periodic_kernel_chain(2, 4, 1, 5);
    bool found_skip = false;
    for (auto& c : rep.checks)
        if (!c.ran) found_skip = true;
    CHECK(found_skip);
    CHECK(rep.all_ok);
}
