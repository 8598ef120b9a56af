#include <doctest.h>

#include "cylschur/pfaffian_framework.hpp"

using namespace cylschur;

TEST_CASE("beta sequence values") {
    StructureMatrix b(StructureKind::b, 3, 2);  // N = 5
    // beta_l = 2k+1 for l = kN + r with 0 < r < N, 2k on multiples
    CHECK(b.entry(1, 2) == 1);    // l=1
    CHECK(b.entry(1, 6) == 2);    // l=5=N
    CHECK(b.entry(1, 7) == 3);    // l=6=N+1
    CHECK(b.entry(0, 5) == 1);    // border row
    CHECK(b.entry(5, 0) == -1);
}

TEST_CASE("delta sequences at N = 7") {
    StructureMatrix dp(StructureKind::d_plus_odd, 3, 4);   // N = 7
    StructureMatrix dm(StructureKind::d_minus_odd, 3, 4);
    // delta_l read off a far-from-the-border entry pair
    auto dplus = [&](int l) { return dp.entry(20, 20 + l); };
    auto dminus = [&](int l) { return dm.entry(20, 20 + l); };
    // expected values for l = -9..10; delta_0 = 0 sits at index 9
    std::vector<int> expect_plus = {-5, -5, -4, -3, -3, -2, -2, -1, -1, 0,
                                    1,  1,  2,  2,  3,  3,  4,  5,  5,  6};
    std::vector<int> expect_minus = {-5, 5, -4, 3, -3, 2, -2, 1, -1, 0,
                                     1, -1, 2, -2, 3, -3, 4, -5, 5, -6};
    for (int t = 0; t < 20; ++t) {
        int l = t - 9;
        CHECK(dplus(l) == expect_plus[t]);
        CHECK(dminus(l) == expect_minus[t]);
    }
}

TEST_CASE("antisymmetry of every structure matrix") {
    auto kinds = {StructureKind::b,           StructureKind::b_bar,
                  StructureKind::c_plus,      StructureKind::c_minus,
                  StructureKind::d_plus_even, StructureKind::d_minus_even,
                  StructureKind::d_plus_odd,  StructureKind::d_minus_odd};
    for (auto kind : kinds) {
        bool odd_m = kind == StructureKind::b || kind == StructureKind::d_plus_odd ||
                     kind == StructureKind::d_minus_odd;
        int m = odd_m ? 3 : 2;
        StructureMatrix a(kind, m, 2);
        for (int r = 1 - a.border_size(); r <= 30; ++r)
            for (int s = 1 - a.border_size(); s <= 30; ++s)
                CHECK(a.entry(s, r) == -a.entry(r, s));
    }
}

TEST_CASE("parity and width preconditions") {
    CHECK_THROWS(StructureMatrix(StructureKind::b, 2, 1));
    CHECK_THROWS(StructureMatrix(StructureKind::b_bar, 3, 1));
    CHECK_THROWS(StructureMatrix(StructureKind::d_plus_even, 2, 1));
    CHECK_THROWS(StructureMatrix(StructureKind::d_plus_odd, 3, 3));
    CHECK_NOTHROW(StructureMatrix(StructureKind::c_minus, 2, 3));
}

TEST_CASE("condition (iii) spot case: congruent indices force zero") {
    StructureMatrix b(StructureKind::b, 3, 2);
    int N = b.period();
    for (int x = 2; x <= 10; ++x) {
        if (x == 1 || x == 1 + N) continue;
        std::vector<int> idx{0, 1, 1 + N, x};
        std::sort(idx.begin() + 1, idx.end());
        std::vector<std::vector<Int>> mat(4, std::vector<Int>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                mat[i][j] = idx[i] == idx[j] ? Int(0) : b.entry(idx[i], idx[j]);
        CHECK(int_pfaffian(mat) == 0);
    }
}

TEST_CASE("framework conditions for small B") {
    CHECK(check_framework_conditions(StructureKind::b, 3, 2, 16));
}

TEST_CASE("framework condition (i) matches the c-minus statistic") {
    StructureMatrix a(StructureKind::c_minus, 2, 2);
    for (auto& lam : iter_family(2, 2, 8)) {
        auto idx = index_sequence(lam, 2);
        std::vector<std::vector<Int>> mat(2, std::vector<Int>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                mat[i][j] = idx[i] == idx[j] ? Int(0) : a.entry(idx[i], idx[j]);
        CHECK(int_pfaffian(mat) == a.statistic(lam));
    }
}

TEST_CASE("framework conditions for every kind on the acceptance grid") {
    struct Cell {
        StructureKind kind;
        int m, w;
    };
    std::vector<Cell> cells;
    for (int m : {1, 3})
        for (int w : {1, 2, 3}) cells.push_back({StructureKind::b, m, w});
    for (int m : {2, 4})
        for (int w : {1, 2, 3}) {
            cells.push_back({StructureKind::b_bar, m, w});
            cells.push_back({StructureKind::c_plus, m, w});
            cells.push_back({StructureKind::c_minus, m, w});
        }
    for (int m : {2, 4}) {
        cells.push_back({StructureKind::d_plus_even, m, 2});
        cells.push_back({StructureKind::d_minus_even, m, 2});
    }
    for (int m : {1, 3}) {
        cells.push_back({StructureKind::d_plus_odd, m, 2});
        cells.push_back({StructureKind::d_minus_odd, m, 2});
    }
    for (auto& c : cells) {
        int bound = c.m + 2 * (c.m + c.w) + 2;
        CHECK_MESSAGE(check_framework_conditions(c.kind, c.m, c.w, bound),
                      structure_kind_name(c.kind), " m=", c.m, " w=", c.w);
    }
}

TEST_CASE("general pfaffian sum reproduces the weighted schur sums") {
    struct Cell {
        StructureKind kind;
        int m, w;
    };
    std::vector<Cell> cells = {
        {StructureKind::b_bar, 2, 1},       {StructureKind::b, 3, 1},
        {StructureKind::b, 1, 2},           {StructureKind::c_plus, 2, 2},
        {StructureKind::c_minus, 2, 1},     {StructureKind::d_plus_even, 2, 2},
        {StructureKind::d_minus_even, 2, 2}, {StructureKind::d_plus_odd, 3, 2},
        {StructureKind::d_minus_odd, 3, 2}, {StructureKind::c_plus, 4, 1},
    };
    for (auto& c : cells) {
        StructureMatrix a(c.kind, c.m, c.w);
        int n = 2, cap = 6;
        EPoly pf = general_pfaffian_sum(c.kind, c.m, c.w, n, cap);
        EPoly sum = lhs_sum(a.identity(), a.identity_h(), c.w, n, cap);
        EPoly scaled = EPoly::mul(EPoly::constant(n, a.scalar()), sum, cap);
        CHECK_MESSAGE(pf.truncated(cap) == scaled,
                      structure_kind_name(c.kind), " m=", c.m, " w=", c.w);
    }
}
