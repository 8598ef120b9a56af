#include "cylschur/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylschur {

Matching::Matching(int n, std::vector<std::pair<int, int>> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("matching: n >= 0 required");
    std::vector<bool> used(n + 1, false);
    for (auto& [i, j] : arcs_) {
        if (i < 1 || j > n || i >= j)
            throw std::invalid_argument("matching: bad arc");
        if (used[i] || used[j])
            throw std::invalid_argument("matching: arcs not disjoint");
        used[i] = used[j] = true;
    }
    std::sort(arcs_.begin(), arcs_.end());
}

std::vector<int> Matching::fixed_points() const {
    std::vector<bool> used(n_ + 1, false);
    for (auto& [i, j] : arcs_) used[i] = used[j] = true;
    std::vector<int> fixed;
    for (int v = 1; v <= n_; ++v)
        if (!used[v]) fixed.push_back(v);
    return fixed;
}

bool Matching::is_fixed(int v) const {
    for (auto& [i, j] : arcs_)
        if (i == v || j == v) return false;
    return v >= 1 && v <= n_;
}

namespace {

void gen_matchings(int n, int v, std::vector<bool>& used,
                   std::vector<std::pair<int, int>>& arcs,
                   const std::function<void(const Matching&)>& fn) {
    while (v <= n && used[v]) ++v;
    if (v > n) {
        fn(Matching(n, arcs));
        return;
    }
    used[v] = true;
    // v fixed
    gen_matchings(n, v + 1, used, arcs, fn);
    // v opens an arc
    for (int j = v + 1; j <= n; ++j) {
        if (used[j]) continue;
        used[j] = true;
        arcs.push_back({v, j});
        gen_matchings(n, v + 1, used, arcs, fn);
        arcs.pop_back();
        used[j] = false;
    }
    used[v] = false;
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& fn) {
    std::vector<bool> used(n + 1, false);
    std::vector<std::pair<int, int>> arcs;
    gen_matchings(n, 1, used, arcs, fn);
}

Int count_matchings(int n) {
    // t(n) = t(n-1) + (n-1) t(n-2)
    Int a = 1, b = 1;
    for (int i = 2; i <= n; ++i) {
        Int c = b + Int(i - 1) * a;
        a = b;
        b = c;
    }
    return n <= 0 ? Int(1) : b;
}

bool CrossNestProfile::has_half_crossing(int k) const {
    return max_crossing2 >= 2 * k + 1;
}

bool CrossNestProfile::has_half_nesting(int k) const {
    return max_nesting2 >= 2 * k + 1;
}

namespace {

// Longest chain of arcs straddling v (all i < v < j) that are co-sorted
// (crossing pattern) resp. anti-sorted (nesting pattern).
int longest_straddle(const std::vector<std::pair<int, int>>& arcs, int v,
                     bool crossing) {
    std::vector<std::pair<int, int>> s;
    for (auto& a : arcs)
        if (a.first < v && v < a.second) s.push_back(a);
    std::sort(s.begin(), s.end());
    int best = 0;
    std::vector<int> dp(s.size(), 0);
    for (size_t i = 0; i < s.size(); ++i) {
        dp[i] = 1;
        for (size_t j = 0; j < i; ++j) {
            bool ok = crossing ? s[j].second < s[i].second
                               : s[j].second > s[i].second;
            if (ok) dp[i] = std::max(dp[i], dp[j] + 1);
        }
        best = std::max(best, dp[i]);
    }
    return best;
}

// Largest k-crossing: k arcs with i_1<...<i_k<j_1<...<j_k.  Openers
// co-sorted with closers plus max opener < min closer; arc counts are tiny
// at desk scale, so scan subsets.
int max_crossing_size(const std::vector<std::pair<int, int>>& arcs) {
    int a = static_cast<int>(arcs.size());
    int best = 0;
    for (unsigned mask = 1; mask < (1u << a); ++mask) {
        std::vector<std::pair<int, int>> s;
        for (int t = 0; t < a; ++t)
            if (mask & (1u << t)) s.push_back(arcs[t]);
        std::sort(s.begin(), s.end());
        bool ok = true;
        for (size_t t = 1; t < s.size(); ++t)
            if (s[t - 1].second >= s[t].second) ok = false;
        if (ok && s.back().first < s.front().second)
            best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

// Largest k-nesting: pairwise nesting is a partial order, longest chain DP.
int max_nesting_size(const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::pair<int, int>> s = arcs;
    std::sort(s.begin(), s.end());
    int best = 0;
    std::vector<int> dp(s.size(), 0);
    for (size_t i = 0; i < s.size(); ++i) {
        dp[i] = 1;
        for (size_t j = 0; j < i; ++j)
            if (s[j].first < s[i].first && s[i].second < s[j].second)
                dp[i] = std::max(dp[i], dp[j] + 1);
        best = std::max(best, dp[i]);
    }
    return best;
}

}  // namespace

CrossNestProfile crossing_nesting_profile(const Matching& m) {
    CrossNestProfile p;
    p.max_crossing = max_crossing_size(m.arcs());
    p.max_nesting = max_nesting_size(m.arcs());
    p.max_crossing2 = 2 * p.max_crossing;
    p.max_nesting2 = 2 * p.max_nesting;
    for (int v : m.fixed_points()) {
        int c = longest_straddle(m.arcs(), v, true);
        int ns = longest_straddle(m.arcs(), v, false);
        p.fixed_cross.push_back(c);
        p.fixed_nest.push_back(ns);
        p.max_crossing2 = std::max(p.max_crossing2, 2 * c + 1);
        p.max_nesting2 = std::max(p.max_nesting2, 2 * ns + 1);
    }
    return p;
}

bool is_noncrossing(const CrossNestProfile& p, int r2) {
    return p.max_crossing2 < r2;
}

bool is_nonnesting(const CrossNestProfile& p, int s2) {
    return p.max_nesting2 < s2;
}

Int ncnn_count(int n, int r2, int s2) {
    Int count = 0;
    for_each_matching(n, [&](const Matching& m) {
        CrossNestProfile p = crossing_nesting_profile(m);
        if (is_noncrossing(p, r2) && is_nonnesting(p, s2)) ++count;
    });
    return count;
}

bool ncnn_prime_member(const Matching& m, const CrossNestProfile& p, int h,
                       int w) {
    if (!is_noncrossing(p, 2 * (h + 1)) || !is_nonnesting(p, 2 * (w + 1)))
        return false;
    for (size_t t = 0; t < p.fixed_cross.size(); ++t) {
        bool in_cross = p.fixed_cross[t] >= h;
        bool in_nest = p.fixed_nest[t] >= w;
        if (in_cross != in_nest) return false;
    }
    (void)m;
    return true;
}

int ncnn_prime_z(const CrossNestProfile& p, int h, int w) {
    int z = 0;
    for (size_t t = 0; t < p.fixed_cross.size(); ++t)
        if (p.fixed_cross[t] >= h && p.fixed_nest[t] >= w) ++z;
    return z;
}

Int ncnn_prime_signed(int n, int h, int w) {
    Int total = 0;
    for_each_matching(n, [&](const Matching& m) {
        CrossNestProfile p = crossing_nesting_profile(m);
        if (!ncnn_prime_member(m, p, h, w)) return;
        total += (ncnn_prime_z(p, h, w) % 2 == 0) ? 1 : -1;
    });
    return total;
}

namespace {

// Truncated power series in one variable with rational coefficients.
using Series = std::vector<Rat>;  // coefficient of x^d at index d

Series series_zero(int cap) { return Series(cap + 1, Rat(0)); }

Series series_sub(const Series& a, const Series& b) {
    Series r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    Series r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j + i < a.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// I_alpha(2x) = sum_{l >= 0} x^{2l+alpha} / (l! (l+alpha)!), truncated.
Series bessel_series(int alpha, int cap) {
    Series s = series_zero(cap);
    for (int l = 0; 2 * l + alpha <= cap; ++l) {
        int d = 2 * l + alpha;
        if (d < 0 || l + alpha < 0) continue;
        s[d] = inv_factorial(l) * inv_factorial(l + alpha);
    }
    return s;
}

Rat series_det(std::vector<std::vector<Series>>& m, int cap, int want_deg) {
    // Division-free expansion; matrices here are at most 3x3.
    size_t sz = m.size();
    std::function<Series(unsigned, size_t)> rec = [&](unsigned mask,
                                                      size_t row) -> Series {
        if (mask == 0) {
            Series one = series_zero(cap);
            one[0] = 1;
            return one;
        }
        Series acc = series_zero(cap);
        int sign = 1;
        for (size_t j = 0; j < sz; ++j) {
            if (!(mask & (1u << j))) continue;
            Series sub = rec(mask & ~(1u << j), row + 1);
            Series term = series_mul(m[row][j], sub);
            for (size_t d = 0; d < term.size(); ++d)
                acc[d] += Rat(sign) * term[d];
            sign = -sign;
        }
        return acc;
    };
    Series d = rec(sz ? (1u << sz) - 1 : 0, 0);
    return d[want_deg];
}

}  // namespace

Int ncnn_bessel_count(int n, int h, int w) {
    if (n < 0 || h < 1 || w < 1)
        throw std::invalid_argument("ncnn_bessel_count: bad parameters");
    int N = 2 * h + 2 * w + 2;
    Rat total(0);
    for (int m2 = 0; 2 * m2 <= n; ++m2) {
        int deg = 2 * m2;
        // Winding ranges: an entry contributes to degree <= deg only when
        // one of its Bessel orders has absolute value <= deg.
        std::vector<int> klo(h), khi(h);
        for (int i = 1; i <= h; ++i) {
            // |-i + j + N k| <= deg for some j in [1,h]
            klo[i - 1] = (-deg + i - h - N + 1) / N - 1;
            khi[i - 1] = (deg + i - 1 + N - 1) / N + 1;
        }
        Rat coeff(0);
        std::vector<int> k(h);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == h) {
                std::vector<std::vector<Series>> mat(
                    h, std::vector<Series>(h, series_zero(deg)));
                bool row_nonzero = true;
                for (int i = 1; i <= h && row_nonzero; ++i) {
                    bool any = false;
                    for (int j = 1; j <= h; ++j) {
                        int a = -i + j + N * k[i - 1];
                        int b = i + j + N * k[i - 1];
                        Series sa = bessel_series(std::abs(a), deg);
                        Series sb = bessel_series(std::abs(b), deg);
                        mat[i - 1][j - 1] = series_sub(sa, sb);
                        for (auto& c : mat[i - 1][j - 1])
                            if (c != 0) any = true;
                    }
                    if (!any) row_nonzero = false;
                }
                if (row_nonzero) coeff += series_det(mat, deg, deg);
                return;
            }
            for (int v = klo[pos]; v <= khi[pos]; ++v) {
                k[pos] = v;
                rec(pos + 1);
            }
        };
        rec(0);
        total += Rat(binomial(n, deg)) * Rat(factorial(deg)) * coeff;
    }
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::logic_error("ncnn_bessel_count: non-integral result");
    return total.get_num();
}

}  // namespace cylschur
