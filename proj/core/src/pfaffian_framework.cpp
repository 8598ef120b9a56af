#include "cylschur/pfaffian_framework.hpp"

#include <functional>
#include <stdexcept>

#include "cylschur/epoly.hpp"

namespace cylschur {

namespace {

// Floor division and remainder with 0 <= r < n.
inline long fdiv(long a, long n) { return a >= 0 ? a / n : -((-a + n - 1) / n); }
inline long fmod_pos(long a, long n) { return a - fdiv(a, n) * n; }

}  // namespace

const char* structure_kind_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::b: return "b";
        case StructureKind::b_bar: return "b-bar";
        case StructureKind::c_plus: return "c-plus";
        case StructureKind::c_minus: return "c-minus";
        case StructureKind::d_plus_even: return "d-plus-even";
        case StructureKind::d_minus_even: return "d-minus-even";
        case StructureKind::d_plus_odd: return "d-plus-odd";
        case StructureKind::d_minus_odd: return "d-minus-odd";
    }
    return "?";
}

StructureMatrix::StructureMatrix(StructureKind kind, int m, int w)
    : kind_(kind), m_(m), w_(w), n_period_(m + w) {
    if (m < 1 || w < 1)
        throw std::invalid_argument("StructureMatrix: m,w >= 1 required");
    bool need_odd_m = kind == StructureKind::b ||
                      kind == StructureKind::d_plus_odd ||
                      kind == StructureKind::d_minus_odd;
    if ((m % 2 == 1) != need_odd_m)
        throw std::invalid_argument("StructureMatrix: parity of m does not match kind");
    bool is_d = kind == StructureKind::d_plus_even ||
                kind == StructureKind::d_minus_even ||
                kind == StructureKind::d_plus_odd ||
                kind == StructureKind::d_minus_odd;
    if (is_d && w % 2 != 0)
        throw std::invalid_argument("StructureMatrix: d kinds require even w");
    switch (kind) {
        case StructureKind::b: p_ = 1; break;
        case StructureKind::d_minus_even: p_ = 2; break;
        case StructureKind::d_plus_odd:
        case StructureKind::d_minus_odd: p_ = 1; break;
        default: p_ = 0; break;
    }
}

std::vector<int> StructureMatrix::border_indices() const {
    std::vector<int> b;
    for (int t = 1; t <= p_; ++t) b.push_back(t - p_);
    return b;
}

namespace {

// The defining integer sequences; ell = k N + r with 0 <= r < N.
Int beta_seq(long ell, long N) {
    long k = fdiv(ell, N), r = fmod_pos(ell, N);
    return r == 0 ? Int(2 * k) : Int(2 * k + 1);
}

Int beta_bar_seq(long ell, long N) {
    long k = fdiv(ell, N), r = fmod_pos(ell, N);
    if (r == 0) return 0;
    return (k % 2 == 0) ? Int(1) : Int(-1);
}

Int gamma_seq(long ell, long N, bool plus) {
    long k = fdiv(ell, N), r = fmod_pos(ell, N);
    if (r == 1) return plus ? Int(k % 2 == 0 ? 1 : -1) : Int(1);
    if (r == N - 1) return plus ? Int(k % 2 == 0 ? 1 : -1) : Int(-1);
    return 0;
}

Int delta_plus_even_seq(long ell, long N) {
    if (((ell % 2) + 2) % 2 == 0) return 0;
    long k = fdiv(ell, N);
    return (k % 2 == 0) ? Int(1) : Int(-1);
}

Int delta_minus_even_seq(long ell, long N) {
    if (((ell % 2) + 2) % 2 == 0) return 0;
    long k = fdiv(ell, N);
    return Int(2 * k + 1);
}

Int delta_plus_odd_seq(long ell, long N) {
    long k = fdiv(ell, N), r = fmod_pos(ell, N);
    long np = (N + 1) / 2;
    return r == 0 ? Int(k * np) : Int(k * np + (r + 1) / 2);
}

Int delta_minus_odd_seq(long ell, long N) {
    Int v = delta_plus_odd_seq(ell, N);
    return (((ell % 2) + 2) % 2 == 0) ? -v : v;
}

}  // namespace

Int StructureMatrix::upper_entry(int r, int s) const {
    long N = n_period_;
    bool r_border = r <= 0, s_border = s <= 0;
    if (s_border)  // both borders (r < s <= 0): only d_minus_even has two
        return 0;  // and its (0,0') entry is 0
    if (r_border) {
        switch (kind_) {
            case StructureKind::b: return 1;
            case StructureKind::d_plus_odd: return 1;
            case StructureKind::d_minus_odd:
                return (s % 2 == 1) ? Int(1) : Int(-1);  // (-1)^{s-1}
            case StructureKind::d_minus_even:
                if (r == -1) return 1;                       // the "0" border
                return (s % 2 == 1) ? Int(1) : Int(-1);      // the "0'" border
            default:
                throw std::logic_error("structure matrix has no border row");
        }
    }
    long ell = s - r;
    switch (kind_) {
        case StructureKind::b: return beta_seq(ell, N);
        case StructureKind::b_bar: return beta_bar_seq(ell, N);
        case StructureKind::c_plus: return gamma_seq(ell, N, true);
        case StructureKind::c_minus: return gamma_seq(ell, N, false);
        case StructureKind::d_plus_even: return delta_plus_even_seq(ell, N);
        case StructureKind::d_minus_even: return delta_minus_even_seq(ell, N);
        case StructureKind::d_plus_odd: return delta_plus_odd_seq(ell, N);
        case StructureKind::d_minus_odd: return delta_minus_odd_seq(ell, N);
    }
    throw std::logic_error("unknown structure kind");
}

Int StructureMatrix::entry(int r, int s) const {
    if (r < 1 - p_ || s < 1 - p_)
        throw std::invalid_argument("StructureMatrix::entry: index below border range");
    if (r == s) return 0;
    return r < s ? upper_entry(r, s) : -upper_entry(s, r);
}

Int StructureMatrix::statistic(const Partition& lambda) const {
    StatKind sk;
    switch (kind_) {
        case StructureKind::b:
        case StructureKind::b_bar: sk = StatKind::unit; break;
        case StructureKind::c_plus: sk = StatKind::c_plus; break;
        case StructureKind::c_minus: sk = StatKind::c_minus; break;
        case StructureKind::d_plus_even:
        case StructureKind::d_plus_odd: sk = StatKind::d_plus; break;
        case StructureKind::d_minus_even:
        case StructureKind::d_minus_odd: sk = StatKind::d_minus; break;
    }
    return scalar() * statistic_weight(sk, lambda, m_, w_);
}

IdentityId StructureMatrix::identity() const {
    switch (kind_) {
        case StructureKind::b: return IdentityId::abl_odd;
        case StructureKind::b_bar: return IdentityId::abl_even;
        case StructureKind::c_plus: return IdentityId::c_plus;
        case StructureKind::c_minus: return IdentityId::c_minus;
        case StructureKind::d_plus_even: return IdentityId::d1;
        case StructureKind::d_minus_even: return IdentityId::d2;
        case StructureKind::d_plus_odd: return IdentityId::d3;
        case StructureKind::d_minus_odd: return IdentityId::d4;
    }
    throw std::logic_error("unknown structure kind");
}

Int StructureMatrix::scalar() const {
    int h = identity_h();
    switch (kind_) {
        case StructureKind::d_plus_even: {
            Int s = 1;
            for (int i = 1; i < h; ++i) s *= 2;
            return s;
        }
        case StructureKind::d_minus_even: {
            Int s = 1;
            for (int i = 0; i < h; ++i) s *= 2;
            return s;
        }
        default: return 1;
    }
}

int StructureMatrix::identity_h() const { return m_ / 2; }

std::vector<int> index_sequence(const Partition& lambda, int m) {
    if (lambda.length() > m)
        throw std::invalid_argument("index_sequence: lambda longer than m");
    std::vector<int> idx(m);
    for (int i = 1; i <= m; ++i) idx[i - 1] = lambda.part(m + 1 - i) + i;
    return idx;
}

namespace {

Int pf_of_indices(const StructureMatrix& a, const std::vector<int>& idx) {
    size_t n = idx.size();
    std::vector<std::vector<Int>> mat(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            mat[i][j] = idx[i] == idx[j] ? Int(0) : a.entry(idx[i], idx[j]);
    return int_pfaffian(mat);
}

void for_each_increasing_seq(int bound, int m,
                             const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(m);
    for (int i = 0; i < m; ++i) k[i] = i + 1;
    if (m > bound || m == 0) return;
    while (true) {
        fn(k);
        int pos = m - 1;
        while (pos >= 0 && k[pos] == bound - m + 1 + pos) --pos;
        if (pos < 0) break;
        ++k[pos];
        for (int i = pos + 1; i < m; ++i) k[i] = k[i - 1] + 1;
    }
}

}  // namespace

bool check_framework_conditions(StructureKind kind, int m, int w,
                                int index_bound) {
    StructureMatrix a(kind, m, w);
    int N = a.period();
    if (index_bound < m + 2 * N)
        throw std::invalid_argument(
            "check_framework_conditions: index_bound >= m + 2N required");
    std::vector<int> borders = a.border_indices();
    auto with_borders = [&](const std::vector<int>& idx) {
        std::vector<int> full = borders;
        full.insert(full.end(), idx.begin(), idx.end());
        return full;
    };

    // (i) on Par(m,w) with indices inside the bound.
    for (auto& lam : iter_family(m, w, /*max_size=*/m * (index_bound - m))) {
        if (lam.part(1) + m > index_bound) continue;
        if (pf_of_indices(a, with_borders(index_sequence(lam, m))) !=
            a.statistic(lam))
            return false;
    }

    bool ok = true;
    for_each_increasing_seq(index_bound, m, [&](const std::vector<int>& idx) {
        if (!ok) return;
        // (ii) N-shift invariance beyond spread N.
        if (idx[m - 1] - idx[0] > N) {
            std::vector<int> shifted = idx;
            shifted[0] += N;
            shifted[m - 1] -= N;
            if (pf_of_indices(a, with_borders(shifted)) !=
                pf_of_indices(a, with_borders(idx))) {
                ok = false;
                return;
            }
        }
        // (iii) vanishing on congruent index pairs.
        bool congruent = false;
        for (int i = 0; i < m && !congruent; ++i)
            for (int j = i + 1; j < m; ++j)
                if ((idx[j] - idx[i]) % N == 0) {
                    congruent = true;
                    break;
                }
        if (congruent && pf_of_indices(a, with_borders(idx)) != 0) ok = false;
    });
    return ok;
}

EPoly general_pfaffian_sum(StructureKind kind, int m, int w, int n, int cap) {
    StructureMatrix a(kind, m, w);
    int p = a.border_size();
    if ((p + m) % 2 != 0)
        throw std::invalid_argument("general_pfaffian_sum: p + m must be even");
    std::vector<int> borders = a.border_indices();
    EMatrix q(p + m, p + m, n);
    // Border x border block.
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            q.at(i, j) = EPoly::constant(n, a.entry(borders[i], borders[j]));
    // Border x main: sum_s A_{0,s} e_{s-j}, nonzero only for s in [j, j+n].
    for (int i = 0; i < p; ++i)
        for (int j = 1; j <= m; ++j) {
            EPoly s(n);
            for (int col = j; col <= j + n; ++col)
                s += EPoly::mul(EPoly::constant(n, a.entry(borders[i], col)),
                                EPoly::gen(n, col - j), cap);
            q.at(i, p + j - 1) = s;
            q.at(p + j - 1, i) = -s;
        }
    // Main block: sum_{r,s} e_{r-i} A_{r,s} e_{s-j}.
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            EPoly s(n);
            for (int r = i; r <= i + n; ++r)
                for (int col = j; col <= j + n; ++col) {
                    Int av = a.entry(r, col);
                    if (av == 0) continue;
                    s += EPoly::mul(
                        EPoly::constant(n, av),
                        EPoly::mul(EPoly::gen(n, r - i), EPoly::gen(n, col - j),
                                   cap),
                        cap);
                }
            q.at(p + i - 1, p + j - 1) = s;
        }
    return pfaffian(q, cap);
}

}  // namespace cylschur
