#include "cylschur/littlewood.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cylschur/tableau.hpp"

namespace cylschur {

namespace {

struct IdentityInfo {
    IdentityId id;
    const char* name;
    bool affine;
    bool m_odd;      // m = 2h+1 when true, else m = 2h
    StatKind stat;
    bool doubling;
};

constexpr IdentityInfo kIdentities[] = {
    {IdentityId::abl_odd, "abl-odd", true, true, StatKind::unit, false},
    {IdentityId::abl_even, "abl-even", true, false, StatKind::unit, false},
    {IdentityId::c_plus, "c-plus", true, false, StatKind::c_plus, false},
    {IdentityId::c_minus, "c-minus", true, false, StatKind::c_minus, false},
    {IdentityId::d1, "d1", true, false, StatKind::d_plus, true},
    {IdentityId::d2, "d2", true, false, StatKind::d_minus, false},
    {IdentityId::d3, "d3", true, true, StatKind::d_plus, false},
    {IdentityId::d4, "d4", true, true, StatKind::d_minus, false},
    {IdentityId::classical_odd, "classical-odd", false, true, StatKind::unit, false},
    {IdentityId::classical_even, "classical-even", false, false, StatKind::unit, false},
    {IdentityId::classical_sp, "classical-sp", false, false, StatKind::c_plus, false},
    {IdentityId::classical_d1, "classical-d1", false, false, StatKind::d_plus, true},
    {IdentityId::classical_d2, "classical-d2", false, false, StatKind::d_minus, false},
    {IdentityId::classical_d3, "classical-d3", false, true, StatKind::d_plus, false},
    {IdentityId::classical_d4, "classical-d4", false, true, StatKind::d_minus, false},
};

const IdentityInfo& info(IdentityId id) {
    for (auto& e : kIdentities)
        if (e.id == id) return e;
    throw std::invalid_argument("unknown identity");
}

}  // namespace

const char* identity_name(IdentityId id) { return info(id).name; }

std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (auto& e : kIdentities)
        if (name == e.name) return e.id;
    return std::nullopt;
}

bool identity_is_affine(IdentityId id) { return info(id).affine; }

IdentityId classical_limit(IdentityId id) {
    switch (id) {
        case IdentityId::abl_odd: return IdentityId::classical_odd;
        case IdentityId::abl_even: return IdentityId::classical_even;
        case IdentityId::c_plus:
        case IdentityId::c_minus: return IdentityId::classical_sp;
        case IdentityId::d1: return IdentityId::classical_d1;
        case IdentityId::d2: return IdentityId::classical_d2;
        case IdentityId::d3: return IdentityId::classical_d3;
        case IdentityId::d4: return IdentityId::classical_d4;
        default:
            throw std::invalid_argument("classical_limit: identity is not affine");
    }
}

int identity_m(IdentityId id, int h) { return info(id).m_odd ? 2 * h + 1 : 2 * h; }

bool identity_uses_doubling(IdentityId id) { return info(id).doubling; }

int statistic_weight(StatKind kind, const Partition& lambda, int m, int w) {
    if (lambda.length() > m)
        throw std::invalid_argument("statistic_weight: lambda longer than m");
    switch (kind) {
        case StatKind::unit:
            return 1;
        case StatKind::c_plus:
        case StatKind::c_minus: {
            if (m % 2 != 0)
                throw std::invalid_argument("statistic_weight: c weights need even m");
            int h = m / 2;
            bool paired = true;
            for (int i = 1; i <= h; ++i)
                if (lambda.part(2 * i - 1) != lambda.part(2 * i)) paired = false;
            if (paired) return 1;
            if (w >= 0 && lambda.part(1) - lambda.part(m) == w) {
                bool offset = true;
                for (int i = 1; i <= h - 1; ++i)
                    if (lambda.part(2 * i) != lambda.part(2 * i + 1)) offset = false;
                if (offset) return kind == StatKind::c_plus ? 1 : -1;
            }
            return 0;
        }
        case StatKind::d_plus:
        case StatKind::d_minus: {
            bool all_even = true, all_odd = true;
            for (int i = 1; i <= m; ++i) {
                if (lambda.part(i) % 2 != 0) all_even = false;
                if (lambda.part(i) % 2 != 1) all_odd = false;
            }
            if (all_even) return 1;
            if (all_odd) return kind == StatKind::d_plus ? 1 : -1;
            return 0;
        }
    }
    throw std::invalid_argument("statistic_weight: unknown kind");
}

EPoly lhs_sum(IdentityId id, int h, int w, int n, int cap) {
    const IdentityInfo& inf = info(id);
    int m = identity_m(id, h);
    if (m < 1) throw std::invalid_argument("lhs_sum: needs m >= 1");
    if (h < 1 && (id == IdentityId::d2 || id == IdentityId::classical_d2))
        throw std::invalid_argument("lhs_sum: d2 needs h >= 1");
    EPoly total(n);
    if (inf.affine) {
        if (w < 1) throw std::invalid_argument("lhs_sum: w >= 1 required");
        for (auto& lam : iter_family(m, w, cap)) {
            int u = statistic_weight(inf.stat, lam, m, w);
            if (u == 0) continue;
            EPoly s = cylindric_schur_jt(lam, m, w, n, cap);
            if (u < 0) s = -s;
            total += s;
        }
    } else {
        for (auto& lam : iter_family(m, std::nullopt, cap)) {
            int u = statistic_weight(inf.stat, lam, m, -1);
            if (u == 0) continue;
            EMatrix mat(m, m, n);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= m; ++j)
                    mat.at(i - 1, j - 1) = EPoly::gen(n, lam.part(i) - i + j);
            EPoly s = determinant(mat, cap);
            if (u < 0) s = -s;
            total += s;
        }
    }
    return total;
}

namespace {

// det over 1 <= i,j <= size of entry(i,j).
EPoly det_of(int size, int n, int cap,
             const std::function<EPoly(int, int)>& entry) {
    EMatrix mat(size, size, n);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) mat.at(i - 1, j - 1) = entry(i, j);
    return determinant(mat, cap);
}

}  // namespace

EPoly rhs_det(IdentityId id, int h, int w, int n, int cap) {
    auto F = [&](int r, int N) { return big_f(n, r, N); };
    auto Fb = [&](int r, int N) { return big_f_bar(n, r, N); };
    auto f = [&](int r) { return f_kernel(n, r); };
    switch (id) {
        case IdentityId::abl_odd: {
            int N = 2 * h + 1 + w;
            return EPoly::mul(e_sum(n),
                              det_of(h, n, cap,
                                     [&](int i, int j) {
                                         return F(-i + j, N) - F(i + j, N);
                                     }),
                              cap);
        }
        case IdentityId::abl_even: {
            int N = 2 * h + w;
            return det_of(h, n, cap, [&](int i, int j) {
                return Fb(-i + j, N) + Fb(i + j - 1, N);
            });
        }
        case IdentityId::c_plus: {
            int N = 2 * h + w;
            return det_of(h, n, cap, [&](int i, int j) {
                return Fb(-i + j, N) - Fb(i + j, N);
            });
        }
        case IdentityId::c_minus: {
            int N = 2 * h + w;
            return det_of(h, n, cap, [&](int i, int j) {
                return F(-i + j, N) - F(i + j, N);
            });
        }
        case IdentityId::d1: {
            int N = 2 * h + w;
            return det_of(h, n, cap, [&](int i, int j) {
                return Fb(-i + j, N) + Fb(i + j - 2, N);
            });
        }
        case IdentityId::d2: {
            if (h < 1) throw std::invalid_argument("rhs_det: d2 needs h >= 1");
            int N = 2 * h + w;
            EPoly det = det_of(h - 1, n, cap, [&](int i, int j) {
                return F(-i + j, N) - F(i + j, N);
            });
            return EPoly::mul(EPoly::mul(e_sum(n), e_alt(n), cap), det, cap);
        }
        case IdentityId::d3: {
            int N = 2 * h + 1 + w;
            EPoly det = det_of(h, n, cap, [&](int i, int j) {
                return F(-i + j, N) - F(i + j - 1, N);
            });
            return EPoly::mul(e_sum(n), det, cap);
        }
        case IdentityId::d4: {
            int N = 2 * h + 1 + w;
            EPoly det = det_of(h, n, cap, [&](int i, int j) {
                return Fb(-i + j, N) + Fb(i + j - 1, N);
            });
            return EPoly::mul(e_alt(n), det, cap);
        }
        case IdentityId::classical_odd:
            return EPoly::mul(e_sum(n),
                              det_of(h, n, cap,
                                     [&](int i, int j) {
                                         return f(-i + j) - f(i + j);
                                     }),
                              cap);
        case IdentityId::classical_even:
            return det_of(h, n, cap,
                          [&](int i, int j) { return f(-i + j) + f(i + j - 1); });
        case IdentityId::classical_sp:
            return det_of(h, n, cap,
                          [&](int i, int j) { return f(-i + j) - f(i + j); });
        case IdentityId::classical_d1:
            return det_of(h, n, cap,
                          [&](int i, int j) { return f(-i + j) + f(i + j - 2); });
        case IdentityId::classical_d2: {
            if (h < 1)
                throw std::invalid_argument("rhs_det: classical d2 needs h >= 1");
            EPoly det = det_of(h - 1, n, cap, [&](int i, int j) {
                return f(-i + j) - f(i + j);
            });
            return EPoly::mul(EPoly::mul(e_sum(n), e_alt(n), cap), det, cap);
        }
        case IdentityId::classical_d3: {
            EPoly det = det_of(h, n, cap, [&](int i, int j) {
                return f(-i + j) - f(i + j - 1);
            });
            return EPoly::mul(e_sum(n), det, cap);
        }
        case IdentityId::classical_d4: {
            EPoly det = det_of(h, n, cap, [&](int i, int j) {
                return f(-i + j) + f(i + j - 1);
            });
            return EPoly::mul(e_alt(n), det, cap);
        }
    }
    throw std::invalid_argument("rhs_det: unknown identity");
}

VerificationReport verify_identity(IdentityId id, int h, int w, int n, int cap) {
    auto t0 = std::chrono::steady_clock::now();
    EPoly lhs = lhs_sum(id, h, w, n, cap).truncated(cap);
    if (identity_uses_doubling(id)) lhs += lhs;
    EPoly rhs = rhs_det(id, h, w, n, cap).truncated(cap);

    VerificationReport rep;
    rep.identity = id;
    rep.h = h;
    rep.w = w;
    rep.num_vars = n;
    rep.degree_cap = cap;
    rep.equal = (lhs == rhs);
    if (!rep.equal) {
        // First discrepancy in graded key order.
        std::vector<EPoly::Key> keys;
        for (auto& [k, c] : lhs.terms()) keys.push_back(k);
        for (auto& [k, c] : rhs.terms()) keys.push_back(k);
        std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
            int da = EPoly::key_degree(a), db = EPoly::key_degree(b);
            return da != db ? da < db : a < b;
        });
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (auto& k : keys) {
            if (lhs.coeff(k) != rhs.coeff(k)) {
                rep.first_discrepancy = Discrepancy{k, lhs.coeff(k), rhs.coeff(k)};
                break;
            }
        }
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

}  // namespace cylschur
