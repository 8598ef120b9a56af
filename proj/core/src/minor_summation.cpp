#include "cylschur/minor_summation.hpp"

#include <stdexcept>
#include <vector>

namespace cylschur {

namespace {

EPoly gordon_det_entry(const ZOracle& z, int i, int j, GordonVariant v,
                       int nvars) {
    EPoly e(nvars);
    switch (v) {
        case GordonVariant::base:
            // z_{|j-i|+1} + z_{|j-i|+3} + ... + z_{i+j-1}
            for (int t = std::abs(j - i) + 1; t <= i + j - 1; t += 2)
                e += z(t);
            return e;
        case GordonVariant::var1:
            for (int s = 0; s <= 2 * std::min(i, j) - 2; ++s) {
                EPoly d = z(i + j - 1 - s) - z(i + j - 2 - s);
                if (s % 2) d = -d;
                e += d;
            }
            return e;
        case GordonVariant::var2:
            for (int s = 0; s <= 2 * std::min(i, j) - 2; ++s)
                e += z(i + j - 1 - s) + z(i + j - 2 - s);
            return e;
        case GordonVariant::var3:
            if (i == 1 && j == 1) return z(1);
            if (j == 1) return z(i) - z(i - 2);
            if (i == 1) return z(j) - z(j - 2);
            return z(i + j - 1) - z(i + j - 3) + z(std::abs(j - i) + 1) -
                   z(std::abs(j - i) - 1);
    }
    throw std::invalid_argument("verify_gordon: unknown variant");
}

}  // namespace

bool verify_gordon(const ZOracle& z, int h, GordonVariant variant, DegCap cap) {
    if (h < 1) throw std::invalid_argument("verify_gordon: h >= 1 required");
    int nvars = z(1).num_vars();
    EMatrix pf_mat(2 * h, 2 * h, nvars);
    for (int i = 1; i <= 2 * h; ++i)
        for (int j = 1; j <= 2 * h; ++j) pf_mat.at(i - 1, j - 1) = z(j - i);
    EPoly lhs = pfaffian(pf_mat, cap);

    EMatrix det_mat(h, h, nvars);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j)
            det_mat.at(i - 1, j - 1) = gordon_det_entry(z, i, j, variant, nvars);
    EPoly rhs = determinant(det_mat, cap);
    return lhs.truncated(cap) == rhs.truncated(cap);
}

namespace {

void for_each_increasing(int p, int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> k(m);
    for (int i = 0; i < m; ++i) k[i] = i + 1;
    if (m > p) return;
    if (m == 0) {
        fn(k);
        return;
    }
    while (true) {
        fn(k);
        int pos = m - 1;
        while (pos >= 0 && k[pos] == p - m + 1 + pos) --pos;
        if (pos < 0) break;
        ++k[pos];
        for (int i = pos + 1; i < m; ++i) k[i] = k[i - 1] + 1;
    }
}

}  // namespace

bool verify_minor_summation(const EMatrix& m_mat, const EMatrix& a,
                            MinorParity parity, DegCap cap) {
    int m = m_mat.rows();
    int p = m_mat.cols();
    int nvars = m_mat.num_vars();
    if (!a.is_skew_symmetric())
        throw std::invalid_argument("verify_minor_summation: A not skew");
    if (parity == MinorParity::even) {
        if (m % 2 != 0)
            throw std::invalid_argument("verify_minor_summation: m must be even");
        if (a.rows() != p)
            throw std::invalid_argument("verify_minor_summation: A must be p x p");
    } else {
        if (m % 2 != 1)
            throw std::invalid_argument("verify_minor_summation: m must be odd");
        if (a.rows() != p + 1)
            throw std::invalid_argument(
                "verify_minor_summation: A must be (p+1) x (p+1), 0-indexed border");
    }

    // Left side: sum over increasing K of Pf(A^K) det(M^{[m]}_K); in the odd
    // case the Pfaffian picks up the border index 0 in front of K.
    EPoly lhs(nvars);
    for_each_increasing(p, m, [&](const std::vector<int>& k) {
        EMatrix sub_m(m, m, nvars);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sub_m.at(i, j) = m_mat.at(i, k[j] - 1);
        EPoly det_part = determinant(sub_m, cap);
        if (det_part.is_zero()) return;

        EPoly pf_part(nvars);
        if (parity == MinorParity::even) {
            EMatrix sub_a(m, m, nvars);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    sub_a.at(i, j) = a.at(k[i] - 1, k[j] - 1);
            pf_part = pfaffian(sub_a, cap);
        } else {
            // rows/cols (0) ++ K of the bordered A; A is 0-indexed already.
            EMatrix sub_a(m + 1, m + 1, nvars);
            std::vector<int> idx(m + 1);
            idx[0] = 0;
            for (int i = 0; i < m; ++i) idx[i + 1] = k[i];
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= m; ++j)
                    sub_a.at(i, j) = a.at(idx[i], idx[j]);
            pf_part = pfaffian(sub_a, cap);
        }
        lhs += EPoly::mul(pf_part, det_part, cap);
    });

    // Right side: the compressed Pfaffian.
    EPoly rhs(nvars);
    if (parity == MinorParity::even) {
        EMatrix q(m, m, nvars);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                EPoly s(nvars);
                for (int r = 1; r <= p; ++r)
                    for (int t = 1; t <= p; ++t) {
                        if (a.at(r - 1, t - 1).is_zero()) continue;
                        s += EPoly::mul(a.at(r - 1, t - 1),
                                        EPoly::mul(m_mat.at(i, r - 1),
                                                   m_mat.at(j, t - 1), cap),
                                        cap);
                    }
                q.at(i, j) = s;
            }
        rhs = pfaffian(q, cap);
    } else {
        EMatrix q(m + 1, m + 1, nvars);
        for (int j = 1; j <= m; ++j) {
            EPoly s(nvars);
            for (int r = 1; r <= p; ++r)
                s += EPoly::mul(a.at(0, r), m_mat.at(j - 1, r - 1), cap);
            q.at(0, j) = s;
            q.at(j, 0) = -s;
        }
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                EPoly s(nvars);
                for (int r = 1; r <= p; ++r)
                    for (int t = 1; t <= p; ++t) {
                        if (a.at(r, t).is_zero()) continue;
                        s += EPoly::mul(a.at(r, t),
                                        EPoly::mul(m_mat.at(i - 1, r - 1),
                                                   m_mat.at(j - 1, t - 1), cap),
                                        cap);
                    }
                q.at(i, j) = s;
            }
        rhs = pfaffian(q, cap);
    }
    return lhs.truncated(cap) == rhs.truncated(cap);
}

}  // namespace cylschur
