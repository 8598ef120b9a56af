#include "cylschur/epoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cylschur {

EPoly EPoly::constant(int n, Int c) {
    EPoly p(n);
    if (c != 0) p.terms_[Key(n, 0)] = std::move(c);
    return p;
}

EPoly EPoly::gen(int n, int k) {
    if (k == 0) return constant(n, 1);
    if (k < 0 || k > n) return zero(n);
    EPoly p(n);
    Key key(n, 0);
    key[k - 1] = 1;
    p.terms_[key] = 1;
    return p;
}

int EPoly::key_degree(const Key& k) {
    int d = 0;
    for (size_t i = 0; i < k.size(); ++i) d += static_cast<int>(i + 1) * k[i];
    return d;
}

int EPoly::degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, key_degree(k));
    return d;
}

void EPoly::add_term(const Key& key, const Int& c, DegCap cap) {
    if (c == 0) return;
    if (cap && key_degree(key) > *cap) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

EPoly& EPoly::operator+=(const EPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("EPoly: mismatched num_vars");
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("EPoly: mismatched num_vars");
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

EPoly EPoly::operator-() const {
    EPoly r(n_);
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

EPoly EPoly::mul(const EPoly& a, const EPoly& b, DegCap cap) {
    if (a.n_ != b.n_) throw std::invalid_argument("EPoly: mismatched num_vars");
    EPoly r(a.n_);
    Key key(a.n_, 0);
    for (auto& [ka, ca] : a.terms_) {
        int da = key_degree(ka);
        if (cap && da > *cap) continue;
        for (auto& [kb, cb] : b.terms_) {
            if (cap && da + key_degree(kb) > *cap) continue;
            for (int i = 0; i < a.n_; ++i) key[i] = ka[i] + kb[i];
            r.add_term(key, ca * cb);
        }
    }
    return r;
}

EPoly EPoly::truncated(DegCap cap) const {
    if (!cap) return *this;
    EPoly r(n_);
    for (auto& [k, c] : terms_)
        if (key_degree(k) <= *cap) r.terms_[k] = c;
    return r;
}

Int EPoly::coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

Int EPoly::squarefree_coeff() const {
    Int total = 0;
    for (auto& [key, c] : terms_) {
        if (key_degree(key) != n_) continue;
        Int ways = factorial(n_);
        for (int i = 0; i < n_; ++i)
            for (int rep = 0; rep < key[i]; ++rep) ways /= factorial(i + 1);
        total += c * ways;
    }
    return total;
}

std::string EPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Report order: by (degree, key).
    std::vector<std::pair<int, const Terms::value_type*>> ordered;
    for (auto& t : terms_) ordered.push_back({key_degree(t.first), &t});
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    std::string s;
    for (auto& [deg, t] : ordered) {
        auto& [k, c] = *t;
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (k[i] == 0) continue;
            mono += "e" + std::to_string(i + 1);
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
            mono += "*";
        }
        if (mono.empty())
            s += c.get_str();
        else {
            mono.pop_back();
            if (c == 1)
                s += mono;
            else if (c == -1)
                s += "-" + mono;
            else
                s += c.get_str() + "*" + mono;
        }
    }
    return s;
}

EPoly ring_ops(const EPoly& p, const EPoly& q, RingOp op, DegCap cap) {
    switch (op) {
        case RingOp::add: return (p + q).truncated(cap);
        case RingOp::sub: return (p - q).truncated(cap);
        case RingOp::mul: return EPoly::mul(p, q, cap);
    }
    throw std::invalid_argument("ring_ops: unknown op");
}

EPoly f_kernel(int n, int r) {
    EPoly s(n);
    for (int i = 0; i <= n; ++i) {
        if (i + r < 0 || i + r > n) continue;
        s += EPoly::gen(n, i) * EPoly::gen(n, i + r);
    }
    return s;
}

EPoly big_f(int n, int r, int N) {
    if (N < 1) throw std::invalid_argument("big_f: N >= 1 required");
    EPoly s(n);
    // f_{r+Nk} = 0 unless |r+Nk| <= n.
    for (int k = -(std::abs(r) + n) / N - 1; k <= (std::abs(r) + n) / N + 1; ++k)
        if (std::abs(r + N * k) <= n) s += f_kernel(n, r + N * k);
    return s;
}

EPoly big_f_bar(int n, int r, int N) {
    if (N < 1) throw std::invalid_argument("big_f_bar: N >= 1 required");
    EPoly s(n);
    for (int k = -(std::abs(r) + n) / N - 1; k <= (std::abs(r) + n) / N + 1; ++k)
        if (std::abs(r + N * k) <= n) {
            EPoly f = f_kernel(n, r + N * k);
            if (k % 2 == 0)
                s += f;
            else
                s -= f;
        }
    return s;
}

EPoly e_sum(int n) {
    EPoly s(n);
    for (int i = 0; i <= n; ++i) s += EPoly::gen(n, i);
    return s;
}

EPoly e_alt(int n) {
    EPoly s(n);
    for (int i = 0; i <= n; ++i) {
        if (i % 2 == 0)
            s += EPoly::gen(n, i);
        else
            s -= EPoly::gen(n, i);
    }
    return s;
}

EMatrix::EMatrix(int rows, int cols, int num_vars)
    : rows_(rows), cols_(cols), n_(num_vars),
      data_(static_cast<size_t>(rows) * cols, EPoly(num_vars)) {}

bool EMatrix::is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

namespace {

// det of the submatrix spanned by rows [row..m) and the column set mask,
// memoized on mask (rows are determined by popcount).
EPoly det_rec(const EMatrix& m, int row, unsigned mask, DegCap cap,
              std::unordered_map<unsigned, EPoly>& memo) {
    if (mask == 0) return EPoly::constant(m.num_vars(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    EPoly acc(m.num_vars());
    int sign = 1;
    for (int j = 0; j < m.cols(); ++j) {
        if (!(mask & (1u << j))) continue;
        const EPoly& entry = m.at(row, j);
        if (!entry.is_zero()) {
            EPoly sub = det_rec(m, row + 1, mask & ~(1u << j), cap, memo);
            EPoly term = EPoly::mul(entry, sub, cap);
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

EPoly pf_rec(const EMatrix& m, unsigned mask, DegCap cap,
             std::unordered_map<unsigned, EPoly>& memo) {
    if (mask == 0) return EPoly::constant(m.num_vars(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = 0;
    while (!(mask & (1u << first))) ++first;
    EPoly acc(m.num_vars());
    int sign = 1;
    for (int j = first + 1; j < m.rows(); ++j) {
        if (!(mask & (1u << j))) continue;
        const EPoly& entry = m.at(first, j);
        if (!entry.is_zero()) {
            EPoly sub =
                pf_rec(m, mask & ~(1u << first) & ~(1u << j), cap, memo);
            EPoly term = EPoly::mul(entry, sub, cap);
            if (sign < 0) term = -term;
            acc += term;
        }
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

EPoly determinant(const EMatrix& m, DegCap cap) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: non-square matrix");
    if (m.rows() > 20) throw std::invalid_argument("determinant: too large");
    std::unordered_map<unsigned, EPoly> memo;
    return det_rec(m, 0, m.cols() ? (1u << m.cols()) - 1 : 0, cap, memo);
}

EPoly pfaffian(const EMatrix& m, DegCap cap) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("pfaffian: non-square matrix");
    if (m.rows() % 2 != 0)
        throw std::invalid_argument("pfaffian: odd-sized matrix");
    if (!m.is_skew_symmetric())
        throw std::invalid_argument("pfaffian: matrix is not skew-symmetric");
    if (m.rows() > 20) throw std::invalid_argument("pfaffian: too large");
    std::unordered_map<unsigned, EPoly> memo;
    return pf_rec(m, m.rows() ? (1u << m.rows()) - 1 : 0, cap, memo);
}

namespace {

Int int_det_rec(const std::vector<std::vector<Int>>& m, int row, unsigned mask,
                std::unordered_map<unsigned, Int>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Int acc = 0;
    int sign = 1;
    for (size_t j = 0; j < m.size(); ++j) {
        if (!(mask & (1u << j))) continue;
        if (m[row][j] != 0)
            acc += sign * m[row][j] *
                   int_det_rec(m, row + 1, mask & ~(1u << j), memo);
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

Int int_pf_rec(const std::vector<std::vector<Int>>& m, unsigned mask,
               std::unordered_map<unsigned, Int>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int first = 0;
    while (!(mask & (1u << first))) ++first;
    Int acc = 0;
    int sign = 1;
    for (size_t j = first + 1; j < m.size(); ++j) {
        if (!(mask & (1u << j))) continue;
        if (m[first][j] != 0)
            acc += sign * m[first][j] *
                   int_pf_rec(m, mask & ~(1u << first) & ~(1u << j), memo);
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

Int int_determinant(const std::vector<std::vector<Int>>& m) {
    for (auto& r : m)
        if (r.size() != m.size())
            throw std::invalid_argument("int_determinant: non-square");
    std::unordered_map<unsigned, Int> memo;
    return int_det_rec(m, 0, m.empty() ? 0 : (1u << m.size()) - 1, memo);
}

Int int_pfaffian(const std::vector<std::vector<Int>>& m) {
    if (m.size() % 2 != 0)
        throw std::invalid_argument("int_pfaffian: odd size");
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size())
            throw std::invalid_argument("int_pfaffian: non-square");
        for (size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != -m[j][i])
                throw std::invalid_argument("int_pfaffian: not skew-symmetric");
    }
    std::unordered_map<unsigned, Int> memo;
    return int_pf_rec(m, m.empty() ? 0 : (1u << m.size()) - 1, memo);
}

}  // namespace cylschur
