#include "cylschur/xpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace cylschur {

XPoly XPoly::constant(int n, Int c) {
    XPoly p(n);
    if (c != 0) p.terms_[Key(n, 0)] = std::move(c);
    return p;
}

XPoly XPoly::monomial(int n, const Key& key, Int c) {
    if (static_cast<int>(key.size()) != n)
        throw std::invalid_argument("XPoly::monomial: bad key size");
    XPoly p(n);
    if (c != 0) p.terms_[key] = std::move(c);
    return p;
}

int XPoly::key_degree(const Key& k) {
    return std::accumulate(k.begin(), k.end(), 0);
}

void XPoly::add_term(const Key& key, const Int& c, DegCap cap) {
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

XPoly& XPoly::operator+=(const XPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("XPoly: mismatched num_vars");
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (n_ != o.n_) throw std::invalid_argument("XPoly: mismatched num_vars");
    for (auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

XPoly XPoly::mul(const XPoly& a, const XPoly& b, DegCap cap) {
    if (a.n_ != b.n_) throw std::invalid_argument("XPoly: mismatched num_vars");
    XPoly r(a.n_);
    Key key(a.n_, 0);
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) key[i] = ka[i] + kb[i];
            r.add_term(key, ca * cb, cap);
        }
    return r;
}

XPoly XPoly::truncated(DegCap cap) const {
    if (!cap) return *this;
    XPoly r(n_);
    for (auto& [k, c] : terms_)
        if (key_degree(k) <= *cap) r.terms_[k] = c;
    return r;
}

Int XPoly::coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

bool XPoly::all_exponents_nonnegative() const {
    for (auto& [k, c] : terms_)
        for (int e : k)
            if (e < 0) return false;
    return true;
}

std::string XPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (k[i] == 0) continue;
            mono += "x" + std::to_string(i + 1);
            if (k[i] != 1) mono += "^" + std::to_string(k[i]);
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

XPoly elementary_xpoly(int n, int k) {
    if (k == 0) return XPoly::constant(n, 1);
    if (k < 0 || k > n) return XPoly::zero(n);
    XPoly p(n);
    // all k-subsets of {1..n}
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        XPoly::Key key(n, 0);
        for (int i : idx) key[i] = 1;
        p.add_term(key, 1);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return p;
}

XPoly monomial_expand(const EPoly& p, DegCap cap) {
    int n = p.num_vars();
    XPoly out(n);
    for (auto& [key, c] : p.terms()) {
        if (cap && EPoly::key_degree(key) > *cap) continue;
        XPoly term = XPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int rep = 0; rep < key[i]; ++rep)
                term = XPoly::mul(term, elementary_xpoly(n, i + 1), cap);
        out += term;
    }
    return out;
}

}  // namespace cylschur
