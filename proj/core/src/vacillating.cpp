#include "cylschur/vacillating.hpp"

#include <map>
#include <stdexcept>

#include "cylschur/growth.hpp"
#include "cylschur/tableau.hpp"

namespace cylschur {

namespace {

bool in_box(const Partition& p, int h, int w) {
    return p.length() <= h && p.part(1) <= w;
}

// Zero step at shape p allowed under the variant?
bool zero_ok(const Partition& p, int h, int w, VtVariant v) {
    bool on_bottom = p.part(h) == 0;  // x_h = 0
    bool on_top = p.part(1) == w;     // x_1 = w
    switch (v) {
        case VtVariant::plain: return true;
        case VtVariant::w_star: return !on_top;
        case VtVariant::h_star: return on_bottom;
        case VtVariant::prime: return on_bottom != on_top;
    }
    return false;
}

}  // namespace

bool vt_admissible(const VtChain& chain, int h, int w, VtVariant variant) {
    if (chain.empty() || !chain.front().empty() || !chain.back().empty())
        return false;
    for (auto& p : chain)
        if (!in_box(p, h, w)) return false;
    for (size_t i = 1; i < chain.size(); ++i) {
        const Partition &a = chain[i - 1], &b = chain[i];
        if (a == b) {
            if (!zero_ok(b, h, w, variant)) return false;
            continue;
        }
        int d = b.size() - a.size();
        if (d != 1 && d != -1) return false;
        const Partition &small = d == 1 ? a : b, &big = d == 1 ? b : a;
        if (!big.contains(small)) return false;
    }
    return true;
}

int vt_zero_on_top(const VtChain& chain, int w) {
    int z = 0;
    for (size_t i = 1; i < chain.size(); ++i)
        if (chain[i - 1] == chain[i] && chain[i].part(1) == w) ++z;
    return z;
}

namespace {

std::vector<Partition> box_shapes(int h, int w) {
    std::vector<Partition> shapes;
    for (auto& p : iter_family(h, std::nullopt, h * w))
        if (in_box(p, h, w)) shapes.push_back(p);
    return shapes;
}

std::vector<Partition> moves(const Partition& p, int h, int w) {
    std::vector<Partition> out;
    for (int r = 1; r <= std::min(h, p.length() + 1); ++r) {
        if (r > 1 && p.part(r) == p.part(r - 1)) continue;
        Partition q = p.with_cell_added(r);
        if (in_box(q, h, w)) out.push_back(q);
    }
    for (int r = 1; r <= p.length(); ++r) {
        if (r < p.length() && p.part(r) == p.part(r + 1)) continue;
        out.push_back(p.with_cell_removed(r));
    }
    return out;
}

}  // namespace

void for_each_vt(int n, int h, int w, VtVariant variant,
                 const std::function<void(const VtChain&)>& fn) {
    VtChain chain{Partition()};
    std::function<void(int)> rec = [&](int step) {
        if (step == n) {
            if (chain.back().empty()) fn(chain);
            return;
        }
        const Partition cur = chain.back();
        if (zero_ok(cur, h, w, variant)) {
            chain.push_back(cur);
            rec(step + 1);
            chain.pop_back();
        }
        for (auto& q : moves(cur, h, w)) {
            chain.push_back(q);
            rec(step + 1);
            chain.pop_back();
        }
    };
    rec(0);
}

Int vt_count(int n, int h, int w, VtVariant variant) {
    std::map<Partition, Int> cur;
    cur[Partition()] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<Partition, Int> next;
        for (auto& [p, c] : cur) {
            if (zero_ok(p, h, w, variant)) next[p] += c;
            for (auto& q : moves(p, h, w)) next[q] += c;
        }
        cur = std::move(next);
    }
    auto it = cur.find(Partition());
    return it == cur.end() ? Int(0) : it->second;
}

Int vt_signed_count(int n, int h, int w) {
    std::map<Partition, Int> cur;
    cur[Partition()] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<Partition, Int> next;
        for (auto& [p, c] : cur) {
            if (zero_ok(p, h, w, VtVariant::prime)) {
                if (p.part(1) == w)
                    next[p] -= c;  // zero step on x_1 = w carries -1
                else
                    next[p] += c;
            }
            for (auto& q : moves(p, h, w)) next[q] += c;
        }
        cur = std::move(next);
    }
    auto it = cur.find(Partition());
    return it == cur.end() ? Int(0) : it->second;
}

VtChain chen_phi(const Matching& m, int h, int w) {
    CrossNestProfile prof = crossing_nesting_profile(m);
    if (!is_noncrossing(prof, 2 * (h + 1)) || !is_nonnesting(prof, 2 * (w + 1)))
        throw std::invalid_argument("chen_phi: matching outside NCNN(h+1,w+1)");
    TriDiagram g = tri_forward(m, FixedPointMode::dropped);
    VtChain chain(m.n() + 1);
    for (int t = 0; t <= m.n(); ++t) chain[t] = g.hypotenuse[2 * t];
    return chain;
}

Matching chen_phi_inverse(const VtChain& chain) {
    // matching_vt is the conjugated reading of the same triangular pass.
    std::vector<Partition> conj(chain.size());
    for (size_t i = 0; i < chain.size(); ++i) conj[i] = chain[i].conjugate();
    return matching_vt_inverse(conj, FixedPointMode::dropped);
}

bool verify_correspondence(Correspondence which, int n, int h, int w) {
    auto csyt = [&](int hh, int ww) {
        return csyt_count(n, hh, ww, CsytMethod::chain_dp);
    };
    switch (which) {
        case Correspondence::syt_vt1:
            return csyt(2 * h + 1, 2 * w + 1) == vt_count(n, h, w, VtVariant::plain);
        case Correspondence::syt_vt2:
            return csyt(2 * h + 1, 2 * w) == vt_count(n, h, w, VtVariant::w_star);
        case Correspondence::syt_vt3:
            return csyt(2 * h, 2 * w + 1) == vt_count(n, h, w, VtVariant::h_star);
        case Correspondence::syt_vt4:
            return csyt(2 * h, 2 * w) == vt_signed_count(n, h, w);
        case Correspondence::ncnn_vt1:
            return ncnn_count(n, 2 * (h + 1), 2 * (w + 1)) ==
                   vt_count(n, h, w, VtVariant::plain);
        case Correspondence::ncnn_vt2:
            return ncnn_count(n, 2 * (h + 1), 2 * w + 1) ==
                   vt_count(n, h, w, VtVariant::w_star);
        case Correspondence::ncnn_vt3:
            return ncnn_count(n, 2 * h + 1, 2 * (w + 1)) ==
                   vt_count(n, h, w, VtVariant::h_star);
        case Correspondence::ncnn_vt4:
            return ncnn_prime_signed(n, h, w) == vt_signed_count(n, h, w);
        case Correspondence::syt_ncnn1:
            return csyt(2 * h + 1, 2 * w + 1) ==
                   ncnn_count(n, 2 * (h + 1), 2 * (w + 1));
        case Correspondence::syt_ncnn2:
            return csyt(2 * h + 1, 2 * w) == ncnn_count(n, 2 * (h + 1), 2 * w + 1);
        case Correspondence::syt_ncnn3:
            return csyt(2 * h, 2 * w + 1) == ncnn_count(n, 2 * h + 1, 2 * (w + 1));
        case Correspondence::syt_ncnn4:
            return csyt(2 * h, 2 * w) == ncnn_prime_signed(n, h, w);
    }
    throw std::invalid_argument("verify_correspondence: unknown case");
}

}  // namespace cylschur
