#ifndef CYLSCHUR_UPDOWN_HPP
#define CYLSCHUR_UPDOWN_HPP

#include <functional>
#include <vector>

#include "cylschur/partition.hpp"
#include "cylschur/xpoly.hpp"

namespace cylschur {

// Up-down tableau: chain empty = lambda^0, lambda^1, ..., lambda^{2n} = empty,
// alternating growth/shrink by vertical strips; every shape has at most h
// rows and every even-indexed shape at most w columns (odd-indexed shapes
// may reach width w+1).
struct UpDownTableau {
    std::vector<Partition> chain;
    int n() const { return static_cast<int>(chain.size()) / 2; }
};

bool udt_admissible(const UpDownTableau& t, int h, int w);

enum class UdtMarking { none, h_star, w_star, both };

// A marked up-down tableau: marks in m1 need lambda^{2j-1}_h = 0, marks in
// m2 need lambda^{2j-1}_1 = w+1.  Weight: x_i ^ (-|l^{2i-2}| + 2|l^{2i-1}|
// - |l^{2i}|), times x_j for j in m1 and -1/x_j for j in m2.
struct MarkedUdt {
    UpDownTableau base;
    std::vector<int> m1, m2;  // 1-based positions
};

XPoly marked_udt_weight(const MarkedUdt& t, int num_vars);

void for_each_marked_udt(int n, int h, int w, UdtMarking marking,
                         const std::function<void(const MarkedUdt&)>& fn);

// Signed sum of weights over the (marked) family in n variables.
XPoly udt_weight_sum(int n, int h, int w, UdtMarking marking);

// ---------------------------------------------------------------------
// Lattice paths with steps: vertical, forward diagonal from even height
// (weight x_j into height 2j-1), backward diagonal from odd height (weight
// x_j into height 2j).  Even-height abscissas confined to [a, b].

enum class SPathRegion { plain, right_marked, left_marked, both_marked };

// Weighted sum over L(a,b; (i,0) -> (j,2n)) with optional branch-point
// markings: left_marked adds (1 + x_j) at 1-branch points (a = 1),
// right_marked multiplies the forward-backward spike at b by (1 - 1/x_j).
// Pass a large symmetric window for the unbounded case.
XPoly spath_weight_sum(SPathRegion region, int a, int b, int i, int j, int n,
                       int num_vars);

// A single path as the x-coordinates at heights 0..2n.
using SPath = std::vector<int>;

void for_each_spath(int a, int b, int i, int j, int n,
                    const std::function<void(const SPath&)>& fn);
XPoly spath_weight(const SPath& p, int num_vars);

// The sign-reversing involution behind the plain-region identity: acts on
// paths from (eps i + k(2N+2), 0) to (j, 2n) that leave [1, N], reflecting
// the prefix above the topmost boundary contact.  Returns the reflected
// path together with its new starting abscissa.
SPath spath_reflect_involution(const SPath& p, int N);

enum class UpdownCheck {
    // determinant equals the signed weighted family sum, per marking
    sum_plain,
    sum_w_star,
    sum_h_star,
    sum_both,
    // coefficientwise tableau counts, per marking
    coeff_plain,
    coeff_w_star,
    coeff_h_star,
    coeff_both,
};

bool verify_updown(UpdownCheck which, int h, int w, int n);

}  // namespace cylschur

#endif
