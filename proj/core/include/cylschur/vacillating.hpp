#ifndef CYLSCHUR_VACILLATING_HPP
#define CYLSCHUR_VACILLATING_HPP

#include <functional>
#include <vector>

#include "cylschur/bigint.hpp"
#include "cylschur/matching.hpp"
#include "cylschur/partition.hpp"

namespace cylschur {

// Chains (empty = lambda^0, ..., lambda^n = empty) of partitions inside the
// h x w box with consecutive shapes differing by at most one cell.  As
// walks: x = (lambda_1.. lambda_h) in { w >= x_1 >= ... >= x_h >= 0 }.
// Variants restrict where zero steps may occur:
//   plain   anywhere
//   w_star  never on x_1 = w
//   h_star  only on x_h = 0
//   prime   only on x_h = 0 or x_1 = w, but not both; z counts the zero
//           steps on x_1 = w
enum class VtVariant { plain, w_star, h_star, prime };

using VtChain = std::vector<Partition>;

bool vt_admissible(const VtChain& chain, int h, int w, VtVariant variant);
int vt_zero_on_top(const VtChain& chain, int w);  // z(T)

void for_each_vt(int n, int h, int w, VtVariant variant,
                 const std::function<void(const VtChain&)>& fn);

// DP-backed count; cross-checked against the enumeration in tests.
Int vt_count(int n, int h, int w, VtVariant variant);
// sum over VT'_n(h,w) of (-1)^{z(T)}.
Int vt_signed_count(int n, int h, int w);

// The bijection NCNN_n(h+1,w+1) -> VT_n(h,w) built on the triangular
// growth pass (fixed points dropped, every second hypotenuse label, no
// conjugation).  Satisfies: fixed point <-> zero step; fixed point in an
// (h+1/2)-crossing <-> zero step off x_h = 0; fixed point in a
// (w+1/2)-nesting <-> zero step on x_1 = w.  Throws when the input has a
// crossing or nesting beyond the stated bounds.
VtChain chen_phi(const Matching& m, int h, int w);
Matching chen_phi_inverse(const VtChain& chain);

// The twelve count equalities tying CSYT, VT and NCNN together.
enum class Correspondence {
    syt_vt1, syt_vt2, syt_vt3, syt_vt4,
    ncnn_vt1, ncnn_vt2, ncnn_vt3, ncnn_vt4,
    syt_ncnn1, syt_ncnn2, syt_ncnn3, syt_ncnn4,
};

bool verify_correspondence(Correspondence which, int n, int h, int w);

}  // namespace cylschur

#endif
