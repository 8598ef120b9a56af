#ifndef CYLSCHUR_MINOR_SUMMATION_HPP
#define CYLSCHUR_MINOR_SUMMATION_HPP

#include <functional>

#include "cylschur/epoly.hpp"

namespace cylschur {

// Antisymmetric sequence oracle: z(-i) = -z(i), z(0) = 0.
using ZOracle = std::function<EPoly(int)>;

enum class GordonVariant { base, var1, var2, var3 };

// Gordon's Pfaffian-to-determinant reduction and its three row/column
// operation variants:
//   base: Pf_{1<=i,j<=2h}(z_{j-i})
//           = det_h(z_{|j-i|+1} + z_{|j-i|+3} + ... + z_{i+j-1})
//   var1: det_h(sum_{s=0}^{2 min(i,j)-2} (-1)^s (z_{i+j-1-s} - z_{i+j-2-s}))
//   var2: det_h(sum_{s=0}^{2 min(i,j)-2} (z_{i+j-1-s} + z_{i+j-2-s}))
//   var3: det_h of the bordered four-case form.
// Returns true iff both sides agree (optionally truncated at cap).
bool verify_gordon(const ZOracle& z, int h, GordonVariant variant,
                   DegCap cap = {});

enum class MinorParity { even, odd };

// Ishikawa--Wakayama minor summation.  For m even, A is p x p and
//   sum_K Pf(A^K_K) det(M^{[m]}_K) = Pf(M A M^t).
// For m odd, A is (p+1) x (p+1) with a 0-indexed border row/column and the
// compressed Pfaffian gains the border row sum_r a_{0,r} M_{j,r}.
// K runs over increasing length-m sequences in [1..p].
bool verify_minor_summation(const EMatrix& m_mat, const EMatrix& a,
                            MinorParity parity, DegCap cap = {});

}  // namespace cylschur

#endif
