#ifndef CYLSCHUR_PFAFFIAN_FRAMEWORK_HPP
#define CYLSCHUR_PFAFFIAN_FRAMEWORK_HPP

#include <vector>

#include "cylschur/bigint.hpp"
#include "cylschur/littlewood.hpp"
#include "cylschur/partition.hpp"

namespace cylschur {

// The eight skew-symmetric structure matrices behind the affine bounded
// Littlewood identities.  Rows/columns are indexed by p border indices
// followed by the positive integers; borders are encoded as the integers
// 1-p, ..., 0 so that the natural order matches the intended total order.
enum class StructureKind {
    b,            // m odd,  p = 1, statistic 1
    b_bar,        // m even, p = 0, statistic 1
    c_plus,       // m even, p = 0, statistic c+
    c_minus,      // m even, p = 0, statistic c-
    d_plus_even,  // m even, p = 0, statistic 2^{h-1} d+
    d_minus_even, // m even, p = 2, statistic 2^h d-
    d_plus_odd,   // m odd,  p = 1, statistic d+
    d_minus_odd,  // m odd,  p = 1, statistic d-
};

const char* structure_kind_name(StructureKind kind);

class StructureMatrix {
  public:
    // Throws when the parity of m (and, for the d kinds, of w) does not
    // match the kind.
    StructureMatrix(StructureKind kind, int m, int w);

    StructureKind kind() const { return kind_; }
    int m() const { return m_; }
    int w() const { return w_; }
    int period() const { return n_period_; }  // N = m + w
    int border_size() const { return p_; }
    // Border indices in order: 1-p, ..., 0.
    std::vector<int> border_indices() const;

    // Antisymmetric entry; accepts any pair of valid indices.
    Int entry(int r, int s) const;

    // The statistic u(lambda) the matrix represents, including the scalar
    // factors 2^{h-1} and 2^h of the even orthogonal kinds.
    Int statistic(const Partition& lambda) const;

    // The identity whose left side sum_lambda u(lambda) s_{lambda[m,w]'}
    // this matrix computes (u without the scalar), plus that scalar.
    IdentityId identity() const;
    Int scalar() const;
    int identity_h() const;  // the h with m = 2h or 2h+1

  private:
    Int upper_entry(int r, int s) const;  // r < s
    StructureKind kind_;
    int m_, w_, n_period_, p_;
};

// I_m(lambda) = (lambda_m + 1, lambda_{m-1} + 2, ..., lambda_1 + m).
std::vector<int> index_sequence(const Partition& lambda, int m);

// Exhaustively verifies the three framework conditions over all index
// sequences within [1, index_bound]:
//  (i)   Pf A^{I_0 + I_m(lambda)} = u(lambda) on Par(m,w);
//  (ii)  the N-shift equality when i_m - i_1 > N;
//  (iii) vanishing when two indices agree mod N.
bool check_framework_conditions(StructureKind kind, int m, int w,
                                int index_bound);

// Pf(T_p A T_p^t) with the identity-bordered matrix of e_{j-i}, columns
// truncated at p + m + n (all dropped entries vanish).  Equals
// scalar() * lhs_sum(identity(), ...) through the degree cap.
EPoly general_pfaffian_sum(StructureKind kind, int m, int w, int n, int cap);

}  // namespace cylschur

#endif
