#ifndef CYLSCHUR_PERIODIC_KERNELS_HPP
#define CYLSCHUR_PERIODIC_KERNELS_HPP

#include <string>
#include <vector>

#include "cylschur/epoly.hpp"

namespace cylschur {

// The antisymmetric quadratic kernels behind the first proof of the affine
// bounded Littlewood identities:
//   d_N(i,j)    = sum_{R_N(a-i) > R_N(b-j)} e_a e_b  -  (reversed)
//   dbar_N(i,j) = the same with signs (-1)^{floor((a-i)/N) + floor((b-j)/N)}.
// Finite in n variables since e_a = 0 outside [0, n].
EPoly d_kernel(int n, int N, int i, int j);
EPoly d_bar_kernel(int n, int N, int i, int j);

// One verified equation of the chain.
struct KernelCheck {
    std::string name;
    bool ran;  // false when the equation's own hypothesis (N > m) fails
    bool ok;
};

struct KernelChainReport {
    bool all_ok;
    std::vector<KernelCheck> checks;
};

// Verifies, through degree cap in n variables, every intermediate
// equality of the first proof at the given (h, N): the reindexing lemmas
// (both parities, guarded by their hypothesis m < N), the bordered-Pfaffian
// identities, the kernel identity dbar_N(i,j) = sum_{r=i-j+1}^{j-i} Fbar_{r,N},
// the Gordon reduction steps, and the two full propositions.
KernelChainReport verify_periodic_kernel_chain(int h, int N, int n, int cap);

// The two reindexing lemmas on their own (m odd / even, m < N): the sum of
// e-determinants over (mu, k) with mu strictly decreasing of spread < N and
// sum k_i = 0 equals the sum over alpha with strictly descending remainder
// sequence (signed by sum floor(alpha_i/N) when m is even).  Sums are exact:
// outside the enumerated windows every determinant vanishes.
bool verify_reindexing_lemma(int m, int N, int n, int cap);

}  // namespace cylschur

#endif
