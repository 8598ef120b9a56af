#ifndef CYLSCHUR_LITTLEWOOD_HPP
#define CYLSCHUR_LITTLEWOOD_HPP

#include <chrono>
#include <optional>
#include <string>

#include "cylschur/epoly.hpp"
#include "cylschur/partition.hpp"

namespace cylschur {

// The eight affine bounded Littlewood identities and their classical
// (w -> infinity) limits.
enum class IdentityId {
    abl_odd,    // odd orthogonal, m = 2h+1
    abl_even,   // odd orthogonal companion, m = 2h
    c_plus,     // symplectic weights, m = 2h
    c_minus,
    d1,         // even orthogonal, m = 2h,   w even; 1/2 via doubling
    d2,         // even orthogonal, m = 2h,   w even
    d3,         // even orthogonal, m = 2h+1, w even
    d4,         // even orthogonal, m = 2h+1, w even
    classical_odd,
    classical_even,
    classical_sp,
    classical_d1,
    classical_d2,
    classical_d3,
    classical_d4,
};

const char* identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);
bool identity_is_affine(IdentityId id);
// The classical identity an affine one degenerates to as w -> infinity.
IdentityId classical_limit(IdentityId id);
// Summation length m (2h or 2h+1) of the left side.
int identity_m(IdentityId id, int h);
// True when the right side carries a 1/2 prefactor, handled by comparing
// 2*LHS against the unhalved determinant.
bool identity_uses_doubling(IdentityId id);

enum class StatKind { unit, c_plus, c_minus, d_plus, d_minus };

// The summand weights: c+- pair consecutive parts, with a +-1 branch when
// the spread equals w and the offset pairs match; d+- test all-even /
// all-odd parts (lambda_i = 0 beyond the length, so "all odd" forces
// length exactly m).  Pass w < 0 for the classical (unbounded) case, which
// disables the spread branch of c+-.
int statistic_weight(StatKind kind, const Partition& lambda, int m, int w);

// Left side: sum over Par(m,w) (or Par(m) for classical ids) of the
// weighted cylindric Schur functions, exact through degree cap.  The
// lambda-sum is restricted to |lambda| <= cap: sound because each lambda
// contributes only in degree |lambda| (the determinant terms are
// homogeneous; asserted inside cylindric_schur_jt).
EPoly lhs_sum(IdentityId id, int h, int w, int n, int cap);

// Right side determinant (with prefactors); for d1/classical_d1 the
// determinant itself is returned and the verifier doubles the left side.
EPoly rhs_det(IdentityId id, int h, int w, int n, int cap);

struct Discrepancy {
    EPoly::Key key;
    Int lhs, rhs;
};

struct VerificationReport {
    IdentityId identity;
    int h, w, num_vars, degree_cap;
    bool equal;
    std::optional<Discrepancy> first_discrepancy;
    std::chrono::milliseconds elapsed{0};
};

// Compares the two sides coefficient-by-coefficient in graded key order and
// reports the first discrepancy.  Inequality is an outcome, not an error.
VerificationReport verify_identity(IdentityId id, int h, int w, int n, int cap);

}  // namespace cylschur

#endif
