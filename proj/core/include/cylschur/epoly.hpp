#ifndef CYLSCHUR_EPOLY_HPP
#define CYLSCHUR_EPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cylschur/bigint.hpp"

namespace cylschur {

// Optional graded-degree cap; deg e_k = k.
using DegCap = std::optional<int>;

// Exact sparse polynomial in the elementary symmetric generators e_1..e_n
// of n variables (e_0 = 1, e_k = 0 for k > n or k < 0), with
// arbitrary-precision integer coefficients.  Keys are exponent vectors
// over e_1..e_n compared lexicographically; zero coefficients are never
// stored.
class EPoly {
  public:
    using Key = std::vector<int>;  // Key[i] = multiplicity of e_{i+1}
    using Terms = std::map<Key, Int>;

    explicit EPoly(int num_vars = 1) : n_(num_vars) {}

    static EPoly zero(int n) { return EPoly(n); }
    static EPoly constant(int n, Int c);
    // e_k as a polynomial: 1 for k = 0, 0 outside [0, n].
    static EPoly gen(int n, int k);

    int num_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    static int key_degree(const Key& k);  // graded degree, deg e_j = j
    int degree() const;                   // max term degree, -1 for zero

    void add_term(const Key& key, const Int& c, DegCap cap = std::nullopt);

    EPoly& operator+=(const EPoly& o);
    EPoly& operator-=(const EPoly& o);
    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b) {
        return mul(a, b, std::nullopt);
    }
    EPoly operator-() const;
    bool operator==(const EPoly&) const = default;

    static EPoly mul(const EPoly& a, const EPoly& b, DegCap cap);
    EPoly truncated(DegCap cap) const;

    // Coefficient of the given key (zero if absent).
    Int coeff(const Key& key) const;

    // Coefficient of x_1 x_2 ... x_n in the monomial expansion: each term
    // e_{k_1}^{m_1}...  contributes n!/prod (k_i!^{m_i}) when the indices
    // sum to n, nothing otherwise.
    Int squarefree_coeff() const;

    std::string to_string() const;

  private:
    int n_;
    Terms terms_;
};

enum class RingOp { add, sub, mul };
// Dispatcher used by the CLI; throws on mismatched num_vars.
EPoly ring_ops(const EPoly& p, const EPoly& q, RingOp op, DegCap cap);

// f_r = sum_i e_i e_{i+r}; vanishes unless |r| <= n.
EPoly f_kernel(int n, int r);
// F_{r,N} = sum_k f_{r+Nk} and the signed variant; both finite.
EPoly big_f(int n, int r, int N);
EPoly big_f_bar(int n, int r, int N);
// e(x) = sum_{i>=0} e_i and ebar(x) = sum (-1)^i e_i.
EPoly e_sum(int n);
EPoly e_alt(int n);

// Dense rectangular matrix of EPoly entries.
class EMatrix {
  public:
    EMatrix(int rows, int cols, int num_vars);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_vars() const { return n_; }
    EPoly& at(int i, int j) { return data_[i * cols_ + j]; }          // 0-based
    const EPoly& at(int i, int j) const { return data_[i * cols_ + j]; }

    bool is_skew_symmetric() const;

  private:
    int rows_, cols_, n_;
    std::vector<EPoly> data_;
};

// Division-free determinant (memoized cofactor expansion); the empty
// matrix has determinant 1.  Throws on non-square input.
EPoly determinant(const EMatrix& m, DegCap cap = std::nullopt);

// Division-free Pfaffian by expansion along the first row; Pf of the
// empty matrix is 1.  Throws unless the input is even-sized and
// skew-symmetric.
EPoly pfaffian(const EMatrix& m, DegCap cap = std::nullopt);

// Plain integer variants used by the structure-matrix machinery.
Int int_determinant(const std::vector<std::vector<Int>>& m);
Int int_pfaffian(const std::vector<std::vector<Int>>& m);

}  // namespace cylschur

#endif
