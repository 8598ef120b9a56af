#ifndef CYLSCHUR_TABLEAU_HPP
#define CYLSCHUR_TABLEAU_HPP

#include <functional>
#include <vector>

#include "cylschur/bigint.hpp"
#include "cylschur/partition.hpp"
#include "cylschur/xpoly.hpp"

namespace cylschur {

enum class TableauKind { ssyt, rst };

// A straight-shape filling with positive integers.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    int entry(int i, int j) const { return rows_[i - 1][j - 1]; }  // 1-based
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }

    bool is_valid(TableauKind kind) const;
    bool is_standard() const;
    // Multiset of entries as (alpha_1, alpha_2, ...) up to the max entry.
    std::vector<int> content() const;
    XPoly weight(int num_vars) const;  // x^T; entries must be <= num_vars

    bool operator==(const Tableau&) const = default;

  private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

// The cylindric condition of one overlaid shifted copy T + (h,-w).  For a
// valid straight-shape tableau this reduces to shape(T) in Par(h,w) plus
// the wrap-around column comparisons T(h,c) vs T(1,c+w).
bool is_cylindric(const Tableau& t, int h, int w, TableauKind kind);

// Every (h,w)-cylindric tableau of shape lambda with entries <= max_entry.
// Empty when lambda is outside Par(h,w).
std::vector<Tableau> enumerate_cylindric(const Partition& lambda, int h, int w,
                                         TableauKind kind, int max_entry);

// Generating function  sum_{T in CRST(lambda;h,w), entries <= n} x^T.
XPoly cylindric_schur_tableaux(const Partition& lambda, int h, int w, int n,
                               DegCap cap = {});

// The finite Jacobi-Trudi-type sum
//   sum_{k_1+...+k_h=0} det_h( e_{lambda_i - i + j + (h+w) k_i} )
// in n variables; equals the expansion of the tableau generating function.
EPoly cylindric_schur_jt(const Partition& lambda, int h, int w, int n,
                         DegCap cap = {});

// Tr(T;h,w): transpose the periodic filling of the cylinder and read rows
// 1..w.  Maps CRST(lambda;h,w) to CSSYT(Tr(lambda);w,h) and vice versa;
// preserves content.  Throws if t is not (h,w)-cylindric.
Tableau transpose_tableau(const Tableau& t, int h, int w, TableauKind kind);

enum class KostkaMethod { tableaux, paths };

// Number of T in CRST(lambda;h,w) with content alpha; the paths method
// counts walks to (lambda_1..lambda_h) with 0/1 steps confined to
// { x_1 >= ... >= x_h >= x_1 - w }.
Int quantum_kostka(const Partition& lambda, int h, int w,
                   const std::vector<int>& alpha, KostkaMethod method);

enum class CsytMethod { chain_dp, brute, factorial_formula };

// |CSYT_n(h,w)|.  chain_dp counts cell-by-cell chains inside Par(h,w);
// brute enumerates standard tableaux and applies the cylindric check;
// factorial_formula evaluates the exact factorial-determinant count and
// is only admitted for odd h and odd w.
Int csyt_count(int n, int h, int w, CsytMethod method);

// The nonintersecting-lattice-path encoding behind the Jacobi-Trudi sum:
// row i of T (i = 1..h, empty beyond the length) walks from (-i+1, i-1),
// stepping right exactly at the diagonals x+y listed in that row.  Returns
// the x-coordinate profile of each path per diagonal level 0..levels.
std::vector<std::vector<int>> tableau_path_family(const Tableau& t, int h,
                                                  int levels);
bool paths_nonintersecting(const std::vector<std::vector<int>>& fam);

}  // namespace cylschur

#endif
