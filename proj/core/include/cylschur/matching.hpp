#ifndef CYLSCHUR_MATCHING_HPP
#define CYLSCHUR_MATCHING_HPP

#include <functional>
#include <utility>
#include <vector>

#include "cylschur/bigint.hpp"

namespace cylschur {

// Partial matching on {1..n}: disjoint arcs (i,j) with i < j; the
// uncovered points are fixed points.
class Matching {
  public:
    Matching() = default;
    Matching(int n, std::vector<std::pair<int, int>> arcs);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::vector<int> fixed_points() const;
    bool is_fixed(int v) const;

    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching&) const = default;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted by opener
};

void for_each_matching(int n, const std::function<void(const Matching&)>& fn);
Int count_matchings(int n);  // telephone numbers

// Crossing and nesting statistics, including the half-integer variants
// seeded by a fixed point.  Half-integer levels are doubled internally: a
// k-crossing has level 2k; a (k+1/2)-crossing has level 2k+1.
struct CrossNestProfile {
    int max_crossing = 0;   // largest k with a k-crossing
    int max_nesting = 0;
    int max_crossing2 = 0;  // largest doubled level among all variants
    int max_nesting2 = 0;
    // Per fixed point v (in increasing order): the largest k such that v
    // sits inside a (k+1/2)-crossing, resp. (k+1/2)-nesting.
    std::vector<int> fixed_cross;
    std::vector<int> fixed_nest;

    bool has_half_crossing(int k) const;  // a (k+1/2)-crossing exists
    bool has_half_nesting(int k) const;
};

CrossNestProfile crossing_nesting_profile(const Matching& m);

// r-noncrossing with r given in doubled units (2r integral): no crossing of
// doubled level >= r2.
bool is_noncrossing(const CrossNestProfile& p, int r2);
bool is_nonnesting(const CrossNestProfile& p, int s2);

// |NCNN_n(r,s)| with r2 = 2r, s2 = 2s.
Int ncnn_count(int n, int r2, int s2);

// Membership and the signed statistic z for NCNN'_n(h+1,w+1): every fixed
// point is in neither or both of an (h+1/2)-crossing and a (w+1/2)-nesting;
// z counts the "both" fixed points.
bool ncnn_prime_member(const Matching& m, const CrossNestProfile& p, int h,
                       int w);
int ncnn_prime_z(const CrossNestProfile& p, int h, int w);
Int ncnn_prime_signed(int n, int h, int w);

// The exact walk-count evaluation of |NCNN_n(h+1,w+1)| through truncated
// modified-Bessel power series (rational arithmetic throughout).
Int ncnn_bessel_count(int n, int h, int w);

}  // namespace cylschur

#endif
