#ifndef CYLSCHUR_MOTZKIN_HPP
#define CYLSCHUR_MOTZKIN_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cylschur/bigint.hpp"
#include "cylschur/matching.hpp"
#include "cylschur/tableau.hpp"

namespace cylschur {

// Paths are stored as their height (or coordinate) profiles p_0..p_n.

// Walks with steps R=(1,0), U=(0,1), B=(-1,-1) inside
// { m >= x_1 >= x_2 >= 0 }, as coordinate pair sequences.
using TriangleWalk = std::vector<std::pair<int, int>>;

// Motzkin paths (U/D/H, heights in [0, m], closed), Dyck prefixes
// (U/D, heights in [0, w]), and up-down paths (U/D, heights in
// [-floor(w/2), floor((w+1)/2)], ending at 0 or 1 with the parity of n).
using HeightPath = std::vector<int>;

enum class PathFamily {
    triangle,       // T_n(m)
    motzkin,        // Mot_n(w)
    motzkin_prime,  // Mot'_n(w):  no H on x_2 = w
    motzkin_1,      // Mot^1_n(w): H only on x_2 = 0
    motzkin_2,      // Mot^2_n(w): H only on x_2 = 0 or x_2 = w
    motzkin_3,      // Mot^3_n(w): Mot^2 without special horizontal steps
    dyck_prefix,    // DP_n(w)
    updown_path,    // GD_n(w)
};

const char* path_family_name(PathFamily f);

void for_each_triangle_walk(int n, int m,
                            const std::function<void(const TriangleWalk&)>& fn);
void for_each_height_path(PathFamily f, int n, int bound,
                          const std::function<void(const HeightPath&)>& fn);

// Exact count by dynamic programming (enumeration-backed for motzkin_3,
// whose defining condition is nonlocal).
Int count_family(PathFamily f, int n, int bound);
Int count_family_enumerated(PathFamily f, int n, int bound);
// sum over Mot^2_n(w) of (-1)^{k(p)}, k = number of H steps on x_2 = w.
Int motzkin2_signed_sum(int n, int w);
int horizontal_steps_on_top(const HeightPath& p, int w);

// Height-profile serialization: "RUB" letters for triangle walks, "UDH"
// letters for Motzkin paths and U/D words for prefixes and up-down paths.
std::string triangle_to_string(const TriangleWalk& p);
TriangleWalk triangle_from_string(const std::string& s);
std::string path_to_string(const HeightPath& p);
HeightPath path_from_string(const std::string& s, int start = 0);

// Row-to-step bijections: CSYT_n(3,w) <-> T_n(w) (rows 1/2/3 to R/U/B) and
// CSYT_n(2,w) <-> DP_n(w) (rows 1/2 to U/D).
TriangleWalk csyt_to_triangle(const Tableau& t, int w);
Tableau triangle_to_csyt(const TriangleWalk& p);
HeightPath csyt_to_dyck_prefix(const Tableau& t, int w);
Tableau dyck_prefix_to_csyt(const HeightPath& p);

// Openers to U, closers to D, fixed points to H; requires a 2-noncrossing
// matching.  Lands in Mot_n(w) when m avoids (w+1)-nestings.
HeightPath matching_to_motzkin(const Matching& m);
Matching motzkin_to_matching(const HeightPath& p);

// Is the horizontal step p_j -> p_{j+1} special (j is 0-based)?
bool is_special_step(const HeightPath& p, int w, int j);
// The sign-reversing involution on Mot^2_n(w): fixed points are exactly
// Mot^3_n(w); elsewhere it moves the first special horizontal step between
// the two boundary lines, changing k(p) by one.
HeightPath special_involution(const HeightPath& p, int w);

// Dershowitz's toward/away rotation DP_n(w) -> GD_n(w), and its inverse.
HeightPath dershowitz(const HeightPath& p, int w);
HeightPath dershowitz_inverse(const HeightPath& q, int w);

// Pointwise fold GD_n(2w+1) -> Mot^1_n(w), GD_n(2w) -> Mot^3_n(w).
HeightPath psi_fold(const HeightPath& p);

enum class H1Check { t_mot1, t_mot2, dp_mot1, dp_mot2 };
bool verify_h1(H1Check which, int n, int w);

}  // namespace cylschur

#endif
