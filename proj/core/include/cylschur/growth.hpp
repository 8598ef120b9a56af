#ifndef CYLSCHUR_GROWTH_HPP
#define CYLSCHUR_GROWTH_HPP

#include <utility>
#include <vector>

#include "cylschur/matching.hpp"
#include "cylschur/partition.hpp"

namespace cylschur {

// Square growth diagram on an n x n grid of cells.  Vertices v(x,y),
// 0 <= x,y <= n, with x running west to east and y south to north; the
// south and west boundaries are empty and chains grow toward north/east.
// X-cells are 1-based (x,y) positions with at most one per row and column.
struct GrowthDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> xs;
    std::vector<std::vector<Partition>> labels;  // labels[x][y]

    const Partition& at(int x, int y) const { return labels[x][y]; }
};

// Fomin local rules, exposed for reuse:
// forward computes the far corner T from (D; L, B) and the X flag;
// backward recovers (D, X) from (T; L, B).
Partition growth_forward_rule(const Partition& d, const Partition& l,
                              const Partition& b, bool x);
std::pair<Partition, bool> growth_backward_rule(const Partition& t,
                                                const Partition& l,
                                                const Partition& b);

// Forward pass from the X-configuration; throws on malformed input.
GrowthDiagram growth_forward(int n, const std::vector<std::pair<int, int>>& xs);

// Backward pass from the north boundary chain (v(0,n)..v(n,n) west to
// east) and east boundary chain (v(n,0)..v(n,n) south to north); the two
// must agree at the corner.  Recovers the X-configuration and all labels,
// and checks that the south/west boundaries come out empty.
GrowthDiagram growth_backward(const std::vector<Partition>& north,
                              const std::vector<Partition>& east);

// Fast exhaustive involution check (backward(forward(X)) == X) without
// public-type overhead; xs[r] = column of the X in row r+1, or 0.
bool growth_roundtrip_ok(int n, const std::vector<int>& row_to_col);

// Triangular growth diagram in matrix orientation:
// rows r = 1..n from the top, row r holding cells (r, 1..r); empty
// boundary on the left and bottom, labels propagating to the staircase
// hypotenuse, which is read as lambda^0..lambda^{2n} with
// lambda^{2t} = v(t,t) and lambda^{2t+1} = v(t,t+1).
struct TriDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> xs;        // (row, col), col <= row
    std::vector<Partition> hypotenuse;          // 2n+1 labels
    std::vector<std::vector<Partition>> labels; // labels[r][c], c <= r+1
};

enum class FixedPointMode { dropped, kept };

// Forward pass of a matching placed as crosses (arc (i,j) at row j, col i;
// fixed points on the diagonal only when kept).
TriDiagram tri_forward(const Matching& m, FixedPointMode mode);

// Backward pass from a full hypotenuse chain; returns the crosses.
TriDiagram tri_backward(int n, const std::vector<Partition>& hypotenuse);

// Standard Young tableau as a growth chain (subshapes of entries 1..i).
std::vector<Partition> syt_chain(const std::vector<std::vector<int>>& rows);

// Robinson-Schensted through the square diagram: an SYT of size n maps to
// the involution obtained by putting its chain on both output boundaries.
Matching syt_to_matching(const std::vector<Partition>& chain);
std::vector<Partition> matching_to_syt(const Matching& m);

// Triangular pass, every second hypotenuse label, conjugated: the
// bijection NNest_n(h+1) -> VT_n(h) (fixed points dropped) and
// NNest_n(h+1/2) -> VT_n(h^*) (fixed points kept).
std::vector<Partition> matching_vt(const Matching& m, FixedPointMode mode);
Matching matching_vt_inverse(const std::vector<Partition>& chain,
                             FixedPointMode mode);

// Crossing/nesting-exchanging involution: forward with fixed points kept,
// conjugate the hypotenuse, backward.  Fixed points are preserved.
Matching ncnn_symmetry(const Matching& m);

// Longest chain statistics of an X-configuration: NE chains have both
// coordinates increasing, SE chains have x increasing and y decreasing.
struct NEChainStats {
    int ne = 0;
    int se = 0;
};
NEChainStats greene_chains(const std::vector<std::pair<int, int>>& xs);

}  // namespace cylschur

#endif
