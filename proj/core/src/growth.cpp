#include "cylschur/growth.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cylschur {

namespace {

Partition join(const Partition& a, const Partition& b) {
    std::vector<int> p(std::max(a.length(), b.length()));
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        p[i - 1] = std::max(a.part(i), b.part(i));
    return Partition(std::move(p));
}

Partition meet(const Partition& a, const Partition& b) {
    std::vector<int> p(std::min(a.length(), b.length()));
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        p[i - 1] = std::min(a.part(i), b.part(i));
    return Partition(std::move(p));
}

// Row of the unique box of t/l; 0 if shapes are equal, -1 if not a one-box
// difference.
int added_box_row(const Partition& l, const Partition& t) {
    int row = 0, extra = 0;
    for (int i = 1; i <= std::max(l.length(), t.length()); ++i) {
        int d = t.part(i) - l.part(i);
        if (d < 0 || d > 1) return -1;
        if (d == 1) {
            ++extra;
            row = i;
        }
    }
    if (extra > 1) return -1;
    return extra == 0 ? 0 : row;
}

}  // namespace

Partition growth_forward_rule(const Partition& d, const Partition& l,
                              const Partition& b, bool x) {
    if (x) {
        if (!(l == d && b == d))
            throw std::invalid_argument("growth: X cell with nontrivial sides");
        return d.with_cell_added(1);
    }
    if (l == d && b == d) return d;
    if (l == d) return b;
    if (b == d) return l;
    if (l != b) return join(l, b);
    int k = added_box_row(d, l);
    if (k <= 0) throw std::invalid_argument("growth: inconsistent corner labels");
    return l.with_cell_added(k + 1);
}

std::pair<Partition, bool> growth_backward_rule(const Partition& t,
                                                const Partition& l,
                                                const Partition& b) {
    if (l == t && b == t) return {t, false};
    if (l == t) return {b, false};
    if (b == t) return {l, false};
    if (l != b) return {meet(l, b), false};
    int k = added_box_row(l, t);
    if (k <= 0)
        throw std::invalid_argument("growth: invalid boundary chain at cell");
    if (k == 1) return {l, true};
    return {l.with_cell_removed(k - 1), false};
}

namespace {

void check_xs(int n, const std::vector<std::pair<int, int>>& xs) {
    std::vector<bool> row(n + 1, false), col(n + 1, false);
    for (auto& [x, y] : xs) {
        if (x < 1 || x > n || y < 1 || y > n)
            throw std::invalid_argument("growth: X out of range");
        if (col[x] || row[y])
            throw std::invalid_argument("growth: two X cells share a line");
        col[x] = row[y] = true;
    }
}

}  // namespace

GrowthDiagram growth_forward(int n, const std::vector<std::pair<int, int>>& xs) {
    check_xs(n, xs);
    GrowthDiagram g;
    g.n = n;
    g.xs = xs;
    g.labels.assign(n + 1, std::vector<Partition>(n + 1));
    std::vector<std::vector<bool>> has_x(n + 1, std::vector<bool>(n + 1, false));
    for (auto& [x, y] : xs) has_x[x][y] = true;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            g.labels[x][y] =
                growth_forward_rule(g.labels[x - 1][y - 1], g.labels[x - 1][y],
                                    g.labels[x][y - 1], has_x[x][y]);
    return g;
}

GrowthDiagram growth_backward(const std::vector<Partition>& north,
                              const std::vector<Partition>& east) {
    if (north.size() != east.size() || north.empty())
        throw std::invalid_argument("growth_backward: boundary size mismatch");
    int n = static_cast<int>(north.size()) - 1;
    if (north[n] != east[n])
        throw std::invalid_argument("growth_backward: corners disagree");
    auto check_chain = [](const std::vector<Partition>& c) {
        for (size_t i = 1; i < c.size(); ++i)
            if (added_box_row(c[i - 1], c[i]) < 0)
                throw std::invalid_argument("growth_backward: invalid boundary chain");
    };
    check_chain(north);
    check_chain(east);
    GrowthDiagram g;
    g.n = n;
    g.labels.assign(n + 1, std::vector<Partition>(n + 1));
    for (int x = 0; x <= n; ++x) g.labels[x][n] = north[x];
    for (int y = 0; y <= n; ++y) g.labels[n][y] = east[y];
    for (int x = n; x >= 1; --x)
        for (int y = n; y >= 1; --y) {
            auto [d, has_x] = growth_backward_rule(
                g.labels[x][y], g.labels[x - 1][y], g.labels[x][y - 1]);
            g.labels[x - 1][y - 1] = d;
            if (has_x) g.xs.push_back({x, y});
        }
    for (int x = 0; x <= n; ++x)
        if (!g.labels[x][0].empty())
            throw std::invalid_argument("growth_backward: south boundary not empty");
    for (int y = 0; y <= n; ++y)
        if (!g.labels[0][y].empty())
            throw std::invalid_argument("growth_backward: west boundary not empty");
    std::sort(g.xs.begin(), g.xs.end());
    return g;
}

// ---------------------------------------------------------------------
// Lean fixed-size labels for the exhaustive involution check.

namespace {

constexpr int kMaxN = 14;

struct SP {
    std::array<uint8_t, kMaxN> p{};
    bool operator==(const SP&) const = default;
};

inline SP sp_join(const SP& a, const SP& b) {
    SP r;
    for (int i = 0; i < kMaxN; ++i) r.p[i] = std::max(a.p[i], b.p[i]);
    return r;
}

inline SP sp_meet(const SP& a, const SP& b) {
    SP r;
    for (int i = 0; i < kMaxN; ++i) r.p[i] = std::min(a.p[i], b.p[i]);
    return r;
}

inline int sp_added_row(const SP& l, const SP& t) {
    int row = 0, extra = 0;
    for (int i = 0; i < kMaxN; ++i) {
        int d = t.p[i] - l.p[i];
        if (d < 0 || d > 1) return -1;
        if (d == 1) {
            ++extra;
            row = i + 1;
        }
    }
    return extra > 1 ? -1 : (extra == 0 ? 0 : row);
}

inline SP sp_add(const SP& a, int row) {
    SP r = a;
    ++r.p[row - 1];
    return r;
}

inline SP sp_remove(const SP& a, int row) {
    SP r = a;
    --r.p[row - 1];
    return r;
}

bool sp_forward(const SP& d, const SP& l, const SP& b, bool x, SP& t) {
    if (x) {
        if (!(l == d && b == d)) return false;
        t = sp_add(d, 1);
        return true;
    }
    if (l == d && b == d) {
        t = d;
        return true;
    }
    if (l == d) {
        t = b;
        return true;
    }
    if (b == d) {
        t = l;
        return true;
    }
    if (!(l == b)) {
        t = sp_join(l, b);
        return true;
    }
    int k = sp_added_row(d, l);
    if (k <= 0) return false;
    t = sp_add(l, k + 1);
    return true;
}

bool sp_backward(const SP& t, const SP& l, const SP& b, SP& d, bool& x) {
    x = false;
    if (l == t && b == t) {
        d = t;
        return true;
    }
    if (l == t) {
        d = b;
        return true;
    }
    if (b == t) {
        d = l;
        return true;
    }
    if (!(l == b)) {
        d = sp_meet(l, b);
        return true;
    }
    int k = sp_added_row(l, t);
    if (k <= 0) return false;
    if (k == 1) {
        d = l;
        x = true;
        return true;
    }
    d = sp_remove(l, k - 1);
    return true;
}

}  // namespace

bool growth_roundtrip_ok(int n, const std::vector<int>& row_to_col) {
    if (n > kMaxN - 1) throw std::invalid_argument("growth_roundtrip_ok: n too big");
    // forward
    std::array<std::array<SP, kMaxN + 1>, kMaxN + 1> v{};
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            bool x_here = row_to_col[y - 1] == x;
            if (!sp_forward(v[x - 1][y - 1], v[x - 1][y], v[x][y - 1], x_here,
                            v[x][y]))
                return false;
        }
    // backward from the north/east boundaries
    std::array<std::array<SP, kMaxN + 1>, kMaxN + 1> u{};
    for (int x = 0; x <= n; ++x) u[x][n] = v[x][n];
    for (int y = 0; y <= n; ++y) u[n][y] = v[n][y];
    std::vector<int> recovered(n, 0);
    for (int x = n; x >= 1; --x)
        for (int y = n; y >= 1; --y) {
            bool has_x;
            if (!sp_backward(u[x][y], u[x - 1][y], u[x][y - 1],
                             u[x - 1][y - 1], has_x))
                return false;
            if (has_x) {
                if (recovered[y - 1] != 0) return false;
                recovered[y - 1] = x;
            }
        }
    if (recovered != row_to_col) return false;
    for (int x = 0; x <= n; ++x)
        if (!(u[x][0] == SP{})) return false;
    for (int y = 0; y <= n; ++y)
        if (!(u[0][y] == SP{})) return false;
    return true;
}

// ---------------------------------------------------------------------
// Triangular diagrams: rows numbered from the top, cells (r,c) with
// c <= r, empty left/bottom boundary.

TriDiagram tri_forward(const Matching& m, FixedPointMode mode) {
    int n = m.n();
    TriDiagram g;
    g.n = n;
    std::vector<std::vector<bool>> has_x(n + 1, std::vector<bool>(n + 1, false));
    for (auto& [i, j] : m.arcs()) {
        has_x[j][i] = true;  // arc (i,j): cross at row j, column i
        g.xs.push_back({j, i});
    }
    if (mode == FixedPointMode::kept)
        for (int v : m.fixed_points()) {
            has_x[v][v] = true;
            g.xs.push_back({v, v});
        }
    // labels[r][c] for 0 <= r <= n, 0 <= c <= min(r+1, n)
    g.labels.assign(n + 1, {});
    for (int r = 0; r <= n; ++r)
        g.labels[r].assign(std::min(r + 1, n) + 1, Partition());
    for (int r = n; r >= 1; --r)
        for (int c = 1; c <= r; ++c)
            g.labels[r - 1][c] =
                growth_forward_rule(g.labels[r][c - 1], g.labels[r - 1][c - 1],
                                    g.labels[r][c], has_x[r][c]);
    // Staircase read: even labels sit on the diagonal vertices, odd labels
    // on the inner corners below them (so each odd shape is contained in
    // its neighbours, the form the reduced chains are stated in).
    g.hypotenuse.resize(2 * n + 1);
    for (int t = 0; t <= n; ++t) {
        g.hypotenuse[2 * t] = g.labels[t][t];
        if (t < n) g.hypotenuse[2 * t + 1] = g.labels[t + 1][t];
    }
    std::sort(g.xs.begin(), g.xs.end());
    return g;
}

TriDiagram tri_backward(int n, const std::vector<Partition>& hypotenuse) {
    if (static_cast<int>(hypotenuse.size()) != 2 * n + 1)
        throw std::invalid_argument("tri_backward: need 2n+1 hypotenuse labels");
    for (size_t i = 1; i < hypotenuse.size(); ++i) {
        int ra = added_box_row(hypotenuse[i - 1], hypotenuse[i]);
        int rb = added_box_row(hypotenuse[i], hypotenuse[i - 1]);
        if (ra < 0 && rb < 0)
            throw std::invalid_argument("tri_backward: invalid boundary chain");
    }
    TriDiagram g;
    g.n = n;
    g.labels.assign(n + 1, {});
    for (int r = 0; r <= n; ++r)
        g.labels[r].assign(std::min(r + 1, n) + 1, Partition());
    for (int t = 0; t <= n; ++t) {
        g.labels[t][t] = hypotenuse[2 * t];
        if (t < n) g.labels[t + 1][t] = hypotenuse[2 * t + 1];
    }
    // Off-diagonal cells reconstruct toward the bottom-left; the diagonal
    // cells' own X flags (fixed points) are the caller's to supply and do
    // not affect the reconstruction.
    for (int r = 1; r <= n; ++r)
        for (int c = r - 1; c >= 1; --c) {
            auto [d, has_x] = growth_backward_rule(
                g.labels[r - 1][c], g.labels[r - 1][c - 1], g.labels[r][c]);
            g.labels[r][c - 1] = d;
            if (has_x) g.xs.push_back({r, c});
        }
    for (int r = 0; r <= n; ++r)
        if (!g.labels[r][0].empty())
            throw std::invalid_argument("tri_backward: left boundary not empty");
    for (int c = 0; c < n; ++c)
        if (!g.labels[n][c].empty())
            throw std::invalid_argument("tri_backward: bottom boundary not empty");
    g.hypotenuse = hypotenuse;
    std::sort(g.xs.begin(), g.xs.end());
    return g;
}

std::vector<Partition> syt_chain(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (auto& r : rows) n += static_cast<int>(r.size());
    std::vector<Partition> chain(n + 1);
    for (int v = 1; v <= n; ++v) {
        std::vector<int> shape;
        for (auto& r : rows) {
            int len = 0;
            for (int e : r)
                if (e <= v) ++len;
            if (len) shape.push_back(len);
        }
        chain[v] = Partition(std::move(shape));
    }
    return chain;
}

Matching syt_to_matching(const std::vector<Partition>& chain) {
    int n = static_cast<int>(chain.size()) - 1;
    if (n < 0 || !chain[0].empty())
        throw std::invalid_argument("syt_to_matching: chain must start empty");
    // The matrix layout (rows from the top, empty south/east) maps onto
    // the south/west-empty square by reversing both axes; the chain lands
    // on the north and east boundaries.
    GrowthDiagram g = growth_backward(chain, chain);
    std::vector<std::pair<int, int>> arcs;
    int fixed = 0;
    for (auto& [x, y] : g.xs) {
        int r = n + 1 - y, c = n + 1 - x;
        if (r < c)
            arcs.push_back({r, c});
        else if (r == c)
            ++fixed;
    }
    (void)fixed;
    return Matching(n, std::move(arcs));
}

std::vector<Partition> matching_to_syt(const Matching& m) {
    int n = m.n();
    std::vector<std::pair<int, int>> xs;
    for (auto& [i, j] : m.arcs()) {
        xs.push_back({n + 1 - i, n + 1 - j});  // cell (x,y) for r~c = (j,i)
        xs.push_back({n + 1 - j, n + 1 - i});
    }
    for (int v : m.fixed_points()) xs.push_back({n + 1 - v, n + 1 - v});
    GrowthDiagram g = growth_forward(n, xs);
    std::vector<Partition> chain(n + 1);
    for (int y = 0; y <= n; ++y) chain[y] = g.labels[n][y];
    return chain;
}

std::vector<Partition> matching_vt(const Matching& m, FixedPointMode mode) {
    TriDiagram g = tri_forward(m, mode);
    std::vector<Partition> chain(m.n() + 1);
    for (int t = 0; t <= m.n(); ++t) chain[t] = g.hypotenuse[2 * t].conjugate();
    return chain;
}

Matching matching_vt_inverse(const std::vector<Partition>& chain,
                             FixedPointMode mode) {
    int n = static_cast<int>(chain.size()) - 1;
    std::vector<Partition> hyp(2 * n + 1);
    for (int t = 0; t <= n; ++t) hyp[2 * t] = chain[t].conjugate();
    // Odd hypotenuse labels are the meets of their neighbours: the three
    // local patterns around a matching's diagonal are grow, shrink, stay.
    for (int t = 0; t < n; ++t) hyp[2 * t + 1] = meet(hyp[2 * t], hyp[2 * t + 2]);
    TriDiagram g = tri_backward(n, hyp);
    (void)mode;  // both modes reconstruct identically; only the off-diagonal
                 // crosses carry information, fixed points are the rest
    std::vector<std::pair<int, int>> arcs;
    for (auto& [r, c] : g.xs) arcs.push_back({c, r});
    return Matching(n, std::move(arcs));
}

Matching ncnn_symmetry(const Matching& m) {
    TriDiagram g = tri_forward(m, FixedPointMode::kept);
    std::vector<Partition> conj(g.hypotenuse.size());
    for (size_t i = 0; i < conj.size(); ++i) conj[i] = g.hypotenuse[i].conjugate();
    TriDiagram back = tri_backward(m.n(), conj);
    std::vector<std::pair<int, int>> arcs;
    for (auto& [r, c] : back.xs)
        if (c < r) arcs.push_back({c, r});
    return Matching(m.n(), std::move(arcs));
}

NEChainStats greene_chains(const std::vector<std::pair<int, int>>& xs) {
    std::vector<std::pair<int, int>> s = xs;
    std::sort(s.begin(), s.end());
    NEChainStats st;
    std::vector<int> up(s.size()), down(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        up[i] = down[i] = 1;
        for (size_t j = 0; j < i; ++j) {
            if (s[j].first < s[i].first && s[j].second < s[i].second)
                up[i] = std::max(up[i], up[j] + 1);
            if (s[j].first < s[i].first && s[j].second > s[i].second)
                down[i] = std::max(down[i], down[j] + 1);
        }
        st.ne = std::max(st.ne, up[i]);
        st.se = std::max(st.se, down[i]);
    }
    return st;
}

}  // namespace cylschur
