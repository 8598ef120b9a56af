#include "cylschur/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace cylschur {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lens;
    for (auto& r : rows_) {
        if (r.empty()) throw std::invalid_argument("tableau: empty row");
        for (int v : r)
            if (v <= 0) throw std::invalid_argument("tableau: entries must be positive");
        lens.push_back(static_cast<int>(r.size()));
    }
    shape_ = Partition(std::move(lens));  // validates weak decrease
    if (shape_.length() != static_cast<int>(rows_.size()))
        throw std::invalid_argument("tableau: rows of length zero");
}

bool Tableau::is_valid(TableauKind kind) const {
    for (int i = 1; i <= shape_.length(); ++i)
        for (int j = 2; j <= shape_.part(i); ++j) {
            if (kind == TableauKind::ssyt ? entry(i, j) < entry(i, j - 1)
                                          : entry(i, j) <= entry(i, j - 1))
                return false;
        }
    for (int i = 2; i <= shape_.length(); ++i)
        for (int j = 1; j <= shape_.part(i); ++j) {
            if (kind == TableauKind::ssyt ? entry(i, j) <= entry(i - 1, j)
                                          : entry(i, j) < entry(i - 1, j))
                return false;
        }
    return true;
}

bool Tableau::is_standard() const {
    int n = size();
    std::vector<bool> seen(n + 1, false);
    for (auto& r : rows_)
        for (int v : r) {
            if (v > n || seen[v]) return false;
            seen[v] = true;
        }
    return is_valid(TableauKind::ssyt) && is_valid(TableauKind::rst);
}

std::vector<int> Tableau::content() const {
    int max_entry = 0;
    for (auto& r : rows_)
        for (int v : r) max_entry = std::max(max_entry, v);
    std::vector<int> alpha(max_entry, 0);
    for (auto& r : rows_)
        for (int v : r) ++alpha[v - 1];
    return alpha;
}

XPoly Tableau::weight(int num_vars) const {
    XPoly::Key key(num_vars, 0);
    for (auto& r : rows_)
        for (int v : r) {
            if (v > num_vars)
                throw std::invalid_argument("tableau weight: entry exceeds num_vars");
            ++key[v - 1];
        }
    return XPoly::monomial(num_vars, key, 1);
}

bool is_cylindric(const Tableau& t, int h, int w, TableauKind kind) {
    if (h < 1 || w < 1) throw std::invalid_argument("is_cylindric: h,w >= 1");
    if (!t.is_valid(kind))
        throw std::invalid_argument("is_cylindric: input is not a valid tableau");
    const Partition& lam = t.shape();
    if (lam.length() > h) return false;
    // The union with the (h,-w)-shifted copy is a valid skew shape exactly
    // for shapes in Par(h,w); rows of the two copies never overlap, and a
    // column is shared exactly for c <= lambda_1 - w, where the original
    // column has full height h.
    if (lam.part(1) - lam.part(h) > w) return false;
    for (int c = 1; c <= lam.part(1) - w; ++c) {
        int lower = t.entry(h, c);          // bottom of original column c
        int upper = t.entry(1, c + w);      // top of shifted column c
        if (kind == TableauKind::ssyt ? lower >= upper : lower > upper)
            return false;
    }
    return true;
}

namespace {

struct Cell {
    int row, col;
};

void fill_cells(const Partition& lam, int h, int w, TableauKind kind,
                int max_entry, std::vector<std::vector<int>>& grid,
                const std::vector<Cell>& cells, size_t pos,
                const std::function<void(const Tableau&)>& emit) {
    if (pos == cells.size()) {
        emit(Tableau(grid));
        return;
    }
    auto [i, j] = cells[pos];
    int lo = 1;
    if (j > 1) {
        int left = grid[i - 1][j - 2];
        lo = std::max(lo, kind == TableauKind::ssyt ? left : left + 1);
    }
    if (i > 1) {
        int up = grid[i - 2][j - 1];
        lo = std::max(lo, kind == TableauKind::ssyt ? up + 1 : up);
    }
    for (int v = lo; v <= max_entry; ++v) {
        // Wrap-around column condition, applied once both cells of a pair
        // are placed: for h >= 2 row 1 precedes row h, for h = 1 the later
        // cell of the same row closes the pair.
        if (h >= 2 && i == h && j <= lam.part(1) - w) {
            int upper = grid[0][j + w - 1];
            if (kind == TableauKind::ssyt ? v >= upper : v > upper) continue;
        }
        if (h == 1 && j > w) {
            int lower = grid[0][j - w - 1];
            if (kind == TableauKind::ssyt ? lower >= v : lower > v) continue;
        }
        grid[i - 1][j - 1] = v;
        fill_cells(lam, h, w, kind, max_entry, grid, cells, pos + 1, emit);
    }
    grid[i - 1][j - 1] = 0;
}

void for_each_cylindric(const Partition& lam, int h, int w, TableauKind kind,
                        int max_entry,
                        const std::function<void(const Tableau&)>& emit) {
    if (!in_family(lam, h, w)) return;  // CSSYT/CRST empty outside Par(h,w)
    if (lam.empty()) {
        emit(Tableau());
        return;
    }
    std::vector<Cell> cells;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) cells.push_back({i, j});
    std::vector<std::vector<int>> grid(lam.length());
    for (int i = 1; i <= lam.length(); ++i) grid[i - 1].assign(lam.part(i), 0);
    fill_cells(lam, h, w, kind, max_entry, grid, cells, 0, emit);
}

}  // namespace

std::vector<Tableau> enumerate_cylindric(const Partition& lambda, int h, int w,
                                         TableauKind kind, int max_entry) {
    std::vector<Tableau> out;
    for_each_cylindric(lambda, h, w, kind, max_entry,
                       [&](const Tableau& t) { out.push_back(t); });
    return out;
}

XPoly cylindric_schur_tableaux(const Partition& lambda, int h, int w, int n,
                               DegCap cap) {
    if (!in_family(lambda, h, w))
        throw std::invalid_argument("cylindric_schur: lambda not in Par(h,w)");
    XPoly sum(n);
    if (cap && lambda.size() > *cap) return sum;
    for_each_cylindric(lambda, h, w, TableauKind::rst, n,
                       [&](const Tableau& t) { sum += t.weight(n); });
    return sum;
}

namespace {

// Ranges of the winding numbers k_i: row i contributes a nonzero entry only
// if lambda_i - i + j + N k_i lands in [0, n] for some column j in [1, m].
void jt_k_ranges(const Partition& lam, int m, int N, int n,
                 std::vector<int>& lo, std::vector<int>& hi) {
    lo.resize(m);
    hi.resize(m);
    for (int i = 1; i <= m; ++i) {
        int base = lam.part(i) - i;
        // N k >= -base - m  and  N k <= n - base - 1
        int a = -base - m, b = n - base - 1;
        lo[i - 1] = (a >= 0) ? (a + N - 1) / N : -((-a) / N);
        hi[i - 1] = (b >= 0) ? b / N : -((-b + N - 1) / N);
    }
}

}  // namespace

EPoly cylindric_schur_jt(const Partition& lambda, int h, int w, int n,
                         DegCap cap) {
    if (!in_family(lambda, h, w))
        throw std::invalid_argument("cylindric_schur: lambda not in Par(h,w)");
    int N = h + w;
    EPoly total(n);
    if (cap && lambda.size() > *cap) return total;
    std::vector<int> lo, hi;
    jt_k_ranges(lambda, h, N, n, lo, hi);
    std::vector<int> k(h, 0);
    // DFS over k_1..k_h with sum 0, pruned by partial-sum feasibility.
    std::vector<int> suf_lo(h + 1, 0), suf_hi(h + 1, 0);
    for (int i = h - 1; i >= 0; --i) {
        suf_lo[i] = suf_lo[i + 1] + lo[i];
        suf_hi[i] = suf_hi[i + 1] + hi[i];
    }
    std::function<void(int, int)> rec = [&](int i, int sum) {
        if (i == h) {
            if (sum != 0) return;
            EMatrix mat(h, h, n);
            for (int r = 1; r <= h; ++r)
                for (int c = 1; c <= h; ++c)
                    mat.at(r - 1, c - 1) = EPoly::gen(
                        n, lambda.part(r) - r + c + N * k[r - 1]);
            total += determinant(mat, cap);
            return;
        }
        for (int v = lo[i]; v <= hi[i]; ++v) {
            int s = sum + v;
            if (s + suf_lo[i + 1] > 0 || s + suf_hi[i + 1] < 0) continue;
            k[i] = v;
            rec(i + 1, s);
        }
    };
    rec(0, 0);
    // Every determinant term is homogeneous of degree |lambda|: the e-index
    // sum telescopes to |lambda| + N sum k_i = |lambda|.
    for (auto& [key, c] : total.terms())
        if (EPoly::key_degree(key) != lambda.size())
            throw std::logic_error("cylindric_schur_jt: inhomogeneous term");
    return total;
}

Tableau transpose_tableau(const Tableau& t, int h, int w, TableauKind kind) {
    if (!is_cylindric(t, h, w, kind))
        throw std::invalid_argument("transpose_tableau: input not cylindric");
    Partition tr_shape = cyl_transpose(t.shape(), h, w);
    if (tr_shape.empty()) return Tableau();
    std::vector<std::vector<int>> rows(tr_shape.length());
    for (int a = 1; a <= tr_shape.length(); ++a) {
        rows[a - 1].resize(tr_shape.part(a));
        for (int b = 1; b <= tr_shape.part(a); ++b) {
            // Transposed cell (a,b) is the cylinder cell (b,a); its orbit
            // representative inside lambda has row in [1,h].
            int k = (b - 1) / h;
            int i = b - k * h;
            int j = a + k * w;
            if (i > t.shape().length() || j > t.shape().part(i))
                throw std::logic_error("transpose_tableau: cell outside shape");
            rows[a - 1][b - 1] = t.entry(i, j);
        }
    }
    return Tableau(std::move(rows));
}

namespace {

bool in_path_region(const std::vector<int>& x, int w) {
    for (size_t i = 1; i < x.size(); ++i)
        if (x[i - 1] < x[i]) return false;
    return x.back() >= x.front() - w;
}

}  // namespace

Int quantum_kostka(const Partition& lambda, int h, int w,
                   const std::vector<int>& alpha, KostkaMethod method) {
    if (!in_family(lambda, h, w))
        throw std::invalid_argument("quantum_kostka: lambda not in Par(h,w)");
    if (method == KostkaMethod::tableaux) {
        Int count = 0;
        int max_entry = static_cast<int>(alpha.size());
        for_each_cylindric(lambda, h, w, TableauKind::rst, max_entry,
                           [&](const Tableau& t) {
                               std::vector<int> c = t.content();
                               c.resize(alpha.size(), 0);
                               if (c == alpha) ++count;
                           });
        return count;
    }
    // Lattice-path count: step i has alpha_i coordinates equal to 1, and
    // every visited point stays in { x_1 >= ... >= x_h >= x_1 - w }.
    std::map<std::vector<int>, Int> cur;
    cur[std::vector<int>(h, 0)] = 1;
    for (int step : alpha) {
        if (step < 0 || step > h) return 0;
        std::map<std::vector<int>, Int> next;
        for (auto& [x, cnt] : cur) {
            std::vector<int> rows(h);
            for (int i = 0; i < h; ++i) rows[i] = i;
            std::vector<int> pick;
            std::function<void(int, int)> choose = [&](int from, int need) {
                if (need == 0) {
                    std::vector<int> y = x;
                    for (int r : pick) ++y[r];
                    if (in_path_region(y, w)) next[y] += cnt;
                    return;
                }
                for (int r = from; r <= h - need; ++r) {
                    pick.push_back(r);
                    choose(r + 1, need - 1);
                    pick.pop_back();
                }
            };
            choose(0, step);
        }
        cur = std::move(next);
    }
    std::vector<int> target(h);
    for (int i = 0; i < h; ++i) target[i] = lambda.part(i + 1);
    auto it = cur.find(target);
    return it == cur.end() ? Int(0) : it->second;
}

namespace {

void enumerate_standard_fillings(const Partition& lam,
                                 const std::function<void(const Tableau&)>& emit) {
    int n = lam.size();
    if (n == 0) {
        emit(Tableau());
        return;
    }
    std::vector<std::vector<int>> grid(lam.length());
    for (int i = 1; i <= lam.length(); ++i) grid[i - 1].assign(lam.part(i), 0);
    std::vector<bool> used(n + 1, false);
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) cells.push_back({i, j});
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == cells.size()) {
            emit(Tableau(grid));
            return;
        }
        auto [i, j] = cells[pos];
        int lo = 1;
        if (j > 1) lo = std::max(lo, grid[i - 1][j - 2] + 1);
        if (i > 1) lo = std::max(lo, grid[i - 2][j - 1] + 1);
        for (int v = lo; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            grid[i - 1][j - 1] = v;
            rec(pos + 1);
            used[v] = false;
        }
        grid[i - 1][j - 1] = 0;
    };
    rec(0);
}

Rat rat_det_rec(const std::vector<std::vector<Rat>>& m, int row, unsigned mask,
                std::unordered_map<unsigned, Rat>& memo) {
    if (mask == 0) return Rat(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Rat acc(0);
    int sign = 1;
    for (size_t j = 0; j < m.size(); ++j) {
        if (!(mask & (1u << j))) continue;
        if (m[row][j] != 0)
            acc += Rat(sign) * m[row][j] *
                   rat_det_rec(m, row + 1, mask & ~(1u << j), memo);
        sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
}

Int csyt_count_factorial(int n, int h, int w) {
    int N = h + w;
    Rat total(0);
    for (auto& lam : partitions_of(n, h)) {
        if (!in_family(lam, h, w)) continue;
        std::vector<int> lo, hi;
        jt_k_ranges(lam, h, N, n, lo, hi);
        std::vector<int> k(h, 0);
        std::vector<int> suf_lo(h + 1, 0), suf_hi(h + 1, 0);
        for (int i = h - 1; i >= 0; --i) {
            suf_lo[i] = suf_lo[i + 1] + lo[i];
            suf_hi[i] = suf_hi[i + 1] + hi[i];
        }
        std::function<void(int, int)> rec = [&](int i, int sum) {
            if (i == h) {
                if (sum != 0) return;
                std::vector<std::vector<Rat>> mat(h, std::vector<Rat>(h));
                for (int r = 1; r <= h; ++r)
                    for (int c = 1; c <= h; ++c)
                        mat[r - 1][c - 1] = inv_factorial(
                            lam.part(r) - r + c + N * k[r - 1]);
                std::unordered_map<unsigned, Rat> memo;
                total += rat_det_rec(mat, 0, (1u << h) - 1, memo);
                return;
            }
            for (int v = lo[i]; v <= hi[i]; ++v) {
                int s = sum + v;
                if (s + suf_lo[i + 1] > 0 || s + suf_hi[i + 1] < 0) continue;
                k[i] = v;
                rec(i + 1, s);
            }
        };
        rec(0, 0);
    }
    Rat result = Rat(factorial(n)) * total;
    result.canonicalize();
    if (result.get_den() != 1)
        throw std::logic_error("csyt_count_factorial: non-integral result");
    return result.get_num();
}

}  // namespace

Int csyt_count(int n, int h, int w, CsytMethod method) {
    if (n < 0 || h < 1 || w < 1)
        throw std::invalid_argument("csyt_count: bad parameters");
    switch (method) {
        case CsytMethod::chain_dp: {
            // Chains of single-cell additions staying inside Par(h,w); this
            // is the lattice-path picture of the quantum Kostka numbers with
            // standard content.
            std::map<Partition, Int> cur;
            cur[Partition()] = 1;
            for (int step = 0; step < n; ++step) {
                std::map<Partition, Int> next;
                for (auto& [lam, cnt] : cur)
                    for (int row = 1; row <= std::min(h, lam.length() + 1); ++row) {
                        if (row > 1 && lam.part(row) == lam.part(row - 1))
                            continue;  // would break weak decrease
                        Partition mu = lam.with_cell_added(row);
                        if (in_family(mu, h, w)) next[mu] += cnt;
                    }
                cur = std::move(next);
            }
            Int total = 0;
            for (auto& [lam, cnt] : cur) total += cnt;
            return total;
        }
        case CsytMethod::brute: {
            Int total = 0;
            for (auto& lam : partitions_of(n, h))
                enumerate_standard_fillings(lam, [&](const Tableau& t) {
                    if (is_cylindric(t, h, w, TableauKind::ssyt)) ++total;
                });
            return total;
        }
        case CsytMethod::factorial_formula: {
            if (h % 2 == 0 || w % 2 == 0)
                throw std::invalid_argument(
                    "csyt_count: factorial formula is stated for odd h and odd w");
            return csyt_count_factorial(n, h, w);
        }
    }
    throw std::invalid_argument("csyt_count: unknown method");
}

std::vector<std::vector<int>> tableau_path_family(const Tableau& t, int h,
                                                  int levels) {
    const Partition& lam = t.shape();
    if (lam.length() > h)
        throw std::invalid_argument("tableau_path_family: more rows than paths");
    std::vector<std::vector<int>> fam(h, std::vector<int>(levels + 1, 0));
    for (int i = 1; i <= h; ++i) {
        std::vector<bool> has(levels + 1, false);
        for (int j = 1; j <= lam.part(i); ++j) {
            int d = t.entry(i, j);
            if (d <= levels) has[d] = true;
        }
        fam[i - 1][0] = -i + 1;
        for (int d = 1; d <= levels; ++d)
            fam[i - 1][d] = fam[i - 1][d - 1] + (has[d] ? 1 : 0);
    }
    return fam;
}

bool paths_nonintersecting(const std::vector<std::vector<int>>& fam) {
    for (size_t i = 1; i < fam.size(); ++i)
        for (size_t d = 0; d < fam[i].size(); ++d)
            if (fam[i - 1][d] <= fam[i][d]) return false;
    return true;
}

}  // namespace cylschur
