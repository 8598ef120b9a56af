#include "cylschur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cylschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::single_row(int m) {
    return m == 0 ? Partition() : Partition(std::vector<int>{m});
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        cols[j - 1] = count;
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::with_cell_added(int row) const {
    std::vector<int> p = parts_;
    if (row == length() + 1)
        p.push_back(1);
    else if (row >= 1 && row <= length())
        p[row - 1] += 1;
    else
        throw std::invalid_argument("cannot add cell in row " + std::to_string(row));
    return Partition(std::move(p));  // constructor revalidates monotonicity
}

Partition Partition::with_cell_removed(int row) const {
    if (row < 1 || row > length() || parts_[row - 1] == 0)
        throw std::invalid_argument("cannot remove cell in row " + std::to_string(row));
    std::vector<int> p = parts_;
    p[row - 1] -= 1;
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool in_family(const Partition& lambda, int h, Width w) {
    if (h < 1) throw std::invalid_argument("family needs h >= 1");
    if (lambda.length() > h) return false;
    if (!w) return true;
    return lambda.part(1) - lambda.part(h) <= *w;
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len,
                    std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 0) gen_partitions(n, n == 0 ? 1 : n, max_len, cur, out);
    return out;  // descending loop above = largest-first lexicographic
}

std::vector<Partition> iter_family(int h, Width w, int max_size) {
    if (h < 1) throw std::invalid_argument("family needs h >= 1");
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (auto& lam : partitions_of(n, h))
            if (in_family(lam, h, w)) out.push_back(std::move(lam));
    return out;
}

bool is_vertical_strip(const Partition& mu, const Partition& lambda) {
    int rows = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= rows; ++i) {
        int d = lambda.part(i) - mu.part(i);
        if (d < 0 || d > 1) return false;
    }
    return true;
}

Partition cyl_transpose(const Partition& lambda, int h, int w) {
    if (h < 1 || w < 1) throw std::invalid_argument("cyl_transpose needs h,w >= 1");
    if (!in_family(lambda, h, w))
        throw std::invalid_argument("cyl_transpose: partition not in Par(h,w)");
    // Shift window: a cell (i,j)+(kh,-kw) lands in transposed rows 1..w only
    // when its column j-kw lies in [1,w]; |k| <= lambda_1/w + 1 covers that,
    // and the window below is strictly larger.
    int window = lambda.size() + h + w;
    std::set<std::pair<int, int>> transposed;  // (row, col) of lambda[h,w]'
    for (int k = -window; k <= window; ++k) {
        for (int i = 1; i <= lambda.length(); ++i) {
            for (int j = 1; j <= lambda.part(i); ++j) {
                int r = j - k * w;  // transposed row
                int c = i + k * h;  // transposed col
                if (r >= 1 && r <= w) transposed.insert({r, c});
            }
        }
    }
    std::vector<int> rows(w, 0);
    for (auto& [r, c] : transposed) {
        if (c < 1)
            throw std::logic_error("cyl_transpose: nonpositive column survived");
        rows[r - 1] = std::max(rows[r - 1], c);
    }
    // Rows must be exactly the intervals [1, rows[r]]: verify density.
    for (auto& [r, c] : transposed) (void)r, (void)c;
    for (int r = 1; r <= w; ++r)
        for (int c = 1; c <= rows[r - 1]; ++c)
            if (!transposed.count({r, c}))
                throw std::logic_error("cyl_transpose: ragged transposed row");
    return Partition(std::move(rows));
}

}  // namespace cylschur
