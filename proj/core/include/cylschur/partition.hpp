#ifndef CYLSCHUR_PARTITION_HPP
#define CYLSCHUR_PARTITION_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cylschur {

// Spread bound for Par(h,w); nullopt means unbounded width.
using Width = std::optional<int>;

// A partition: weakly decreasing positive parts, trailing zeros dropped.
// part(i) is defined for every i >= 1 and returns 0 beyond the length.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition single_row(int m);

    int part(int i) const {  // 1-based
        return (i >= 1 && i <= static_cast<int>(parts_.size()))
                   ? parts_[i - 1]
                   : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;  // mu subseteq *this

    Partition with_cell_added(int row) const;    // row is 1-based
    Partition with_cell_removed(int row) const;

    std::string to_string() const;  // e.g. "(4,3,2)", "()" for empty

    bool operator==(const Partition&) const = default;
    // Lexicographic on part vectors; used as map key order.
    auto operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

  private:
    std::vector<int> parts_;
};

// length(lambda) <= h and lambda_1 - lambda_h <= w (lambda_h = 0 beyond
// the length, so short partitions need lambda_1 <= w).
bool in_family(const Partition& lambda, int h, Width w);

// All of Par(h,w) with |lambda| <= max_size, graded and within each grade
// ordered lexicographically largest-first, so (2) precedes (1,1).
std::vector<Partition> iter_family(int h, Width w, int max_size);

// All partitions of exactly n with at most max_len parts (same grade order).
std::vector<Partition> partitions_of(int n, int max_len);

// lambda/mu is a vertical strip: mu subseteq lambda, at most one new cell
// per row.
bool is_vertical_strip(const Partition& mu, const Partition& lambda);

// The (h,w)-transpose Tr(lambda;h,w): transpose the periodic cylinder cell
// set {(i,j)+(k h, -k w)} and read rows 1..w.  Throws if lambda is not in
// Par(h,w).  Involution: Tr(Tr(lambda;h,w);w,h) = lambda.
Partition cyl_transpose(const Partition& lambda, int h, int w);

}  // namespace cylschur

template <>
struct std::hash<cylschur::Partition> {
    size_t operator()(const cylschur::Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p.parts()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

#endif
