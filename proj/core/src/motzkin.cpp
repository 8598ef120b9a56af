#include "cylschur/motzkin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cylschur {

const char* path_family_name(PathFamily f) {
    switch (f) {
        case PathFamily::triangle: return "triangle";
        case PathFamily::motzkin: return "motzkin";
        case PathFamily::motzkin_prime: return "motzkin-prime";
        case PathFamily::motzkin_1: return "motzkin-1";
        case PathFamily::motzkin_2: return "motzkin-2";
        case PathFamily::motzkin_3: return "motzkin-3";
        case PathFamily::dyck_prefix: return "dyck-prefix";
        case PathFamily::updown_path: return "updown-path";
    }
    return "?";
}

void for_each_triangle_walk(int n, int m,
                            const std::function<void(const TriangleWalk&)>& fn) {
    TriangleWalk p{{0, 0}};
    std::function<void(int)> rec = [&](int step) {
        if (step == n) {
            fn(p);
            return;
        }
        auto [x1, x2] = p.back();
        auto try_step = [&](int nx1, int nx2) {
            if (nx1 > m || nx1 < nx2 || nx2 < 0) return;
            p.push_back({nx1, nx2});
            rec(step + 1);
            p.pop_back();
        };
        try_step(x1 + 1, x2);      // R
        try_step(x1, x2 + 1);      // U
        try_step(x1 - 1, x2 - 1);  // B
    };
    rec(0);
}

namespace {

bool is_motzkin_member(PathFamily f, const HeightPath& p, int w) {
    if (p.front() != 0 || p.back() != 0) return false;
    for (int y : p)
        if (y < 0 || y > w) return false;
    for (size_t t = 1; t < p.size(); ++t) {
        int d = p[t] - p[t - 1];
        if (d < -1 || d > 1) return false;
        if (d == 0) {
            int y = p[t];
            switch (f) {
                case PathFamily::motzkin: break;
                case PathFamily::motzkin_prime:
                    if (y == w) return false;
                    break;
                case PathFamily::motzkin_1:
                    if (y != 0) return false;
                    break;
                case PathFamily::motzkin_2:
                case PathFamily::motzkin_3:
                    if (y != 0 && y != w) return false;
                    break;
                default: return false;
            }
        }
    }
    if (f == PathFamily::motzkin_3) {
        int n = static_cast<int>(p.size()) - 1;
        for (int j = 0; j < n; ++j)
            if (p[j + 1] == p[j] && is_special_step(p, w, j)) return false;
    }
    return true;
}

}  // namespace

void for_each_height_path(PathFamily f, int n, int bound,
                          const std::function<void(const HeightPath&)>& fn) {
    int lo = 0, hi = bound;
    bool allow_h = true;
    int end_lo = 0, end_hi = 0;
    switch (f) {
        case PathFamily::triangle:
            throw std::invalid_argument("use for_each_triangle_walk");
        case PathFamily::motzkin:
        case PathFamily::motzkin_prime:
        case PathFamily::motzkin_1:
        case PathFamily::motzkin_2:
        case PathFamily::motzkin_3:
            break;
        case PathFamily::dyck_prefix:
            allow_h = false;
            end_hi = bound;  // any endpoint
            break;
        case PathFamily::updown_path:
            allow_h = false;
            lo = -(bound / 2);
            hi = (bound + 1) / 2;
            end_lo = end_hi = (n % 2 == 1) ? 1 : 0;
            break;
    }
    HeightPath p{0};
    std::function<void(int)> rec = [&](int step) {
        if (step == n) {
            if (p.back() < end_lo || p.back() > end_hi) return;
            if (f == PathFamily::dyck_prefix || f == PathFamily::updown_path) {
                fn(p);
            } else if (is_motzkin_member(f, p, bound)) {
                fn(p);
            }
            return;
        }
        int y = p.back();
        auto try_step = [&](int ny) {
            if (ny < lo || ny > hi) return;
            p.push_back(ny);
            rec(step + 1);
            p.pop_back();
        };
        try_step(y + 1);
        try_step(y - 1);
        if (allow_h) try_step(y);
    };
    rec(0);
}

Int count_family_enumerated(PathFamily f, int n, int bound) {
    Int c = 0;
    if (f == PathFamily::triangle) {
        for_each_triangle_walk(n, bound, [&](const TriangleWalk&) { ++c; });
        return c;
    }
    for_each_height_path(f, n, bound, [&](const HeightPath&) { ++c; });
    return c;
}

Int count_family(PathFamily f, int n, int bound) {
    switch (f) {
        case PathFamily::triangle: {
            std::map<std::pair<int, int>, Int> cur;
            cur[{0, 0}] = 1;
            for (int s = 0; s < n; ++s) {
                std::map<std::pair<int, int>, Int> next;
                for (auto& [pt, c] : cur) {
                    auto [x1, x2] = pt;
                    auto add = [&](int a, int b) {
                        if (a <= bound && a >= b && b >= 0) next[{a, b}] += c;
                    };
                    add(x1 + 1, x2);
                    add(x1, x2 + 1);
                    add(x1 - 1, x2 - 1);
                }
                cur = std::move(next);
            }
            Int total = 0;
            for (auto& [pt, c] : cur) total += c;
            return total;
        }
        case PathFamily::motzkin:
        case PathFamily::motzkin_prime:
        case PathFamily::motzkin_1:
        case PathFamily::motzkin_2: {
            std::vector<Int> cur(bound + 1, 0);
            cur[0] = 1;
            for (int s = 0; s < n; ++s) {
                std::vector<Int> next(bound + 1, 0);
                for (int y = 0; y <= bound; ++y) {
                    if (cur[y] == 0) continue;
                    if (y + 1 <= bound) next[y + 1] += cur[y];
                    if (y - 1 >= 0) next[y - 1] += cur[y];
                    bool h_ok;
                    switch (f) {
                        case PathFamily::motzkin: h_ok = true; break;
                        case PathFamily::motzkin_prime: h_ok = y != bound; break;
                        case PathFamily::motzkin_1: h_ok = y == 0; break;
                        default: h_ok = y == 0 || y == bound; break;
                    }
                    if (h_ok) next[y] += cur[y];
                }
                cur = std::move(next);
            }
            return cur[0];
        }
        case PathFamily::motzkin_3:
            return count_family_enumerated(f, n, bound);
        case PathFamily::dyck_prefix: {
            std::vector<Int> cur(bound + 1, 0);
            cur[0] = 1;
            for (int s = 0; s < n; ++s) {
                std::vector<Int> next(bound + 1, 0);
                for (int y = 0; y <= bound; ++y) {
                    if (cur[y] == 0) continue;
                    if (y + 1 <= bound) next[y + 1] += cur[y];
                    if (y - 1 >= 0) next[y - 1] += cur[y];
                }
                cur = std::move(next);
            }
            Int total = 0;
            for (auto& c : cur) total += c;
            return total;
        }
        case PathFamily::updown_path: {
            int lo = -(bound / 2), hi = (bound + 1) / 2;
            std::map<int, Int> cur;
            cur[0] = 1;
            for (int s = 0; s < n; ++s) {
                std::map<int, Int> next;
                for (auto& [y, c] : cur) {
                    if (y + 1 <= hi) next[y + 1] += c;
                    if (y - 1 >= lo) next[y - 1] += c;
                }
                cur = std::move(next);
            }
            int end = (n % 2 == 1) ? 1 : 0;
            auto it = cur.find(end);
            return it == cur.end() ? Int(0) : it->second;
        }
    }
    throw std::invalid_argument("count_family: unknown family");
}

int horizontal_steps_on_top(const HeightPath& p, int w) {
    int k = 0;
    for (size_t t = 1; t < p.size(); ++t)
        if (p[t] == p[t - 1] && p[t] == w) ++k;
    return k;
}

Int motzkin2_signed_sum(int n, int w) {
    // Signed DP; horizontal steps on x_2 = w carry weight -1.
    std::vector<Int> cur(w + 1, 0);
    cur[0] = 1;
    for (int s = 0; s < n; ++s) {
        std::vector<Int> next(w + 1, 0);
        for (int y = 0; y <= w; ++y) {
            if (cur[y] == 0) continue;
            if (y + 1 <= w) next[y + 1] += cur[y];
            if (y - 1 >= 0) next[y - 1] += cur[y];
            if (y == 0) next[y] += cur[y];
            if (y == w && w != 0) next[y] -= cur[y];
        }
        cur = std::move(next);
    }
    return cur[0];
}

std::string triangle_to_string(const TriangleWalk& p) {
    std::string s;
    for (size_t t = 1; t < p.size(); ++t) {
        int dx = p[t].first - p[t - 1].first, dy = p[t].second - p[t - 1].second;
        if (dx == 1 && dy == 0)
            s += 'R';
        else if (dx == 0 && dy == 1)
            s += 'U';
        else if (dx == -1 && dy == -1)
            s += 'B';
        else
            throw std::invalid_argument("triangle_to_string: bad step");
    }
    return s;
}

TriangleWalk triangle_from_string(const std::string& s) {
    TriangleWalk p{{0, 0}};
    for (char c : s) {
        auto [x1, x2] = p.back();
        switch (c) {
            case 'R': p.push_back({x1 + 1, x2}); break;
            case 'U': p.push_back({x1, x2 + 1}); break;
            case 'B': p.push_back({x1 - 1, x2 - 1}); break;
            default: throw std::invalid_argument("triangle_from_string: bad letter");
        }
    }
    return p;
}

std::string path_to_string(const HeightPath& p) {
    std::string s;
    for (size_t t = 1; t < p.size(); ++t) {
        int d = p[t] - p[t - 1];
        s += d == 1 ? 'U' : d == -1 ? 'D' : 'H';
        if (d < -1 || d > 1)
            throw std::invalid_argument("path_to_string: bad step");
    }
    return s;
}

HeightPath path_from_string(const std::string& s, int start) {
    HeightPath p{start};
    for (char c : s) {
        switch (c) {
            case 'U': p.push_back(p.back() + 1); break;
            case 'D': p.push_back(p.back() - 1); break;
            case 'H': p.push_back(p.back()); break;
            default: throw std::invalid_argument("path_from_string: bad letter");
        }
    }
    return p;
}

TriangleWalk csyt_to_triangle(const Tableau& t, int w) {
    if (t.shape().length() > 3 || !t.is_standard())
        throw std::invalid_argument("csyt_to_triangle: need a standard tableau with <= 3 rows");
    int n = t.size();
    std::vector<int> row_of(n + 1, 0);
    for (int i = 1; i <= t.shape().length(); ++i)
        for (int j = 1; j <= t.shape().part(i); ++j) row_of[t.entry(i, j)] = i;
    TriangleWalk p{{0, 0}};
    for (int v = 1; v <= n; ++v) {
        auto [x1, x2] = p.back();
        switch (row_of[v]) {
            case 1: p.push_back({x1 + 1, x2}); break;
            case 2: p.push_back({x1, x2 + 1}); break;
            case 3: p.push_back({x1 - 1, x2 - 1}); break;
        }
        auto [y1, y2] = p.back();
        if (y1 > w || y1 < y2 || y2 < 0)
            throw std::invalid_argument("csyt_to_triangle: walk exits the region");
    }
    return p;
}

Tableau triangle_to_csyt(const TriangleWalk& p) {
    std::vector<std::vector<int>> rows(3);
    for (size_t t = 1; t < p.size(); ++t) {
        int dx = p[t].first - p[t - 1].first, dy = p[t].second - p[t - 1].second;
        int row = dx == 1 ? 0 : dy == 1 ? 1 : 2;
        rows[row].push_back(static_cast<int>(t));
    }
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau(rows);
}

HeightPath csyt_to_dyck_prefix(const Tableau& t, int w) {
    if (t.shape().length() > 2 || !t.is_standard())
        throw std::invalid_argument("csyt_to_dyck_prefix: need a standard tableau with <= 2 rows");
    int n = t.size();
    std::vector<int> row_of(n + 1, 0);
    for (int i = 1; i <= t.shape().length(); ++i)
        for (int j = 1; j <= t.shape().part(i); ++j) row_of[t.entry(i, j)] = i;
    HeightPath p{0};
    for (int v = 1; v <= n; ++v) {
        p.push_back(p.back() + (row_of[v] == 1 ? 1 : -1));
        if (p.back() < 0 || p.back() > w)
            throw std::invalid_argument("csyt_to_dyck_prefix: prefix exits [0,w]");
    }
    return p;
}

Tableau dyck_prefix_to_csyt(const HeightPath& p) {
    std::vector<std::vector<int>> rows(2);
    for (size_t t = 1; t < p.size(); ++t)
        rows[p[t] > p[t - 1] ? 0 : 1].push_back(static_cast<int>(t));
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return Tableau(rows);
}

HeightPath matching_to_motzkin(const Matching& m) {
    CrossNestProfile prof = crossing_nesting_profile(m);
    if (prof.max_crossing >= 2)
        throw std::invalid_argument("matching_to_motzkin: matching has a 2-crossing");
    std::vector<int> role(m.n() + 1, 0);  // +1 opener, -1 closer, 0 fixed
    for (auto& [i, j] : m.arcs()) {
        role[i] = 1;
        role[j] = -1;
    }
    HeightPath p{0};
    for (int v = 1; v <= m.n(); ++v) p.push_back(p.back() + role[v]);
    return p;
}

Matching motzkin_to_matching(const HeightPath& p) {
    int n = static_cast<int>(p.size()) - 1;
    std::vector<int> stack;
    std::vector<std::pair<int, int>> arcs;
    for (int t = 1; t <= n; ++t) {
        int d = p[t] - p[t - 1];
        if (d == 1) {
            stack.push_back(t);
        } else if (d == -1) {
            if (stack.empty())
                throw std::invalid_argument("motzkin_to_matching: unmatched down step");
            arcs.push_back({stack.back(), t});
            stack.pop_back();
        }
    }
    if (!stack.empty())
        throw std::invalid_argument("motzkin_to_matching: unmatched up step");
    return Matching(n, std::move(arcs));
}

bool is_special_step(const HeightPath& p, int w, int j) {
    int n = static_cast<int>(p.size()) - 1;
    if (j < 0 || j >= n || p[j + 1] != p[j]) return false;
    if (p[j] == w && w != 0) return true;
    if (p[j] != 0) return false;
    // prefix must be a Motzkin path with horizontal steps only at the
    // bottom, carrying an even number of them
    int h_steps = 0;
    for (int t = 1; t <= j; ++t) {
        if (p[t] == p[t - 1]) {
            if (p[t] != 0) return false;
            ++h_steps;
        }
    }
    if (h_steps % 2 != 0) return false;
    // and some pure up/down continuation must climb from 0 to w
    for (int i = j + 1; i < n; ++i) {
        if (p[i + 1] == p[i]) return false;  // horizontal breaks the climb
        if (p[i + 1] == w) return true;
    }
    return false;
}

HeightPath special_involution(const HeightPath& p, int w) {
    int n = static_cast<int>(p.size()) - 1;
    int j = -1;
    for (int t = 0; t < n; ++t)
        if (p[t + 1] == p[t] && is_special_step(p, w, t)) {
            j = t;
            break;
        }
    if (j < 0) return p;  // fixed point: no special step
    HeightPath q = p;
    if (p[j] == w) {
        // First special step rides the top line: walk back over pure
        // up/down steps to the latest visit of 0 and reflect that climb.
        int idx = -1;
        for (int t = j; t >= 1; --t) {
            if (p[t] == p[t - 1]) break;  // horizontal interrupts the climb
            if (p[t - 1] == 0) {
                idx = t - 1;
                break;
            }
        }
        if (idx < 0)
            throw std::logic_error("special_involution: no climb start found");
        for (int t = idx + 1; t <= j; ++t) q[t] = w - p[idx + j + 1 - t];
    } else {
        // first special step rides the bottom: reflect the climb after it
        int i = -1;
        for (int t = j + 1; t < n; ++t) {
            if (p[t + 1] == p[t]) break;
            if (p[t + 1] == w) {
                i = t;
                break;
            }
        }
        if (i < 0)
            throw std::logic_error("special_involution: no climb end found");
        for (int t = j + 1; t <= i; ++t) q[t] = w - p[j + 1 + i - t];
    }
    return q;
}

namespace {

// Direction-based toward/away letter for a step y -> y2 relative to the
// half-integer line k (doubled: k2 = 2k).
char ta_letter(int y, int y2, int k2) {
    bool up = y2 > y;
    bool below = 2 * y < k2;
    return (up == below) ? 'T' : 'A';
}

HeightPath decode_ta(const std::string& word, int k2, int start) {
    HeightPath p{start};
    for (char c : word) {
        int y = p.back();
        bool below = 2 * y < k2;
        bool up = (c == 'T') == below;
        p.push_back(y + (up ? 1 : -1));
    }
    return p;
}

}  // namespace

HeightPath dershowitz(const HeightPath& p, int w) {
    int n = static_cast<int>(p.size()) - 1;
    int h = *std::max_element(p.begin(), p.end());
    for (int y : p)
        if (y < 0 || y > w)
            throw std::invalid_argument("dershowitz: not a bounded Dyck prefix");
    int k2 = 2 * ((h + 1) / 2) - 1;  // twice (ceil(h/2) - 1/2)
    std::string r;
    for (int t = 1; t <= n; ++t) r += ta_letter(p[t - 1], p[t], k2);
    int target = h / 2;
    int j = -1;
    for (int t = 0; t <= n; ++t)
        if (p[t] == target) {
            j = t;
            break;
        }
    if (j < 0) throw std::logic_error("dershowitz: no landing at floor(h/2)");
    std::string word = r.substr(j);
    for (int t = j; t >= 1; --t) word += r[t - 1];
    return decode_ta(word, 1, 0);
}

HeightPath dershowitz_inverse(const HeightPath& q, int w) {
    int n = static_cast<int>(q.size()) - 1;
    std::string s;
    for (int t = 1; t <= n; ++t) s += ta_letter(q[t - 1], q[t], 1);
    std::vector<HeightPath> found;
    for (int j = 0; j <= n; ++j) {
        // r_{j+1..n} = s_{1..n-j}; r_i = s_{n+1-i} for i <= j.
        std::string r(n, '?');
        for (int i = j + 1; i <= n; ++i) r[i - 1] = s[i - j - 1];
        for (int i = 1; i <= j; ++i) r[i - 1] = s[n - i];
        for (int h = 1; h <= w; ++h) {
            int k2 = 2 * ((h + 1) / 2) - 1;
            HeightPath p = decode_ta(r, k2, 0);
            bool ok = true;
            int maxy = 0;
            for (int y : p) {
                if (y < 0 || y > w) ok = false;
                maxy = std::max(maxy, y);
            }
            if (!ok || maxy != h) continue;
            int target = h / 2, first = -1;
            for (int t = 0; t <= n; ++t)
                if (p[t] == target) {
                    first = t;
                    break;
                }
            if (first != j) continue;
            if (dershowitz(p, w) == q) found.push_back(p);
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.size() != 1)
        throw std::invalid_argument("dershowitz_inverse: preimage not unique");
    return found[0];
}

HeightPath psi_fold(const HeightPath& p) {
    HeightPath q(p.size());
    for (size_t t = 0; t < p.size(); ++t) q[t] = p[t] >= 1 ? p[t] - 1 : -p[t];
    return q;
}

bool verify_h1(H1Check which, int n, int w) {
    switch (which) {
        case H1Check::t_mot1:
            return count_family(PathFamily::triangle, n, 2 * w + 1) ==
                   count_family(PathFamily::motzkin, n, w);
        case H1Check::t_mot2:
            return count_family(PathFamily::triangle, n, 2 * w) ==
                   count_family(PathFamily::motzkin_prime, n, w);
        case H1Check::dp_mot1:
            return count_family(PathFamily::dyck_prefix, n, 2 * w + 1) ==
                   count_family(PathFamily::motzkin_1, n, w);
        case H1Check::dp_mot2:
            return count_family(PathFamily::dyck_prefix, n, 2 * w) ==
                   motzkin2_signed_sum(n, w);
    }
    throw std::invalid_argument("verify_h1: unknown check");
}

}  // namespace cylschur
