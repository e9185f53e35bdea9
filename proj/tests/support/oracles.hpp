#pragma once

// Brute-force reference implementations. Nothing here calls into the library's
// enumeration or lattice code, so the tests compare two independent routes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Block = std::vector<int>;
using Family = std::vector<Block>;

inline std::vector<std::uint64_t> catalan(int n)
{
    std::vector<std::uint64_t> c{1};
    for (int k = 1; k <= n; ++k) {
        std::uint64_t s = 0;
        for (int i = 0; i < k; ++i) {
            s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
        }
        c.push_back(s);
    }
    return c;
}

// Every set partition of {1..n}, blocks sorted by minimum.
inline std::vector<Family> set_partitions(int n)
{
    std::vector<Family> out;
    Family cur;
    std::function<void(int)> rec = [&](int e) {
        if (e > n) {
            out.push_back(cur);
            return;
        }
        // Index loop: the recursion below grows `cur`.
        for (std::size_t i = 0; i < cur.size(); ++i) {
            cur[i].push_back(e);
            rec(e + 1);
            cur[i].pop_back();
        }
        cur.push_back({e});
        rec(e + 1);
        cur.pop_back();
    };
    rec(1);
    return out;
}

// a < b < c < d with a, c in X and b, d in Y.
inline bool blocks_cross(const Block &x, const Block &y)
{
    for (int a : x) {
        for (int c : x) {
            for (int b : y) {
                for (int d : y) {
                    if (a < b && b < c && c < d) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

inline bool noncrossing(const Family &f)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (i != j && blocks_cross(f[i], f[j])) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<Family> nc_partitions(int n)
{
    std::vector<Family> out;
    for (auto &f : set_partitions(n)) {
        if (noncrossing(f)) {
            out.push_back(f);
        }
    }
    return out;
}

inline int block_index(const Family &f, int e)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::find(f[i].begin(), f[i].end(), e) != f[i].end()) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

// p <= q in refinement order.
inline bool refines(const Family &p, const Family &q)
{
    for (const auto &b : p) {
        const int k = block_index(q, b.front());
        for (int e : b) {
            if (block_index(q, e) != k) {
                return false;
            }
        }
    }
    return true;
}

// p on 1, 3, 5, ... and q on 2, 4, 6, ...
inline Family interleave(const Family &p, const Family &q)
{
    Family out;
    for (const auto &b : p) {
        Block c;
        for (int e : b) {
            c.push_back(2 * e - 1);
        }
        out.push_back(c);
    }
    for (const auto &b : q) {
        Block c;
        for (int e : b) {
            c.push_back(2 * e);
        }
        out.push_back(c);
    }
    return out;
}

// The coarsest q in NC(n) whose interleaving with p is non-crossing.
inline Family kreweras(const Family &p, int n)
{
    Family best;
    for (const auto &q : nc_partitions(n)) {
        if (!noncrossing(interleave(p, q))) {
            continue;
        }
        if (best.empty() || refines(best, q)) {
            best = q;
        }
    }
    return best;
}

// The finest non-crossing partition above both p and q.
inline Family nc_join(const Family &p, const Family &q, int n)
{
    Family best;
    for (const auto &r : nc_partitions(n)) {
        if (refines(p, r) && refines(q, r) && (best.empty() || refines(r, best))) {
            best = r;
        }
    }
    return best;
}

// Literal block-family rules for non-crossing linked partitions: no crossing
// pair, two blocks share at most one element, and a shared element lies in two
// blocks of size at least two and is the minimum of exactly one of them.
inline bool ncl_family_ok(const Family &f)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            const Block &a = f[i];
            const Block &b = f[j];
            if (blocks_cross(a, b) || blocks_cross(b, a)) {
                return false;
            }
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.size() > 1) {
                return false;
            }
            if (common.size() == 1) {
                const int s = common.front();
                if (a.size() < 2 || b.size() < 2 || (a.front() == s) == (b.front() == s)) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Every NCL block family on {1..n}; at step m a new block with minimum m may
// start, and the family is pruned as soon as a rule breaks.
inline std::vector<Family> ncl_families(int n)
{
    std::vector<Family> out;
    Family cur;
    std::vector<int> covered(static_cast<std::size_t>(n + 1), 0);
    std::function<void(int)> rec = [&](int m) {
        if (m > n) {
            if (std::all_of(covered.begin() + 1, covered.end(), [](int c) { return c > 0; })) {
                out.push_back(cur);
            }
            return;
        }
        if (covered[static_cast<std::size_t>(m)] > 0) {
            rec(m + 1);
        }
        const int rest = n - m;
        for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
            Block b{m};
            for (int i = 0; i < rest; ++i) {
                if (mask & (1u << i)) {
                    b.push_back(m + 1 + i);
                }
            }
            cur.push_back(b);
            if (ncl_family_ok(cur)) {
                for (int e : b) {
                    ++covered[static_cast<std::size_t>(e)];
                }
                rec(m + 1);
                for (int e : b) {
                    --covered[static_cast<std::size_t>(e)];
                }
            }
            cur.pop_back();
        }
    };
    rec(1);
    for (auto &f : out) {
        std::sort(f.begin(), f.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool parity_constant(const Family &f)
{
    return std::all_of(f.begin(), f.end(), [](const Block &b) {
        return std::all_of(b.begin(), b.end(), [&](int e) { return e % 2 == b.front() % 2; });
    });
}

} // namespace oracle
