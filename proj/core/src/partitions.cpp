#include <cfree/partitions.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <cfree/errors.hpp>

namespace cfree {

namespace {

void check_guard(int n, int guard, const char *what)
{
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": size must be positive");
    }
    if (n > guard) {
        throw resource_error(std::string(what) + ": size " + std::to_string(n) + " exceeds limit " +
                             std::to_string(guard));
    }
}

void check_even(int two_n, int guard, const char *what)
{
    if (two_n < 2 || two_n % 2 != 0) {
        throw std::invalid_argument(std::string(what) + ": size must be a positive even integer");
    }
    check_guard(two_n, guard, what);
}

// Relabels arbitrary block ids into restricted-growth form.
std::vector<std::uint8_t> canonical_labels(const std::vector<int> &ids)
{
    std::vector<std::uint8_t> out(ids.size());
    std::map<int, std::uint8_t> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto [it, inserted] = seen.emplace(ids[i], static_cast<std::uint8_t>(seen.size()));
        out[i] = it->second;
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

bool blocks_cross(const Block &a, const Block &b)
{
    // i<j<k<l with i,k in a and j,l in b, or the roles swapped. Shared
    // elements never count, which is what the linked partitions need.
    auto one_way = [](const Block &x, const Block &y) {
        for (std::size_t ii = 0; ii < x.size(); ++ii) {
            for (std::size_t kk = ii + 1; kk < x.size(); ++kk) {
                const int i = x[ii];
                const int k = x[kk];
                bool inside = false;
                bool beyond = false;
                for (int e : y) {
                    inside = inside || (i < e && e < k);
                    beyond = beyond || e > k;
                }
                if (inside && beyond) {
                    return true;
                }
            }
        }
        return false;
    };
    return one_way(a, b) || one_way(b, a);
}

std::vector<int> relabel_map(int n, const std::vector<int> &subset)
{
    if (subset.empty()) {
        throw std::invalid_argument("restrict: subset must be nonempty");
    }
    std::vector<int> map(static_cast<std::size_t>(n) + 1, 0);
    int prev = 0;
    int next = 1;
    for (int a : subset) {
        if (a <= prev || a > n) {
            throw std::invalid_argument("restrict: subset must be a sorted subset of {1..n}");
        }
        map[static_cast<std::size_t>(a)] = next++;
        prev = a;
    }
    return map;
}

} // namespace

// ---- SetPartition ----------------------------------------------------------

SetPartition::SetPartition(int n, const std::vector<Block> &blocks)
{
    if (n < 1 || n > 255) {
        throw std::invalid_argument("partition size must be in 1..255");
    }
    std::vector<int> ids(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw std::invalid_argument("partition blocks must be nonempty");
        }
        for (int e : blocks[b]) {
            if (e < 1 || e > n) {
                throw std::invalid_argument("partition element " + std::to_string(e) + " outside {1.." +
                                            std::to_string(n) + "}");
            }
            if (ids[static_cast<std::size_t>(e - 1)] != -1) {
                throw std::invalid_argument("partition element " + std::to_string(e) + " appears twice");
            }
            ids[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
        }
    }
    if (std::find(ids.begin(), ids.end(), -1) != ids.end()) {
        throw std::invalid_argument("partition blocks do not cover {1..n}");
    }
    *this = from_labels(canonical_labels(ids));
}

SetPartition SetPartition::from_labels(std::vector<std::uint8_t> labels)
{
    SetPartition p;
    int count = 0;
    for (auto l : labels) {
        count = std::max(count, static_cast<int>(l) + 1);
    }
    p.labels_ = std::move(labels);
    p.block_count_ = count;
    return p;
}

SetPartition SetPartition::singletons(int n)
{
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), std::uint8_t{0});
    return from_labels(std::move(labels));
}

SetPartition SetPartition::one_block(int n) { return from_labels(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)); }

std::vector<Block> SetPartition::blocks() const
{
    std::vector<Block> out(static_cast<std::size_t>(block_count_));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        out[labels_[i]].push_back(static_cast<int>(i) + 1);
    }
    return out;
}

std::vector<int> SetPartition::block_sizes() const
{
    std::vector<int> out(static_cast<std::size_t>(block_count_), 0);
    for (auto l : labels_) {
        ++out[l];
    }
    return out;
}

bool is_noncrossing(const SetPartition &p)
{
    // Scan left to right keeping a stack of open blocks: an element may only
    // extend the block on top, or reopen a block after popping finished ones.
    const auto &labels = p.labels();
    std::vector<int> last(static_cast<std::size_t>(p.size()), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        last[labels[i]] = static_cast<int>(i);
    }
    std::vector<int> stack;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const int b = labels[i];
        if (stack.empty() || stack.back() != b) {
            if (std::find(stack.begin(), stack.end(), b) != stack.end()) {
                return false;
            }
            stack.push_back(b);
        }
        if (last[b] == static_cast<int>(i)) {
            stack.pop_back();
        }
    }
    return true;
}

// ---- NCPartition -----------------------------------------------------------

NCPartition::NCPartition(int n, const std::vector<Block> &blocks) : NCPartition(SetPartition(n, blocks)) {}

NCPartition::NCPartition(const SetPartition &p) : SetPartition(p)
{
    if (!is_noncrossing(p)) {
        throw std::invalid_argument("partition has a crossing");
    }
}

std::vector<bool> NCPartition::exterior_mask() const
{
    const int k = size();
    std::vector<int> lo(static_cast<std::size_t>(k), n() + 1);
    std::vector<int> hi(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= n(); ++i) {
        const int b = block_of(i);
        lo[b] = std::min(lo[b], i);
        hi[b] = std::max(hi[b], i);
    }
    std::vector<bool> ext(static_cast<std::size_t>(k), true);
    for (int b = 0; b < k; ++b) {
        for (int d = 0; d < k; ++d) {
            if (d != b && lo[d] < lo[b] && hi[b] < hi[d]) {
                ext[b] = false;
                break;
            }
        }
    }
    return ext;
}

std::vector<int> NCPartition::exterior_blocks() const
{
    std::vector<int> out;
    const auto mask = exterior_mask();
    for (std::size_t b = 0; b < mask.size(); ++b) {
        if (mask[b]) {
            out.push_back(static_cast<int>(b));
        }
    }
    return out;
}

std::vector<int> NCPartition::interior_blocks() const
{
    std::vector<int> out;
    const auto mask = exterior_mask();
    for (std::size_t b = 0; b < mask.size(); ++b) {
        if (!mask[b]) {
            out.push_back(static_cast<int>(b));
        }
    }
    return out;
}

bool NCPartition::has_singleton_block(int element) const
{
    const int b = block_of(element);
    const auto &l = labels();
    return std::count(l.begin(), l.end(), static_cast<std::uint8_t>(b)) == 1;
}

// ---- NCLinkedPartition -----------------------------------------------------

bool is_valid_ncl(int n, const std::vector<Block> &blocks)
{
    if (n < 1) {
        return false;
    }
    std::vector<int> cover(static_cast<std::size_t>(n) + 1, 0);
    for (const auto &b : blocks) {
        if (b.empty() || !std::is_sorted(b.begin(), b.end()) ||
            std::adjacent_find(b.begin(), b.end()) != b.end()) {
            return false;
        }
        for (int e : b) {
            if (e < 1 || e > n) {
                return false;
            }
            ++cover[static_cast<std::size_t>(e)];
        }
    }
    for (int e = 1; e <= n; ++e) {
        if (cover[static_cast<std::size_t>(e)] == 0) {
            return false;
        }
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            const Block &x = blocks[a];
            const Block &y = blocks[b];
            if (blocks_cross(x, y)) {
                return false;
            }
            Block common;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            if (common.size() > 1) {
                return false;
            }
            if (common.size() == 1) {
                const int j = common.front();
                if (x.size() < 2 || y.size() < 2) {
                    return false;
                }
                if ((x.front() == j) == (y.front() == j)) {
                    return false;
                }
            }
        }
    }
    return true;
}

NCLinkedPartition::NCLinkedPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks))
{
    for (auto &b : blocks_) {
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
    if (!is_valid_ncl(n_, blocks_)) {
        throw std::invalid_argument("blocks do not form a non-crossing linked partition");
    }
}

NCLinkedPartition::NCLinkedPartition(const NCPartition &p) : n_(p.n()), blocks_(p.blocks()) {}

int NCLinkedPartition::cover_count(int element) const
{
    if (element < 1 || element > n_) {
        throw std::invalid_argument("cover_count: element outside {1..n}");
    }
    int count = 0;
    for (const auto &b : blocks_) {
        count += std::binary_search(b.begin(), b.end(), element) ? 1 : 0;
    }
    return count;
}

std::vector<bool> NCLinkedPartition::exterior_mask() const
{
    std::vector<bool> ext(blocks_.size(), true);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (std::size_t d = 0; d < blocks_.size(); ++d) {
            if (d != b && blocks_[d].front() < blocks_[b].front() && blocks_[b].front() <= blocks_[d].back()) {
                ext[b] = false;
                break;
            }
        }
    }
    return ext;
}

NCLClassification ncl_classify(const NCLinkedPartition &g)
{
    NCLClassification out;
    const auto mask = g.exterior_mask();
    for (std::size_t b = 0; b < mask.size(); ++b) {
        (mask[b] ? out.exterior : out.interior).push_back(g.blocks()[b]);
    }
    for (int e = 1; e <= g.n(); ++e) {
        (g.cover_count(e) == 1 ? out.singly : out.doubly).insert(e);
    }
    return out;
}

// ---- enumeration -----------------------------------------------------------

void for_each_nc(int n, const std::function<void(const NCPartition &)> &visit)
{
    check_guard(n, limits::max_nc, "enumerate_nc");
    // Depth-first over restricted-growth labels. `open` is the stack of blocks
    // that may still receive elements; joining a block closes everything
    // opened after it, which is exactly the non-crossing condition.
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> open;
    open.reserve(static_cast<std::size_t>(n));

    std::function<void(int, int)> rec = [&](int i, int count) {
        if (i == n) {
            visit(NCPartition::from_labels_unchecked(labels));
            return;
        }
        for (std::size_t s = 0; s < open.size(); ++s) {
            const std::uint8_t b = open[s];
            std::vector<std::uint8_t> popped(open.begin() + static_cast<std::ptrdiff_t>(s) + 1, open.end());
            open.resize(s + 1);
            labels[static_cast<std::size_t>(i)] = b;
            rec(i + 1, count);
            open.insert(open.end(), popped.begin(), popped.end());
        }
        open.push_back(static_cast<std::uint8_t>(count));
        labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(count);
        rec(i + 1, count + 1);
        open.pop_back();
    };
    rec(0, 0);
}

std::vector<NCPartition> enumerate_nc(int n)
{
    std::vector<NCPartition> out;
    for_each_nc(n, [&](const NCPartition &p) { out.push_back(p); });
    return out;
}

bool is_parity_preserving(const SetPartition &p)
{
    for (const auto &b : p.blocks()) {
        for (int e : b) {
            if ((e - b.front()) % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

namespace {

NCPartition part_by_parity(const NCPartition &sigma, int parity)
{
    std::vector<int> subset;
    for (int e = 1; e <= sigma.n(); ++e) {
        if (e % 2 == parity) {
            subset.push_back(e);
        }
    }
    return restrict(sigma, subset);
}

} // namespace

NCPartition odd_part(const NCPartition &sigma) { return part_by_parity(sigma, 1); }
NCPartition even_part(const NCPartition &sigma) { return part_by_parity(sigma, 0); }

std::vector<NCPartition> enumerate_nc_s(int two_n)
{
    check_even(two_n, limits::max_nc_s, "enumerate_nc_s");
    std::vector<NCPartition> out;
    for_each_nc(two_n, [&](const NCPartition &p) {
        if (is_parity_preserving(p)) {
            out.push_back(p);
        }
    });
    return out;
}

std::vector<NCPartition> enumerate_nc_0(int two_n)
{
    check_even(two_n, limits::max_nc_0, "enumerate_nc_0");
    const NCPartition top = NCPartition::one_block(two_n);
    const NCPartition doubled = double_partition(NCPartition::singletons(two_n / 2));
    std::vector<NCPartition> out;
    for (const auto &sigma : enumerate_nc_s(two_n)) {
        const bool kreweras_rule = even_part(sigma) == kreweras(odd_part(sigma));
        const bool join_rule = nc_join(sigma, doubled) == top;
        if (kreweras_rule != join_rule) {
            throw std::logic_error("NC_0 membership criteria disagree");
        }
        if (kreweras_rule) {
            out.push_back(sigma);
        }
    }
    return out;
}

std::map<NCPartition, std::vector<NCPartition>> group_nc_s_by_join(int two_n)
{
    check_even(two_n, limits::max_nc_0, "group_nc_s_by_join");
    const int n = two_n / 2;
    const NCPartition doubled = double_partition(NCPartition::singletons(n));
    std::map<NCPartition, std::vector<NCPartition>> fibers;
    for (const auto &sigma : enumerate_nc_s(two_n)) {
        const NCPartition j = nc_join(sigma, doubled);
        // j is coarser than the doubled bottom, so it is the hat of its odd part.
        const NCPartition pi = odd_part(j);
        if (double_partition(pi) != j) {
            throw std::logic_error("join with doubled bottom is not a doubled partition");
        }
        fibers[pi].push_back(sigma);
    }
    return fibers;
}

namespace {

using Shape = std::vector<Block>; // blocks on {0..len-1}

void append_shifted(Shape &dst, const Shape &src, int offset)
{
    for (const auto &b : src) {
        Block s(b);
        for (int &e : s) {
            e += offset;
        }
        dst.push_back(std::move(s));
    }
}

// All linked partitions of an interval of the given length, built from the
// block F containing the first element: everything between consecutive
// elements of F is independent, and the segment starting at a non-first
// element of F may hang a second block off that element.
const std::vector<Shape> &ncl_shapes(int len, std::vector<std::vector<Shape>> &memo)
{
    auto &slot = memo[static_cast<std::size_t>(len)];
    if (!slot.empty() || len == 0) {
        if (len == 0 && slot.empty()) {
            slot.push_back({});
        }
        return slot;
    }
    std::vector<Shape> result;
    const int rest = len - 1;
    for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
        Block f{0};
        for (int i = 0; i < rest; ++i) {
            if (mask & (1u << i)) {
                f.push_back(i + 1);
            }
        }
        // Options per region; a region is (start, length, hangs_off_f).
        struct Region {
            int start;
            int length;
            bool linked;
        };
        std::vector<Region> regions;
        if (f.size() == 1) {
            regions.push_back({1, rest, false});
        } else {
            regions.push_back({1, f[1] - 1, false});
            for (std::size_t l = 1; l < f.size(); ++l) {
                const int end = (l + 1 < f.size()) ? f[l + 1] : len;
                regions.push_back({f[l], end - f[l], true});
            }
        }
        std::vector<Shape> partial{Shape{f}};
        for (const auto &r : regions) {
            const auto &options = ncl_shapes(r.length, memo);
            std::vector<Shape> next;
            next.reserve(partial.size() * options.size());
            for (const auto &base : partial) {
                for (const auto &opt : options) {
                    Shape s = base;
                    if (r.linked && !opt.empty() && opt.front().size() == 1) {
                        // The first element is already covered by F.
                        Shape tail(opt.begin() + 1, opt.end());
                        append_shifted(s, tail, r.start);
                    } else {
                        append_shifted(s, opt, r.start);
                    }
                    next.push_back(std::move(s));
                }
            }
            partial = std::move(next);
        }
        for (auto &s : partial) {
            std::sort(s.begin(), s.end());
            result.push_back(std::move(s));
        }
    }
    slot = std::move(result);
    return slot;
}

} // namespace

std::vector<NCLinkedPartition> enumerate_ncl(int n)
{
    check_guard(n, limits::max_ncl, "enumerate_ncl");
    std::vector<std::vector<Shape>> memo(static_cast<std::size_t>(n) + 1);
    const auto &shapes = ncl_shapes(n, memo);
    std::vector<NCLinkedPartition> out;
    out.reserve(shapes.size());
    for (const auto &s : shapes) {
        Shape blocks = s;
        for (auto &b : blocks) {
            for (int &e : b) {
                ++e;
            }
        }
        out.push_back(NCLinkedPartition(n, std::move(blocks), NCLinkedPartition::trusted_t{}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- structural maps -------------------------------------------------------

NCPartition kreweras(const NCPartition &p)
{
    // Kr(p) = p^{-1} o (1 2 ... n), reading p as the permutation that sends
    // each element to the next one of its block (cyclically).
    const int n = p.n();
    std::vector<int> prev(static_cast<std::size_t>(n));
    for (const auto &b : p.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            const int from = b[(i + 1) % b.size()];
            prev[static_cast<std::size_t>(from - 1)] = b[i];
        }
    }
    std::vector<int> ids(static_cast<std::size_t>(n), -1);
    int cycle = 0;
    for (int start = 1; start <= n; ++start) {
        if (ids[static_cast<std::size_t>(start - 1)] != -1) {
            continue;
        }
        int e = start;
        while (ids[static_cast<std::size_t>(e - 1)] == -1) {
            ids[static_cast<std::size_t>(e - 1)] = cycle;
            e = prev[static_cast<std::size_t>(e % n)];
        }
        ++cycle;
    }
    return NCPartition::from_labels_unchecked(canonical_labels(ids));
}

NCPartition nc_join(const NCPartition &p, const NCPartition &q)
{
    if (p.n() != q.n()) {
        throw std::invalid_argument("nc_join: partitions have different sizes");
    }
    const int n = p.n();
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (p.labels()[i] == p.labels()[j] || q.labels()[i] == q.labels()[j]) {
                uf.unite(i, j);
            }
        }
    }
    auto current_blocks = [&] {
        std::map<int, Block> groups;
        for (int i = 0; i < n; ++i) {
            groups[uf.find(i)].push_back(i + 1);
        }
        std::vector<Block> out;
        for (auto &[root, b] : groups) {
            out.push_back(std::move(b));
        }
        return out;
    };
    bool merged = true;
    while (merged) {
        merged = false;
        const auto blocks = current_blocks();
        for (std::size_t a = 0; a < blocks.size() && !merged; ++a) {
            for (std::size_t b = a + 1; b < blocks.size() && !merged; ++b) {
                if (blocks_cross(blocks[a], blocks[b])) {
                    uf.unite(blocks[a].front() - 1, blocks[b].front() - 1);
                    merged = true;
                }
            }
        }
    }
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ids[static_cast<std::size_t>(i)] = uf.find(i);
    }
    return NCPartition::from_labels_unchecked(canonical_labels(ids));
}

NCPartition double_partition(const NCPartition &p)
{
    std::vector<std::uint8_t> labels;
    labels.reserve(p.labels().size() * 2);
    for (auto l : p.labels()) {
        labels.push_back(l);
        labels.push_back(l);
    }
    return NCPartition::from_labels_unchecked(std::move(labels));
}

NCPartition juxtapose(const NCPartition &p, const NCPartition &q)
{
    std::vector<std::uint8_t> labels = p.labels();
    for (auto l : q.labels()) {
        labels.push_back(static_cast<std::uint8_t>(l + p.size()));
    }
    return NCPartition::from_labels_unchecked(std::move(labels));
}

NCLinkedPartition juxtapose(const NCLinkedPartition &p, const NCLinkedPartition &q)
{
    std::vector<Block> blocks = p.blocks();
    append_shifted(blocks, q.blocks(), p.n());
    return NCLinkedPartition(p.n() + q.n(), std::move(blocks));
}

NCPartition restrict(const NCPartition &p, const std::vector<int> &subset)
{
    relabel_map(p.n(), subset);
    std::vector<int> ids;
    ids.reserve(subset.size());
    for (int a : subset) {
        ids.push_back(p.block_of(a));
    }
    return NCPartition::from_labels_unchecked(canonical_labels(ids));
}

NCLinkedPartition restrict(const NCLinkedPartition &g, const std::vector<int> &subset)
{
    const auto map = relabel_map(g.n(), subset);
    std::vector<Block> blocks;
    for (const auto &b : g.blocks()) {
        Block r;
        for (int e : b) {
            if (map[static_cast<std::size_t>(e)] != 0) {
                r.push_back(map[static_cast<std::size_t>(e)]);
            }
        }
        if (!r.empty()) {
            blocks.push_back(std::move(r));
        }
    }
    const int m = static_cast<int>(subset.size());
    std::vector<int> cover(static_cast<std::size_t>(m) + 1, 0);
    for (const auto &b : blocks) {
        for (int e : b) {
            ++cover[static_cast<std::size_t>(e)];
        }
    }
    std::erase_if(blocks, [&](const Block &b) { return b.size() == 1 && cover[static_cast<std::size_t>(b[0])] > 1; });
    std::sort(blocks.begin(), blocks.end());
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    if (!is_valid_ncl(m, blocks)) {
        throw std::domain_error("restriction is not a non-crossing linked partition");
    }
    return NCLinkedPartition(m, std::move(blocks));
}

bool is_nc1(const NCPartition &p) { return p.exterior_blocks().size() == 1; }
bool is_nc2(const NCPartition &p) { return p.exterior_blocks().size() == 2; }

} // namespace cfree
