#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace cfree {

using Block = std::vector<int>;

namespace limits {
inline constexpr int max_nc = 14;
inline constexpr int max_nc_s = 14;
inline constexpr int max_nc_0 = 12;
inline constexpr int max_ncl = 10;
} // namespace limits

/// Partition of {1..n}. Stored as restricted-growth labels: label[i] is the
/// index of the block holding element i+1, blocks numbered by their minima.
class SetPartition {
public:
    SetPartition() = default;

    /// Validates and canonicalises. Throws std::invalid_argument when the
    /// blocks are not a partition of {1..n}.
    SetPartition(int n, const std::vector<Block> &blocks);

    /// Labels must already be in restricted-growth form.
    static SetPartition from_labels(std::vector<std::uint8_t> labels);

    static SetPartition singletons(int n);
    static SetPartition one_block(int n);

    int n() const { return static_cast<int>(labels_.size()); }
    int size() const { return block_count_; }
    int block_of(int element) const { return labels_.at(static_cast<std::size_t>(element - 1)); }
    const std::vector<std::uint8_t> &labels() const { return labels_; }

    std::vector<Block> blocks() const;
    std::vector<int> block_sizes() const;

    friend bool operator==(const SetPartition &, const SetPartition &) = default;
    friend auto operator<=>(const SetPartition &a, const SetPartition &b)
    {
        if (auto c = a.n() <=> b.n(); c != 0) {
            return c;
        }
        return a.labels_ <=> b.labels_;
    }

private:
    std::vector<std::uint8_t> labels_;
    int block_count_ = 0;
};

bool is_noncrossing(const SetPartition &p);

/// Non-crossing partition of {1..n}.
class NCPartition : public SetPartition {
public:
    NCPartition() = default;
    /// Throws std::invalid_argument if the blocks are not a non-crossing partition.
    NCPartition(int n, const std::vector<Block> &blocks);
    explicit NCPartition(const SetPartition &p);

    static NCPartition singletons(int n) { return NCPartition(SetPartition::singletons(n), trusted); }
    static NCPartition one_block(int n) { return NCPartition(SetPartition::one_block(n), trusted); }
    static NCPartition from_labels_unchecked(std::vector<std::uint8_t> labels)
    {
        return NCPartition(SetPartition::from_labels(std::move(labels)), trusted);
    }

    /// For every block (in canonical order), whether it is exterior.
    std::vector<bool> exterior_mask() const;
    std::vector<int> exterior_blocks() const;
    std::vector<int> interior_blocks() const;
    bool has_singleton_block(int element) const;

private:
    struct trusted_t {};
    static constexpr trusted_t trusted{};
    NCPartition(SetPartition p, trusted_t) : SetPartition(std::move(p)) {}
};

/// Non-crossing linked partition: blocks may share one element, which is
/// then the minimum of exactly one of them.
class NCLinkedPartition {
public:
    NCLinkedPartition() = default;
    /// Sorts into canonical order and validates. Throws std::invalid_argument.
    NCLinkedPartition(int n, std::vector<Block> blocks);
    explicit NCLinkedPartition(const NCPartition &p);

    int n() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<Block> &blocks() const { return blocks_; }

    /// Number of blocks containing the element (1 or 2).
    int cover_count(int element) const;

    /// Block D != B with min(D) < min(B) <= max(D) makes B interior.
    std::vector<bool> exterior_mask() const;

    friend bool operator==(const NCLinkedPartition &, const NCLinkedPartition &) = default;
    friend auto operator<=>(const NCLinkedPartition &, const NCLinkedPartition &) = default;

private:
    struct trusted_t {};
    NCLinkedPartition(int n, std::vector<Block> blocks, trusted_t) : n_(n), blocks_(std::move(blocks)) {}
    friend std::vector<NCLinkedPartition> enumerate_ncl(int n);

    int n_ = 0;
    std::vector<Block> blocks_;
};

/// Non-crossing, pairwise overlaps of at most one element, and a shared element
/// sits in two blocks of size >= 2 as the minimum of exactly one. Blocks need not be sorted.
bool is_valid_ncl(int n, const std::vector<Block> &blocks);

struct NCLClassification {
    std::vector<Block> exterior;
    std::vector<Block> interior;
    std::set<int> singly;
    std::set<int> doubly;
};

NCLClassification ncl_classify(const NCLinkedPartition &g);

// Enumeration, all in canonical (lexicographic) order. Each throws
// resource_error above its guard in `limits` and std::invalid_argument for
// nonpositive or odd sizes.
std::vector<NCPartition> enumerate_nc(int n);
void for_each_nc(int n, const std::function<void(const NCPartition &)> &visit);
std::vector<NCPartition> enumerate_nc_s(int two_n);
std::vector<NCPartition> enumerate_nc_0(int two_n);
std::map<NCPartition, std::vector<NCPartition>> group_nc_s_by_join(int two_n);
std::vector<NCLinkedPartition> enumerate_ncl(int n);

NCPartition kreweras(const NCPartition &p);
NCPartition nc_join(const NCPartition &p, const NCPartition &q);
/// Element k becomes the pair 2k-1, 2k.
NCPartition double_partition(const NCPartition &p);
NCPartition juxtapose(const NCPartition &p, const NCPartition &q);
NCLinkedPartition juxtapose(const NCLinkedPartition &p, const NCLinkedPartition &q);

bool is_parity_preserving(const SetPartition &p);
/// Restriction to odd (minus) or even (plus) positions, relabelled to {1..n}.
NCPartition odd_part(const NCPartition &sigma);
NCPartition even_part(const NCPartition &sigma);

/// `subset` is a sorted subset of {1..n}; throws std::invalid_argument otherwise.
NCPartition restrict(const NCPartition &p, const std::vector<int> &subset);
/// Singletons that duplicate an element of another block are dropped; a result
/// that is still not a valid NCL partition raises std::domain_error.
NCLinkedPartition restrict(const NCLinkedPartition &g, const std::vector<int> &subset);

bool is_nc1(const NCPartition &p);
bool is_nc2(const NCPartition &p);

} // namespace cfree
