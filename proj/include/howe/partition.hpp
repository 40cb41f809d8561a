#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace howe {

/// An integer partition stored as a weakly decreasing list of positive parts.
/// The empty list is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws ValidationError unless `parts` is positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    [[nodiscard]] int norm() const noexcept { return norm_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
    /// Part i (0-based), or 0 past the end.
    [[nodiscard]] int operator[](std::size_t i) const noexcept {
        return i < parts_.size() ? parts_[i] : 0;
    }
    /// Number of parts equal to `value`.
    [[nodiscard]] int multiplicity(int value) const noexcept;

    bool operator==(const Partition&) const = default;
    /// Lexicographic on parts; the canonical listing order is the reverse of this.
    std::strong_ordering operator<=>(const Partition& other) const;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<int> parts_;
    int norm_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Sorts arbitrary positive integers into a partition.
Partition partition_from_unsorted(std::vector<int> values);

/// Union of the parts of two partitions (the partition of the concatenated multiset).
Partition merge_parts(const Partition& a, const Partition& b);

/// An ordered pair of partitions. Labels Irr(W_n) for the hyperoctahedral group.
struct Bipartition {
    Partition first;
    Partition second;

    [[nodiscard]] int norm() const noexcept { return first.norm() + second.norm(); }
    bool operator==(const Bipartition&) const = default;
    [[nodiscard]] std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Bipartition& b);

/// Canonical order: larger |first| first, then each component in decreasing
/// lexicographic order. Returns true when `a` is listed before `b`.
bool canonical_before(const Bipartition& a, const Bipartition& b);

struct CanonicalLess {
    bool operator()(const Bipartition& a, const Bipartition& b) const { return canonical_before(a, b); }
};

/// All partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// All bipartitions of n in canonical order.
std::vector<Bipartition> bipartitions_of(int n);

/// Number of partitions of n.
long long partition_count(int n);

Partition conjugate(const Partition& p);

/// Partitions obtained from `p` by adding `size` boxes, no two in the same column.
/// Output is in decreasing lexicographic order.
std::vector<Partition> horizontal_strip_additions(const Partition& p, int size);

/// Partitions obtained from `p` by adding `size` boxes, no two in the same row.
std::vector<Partition> vertical_strip_additions(const Partition& p, int size);

/// Dominance order; throws ValidationError if the norms differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// Dominance on bipartitions: compares the sequence (first padded with zeros to
/// the common length, then second) by partial sums. Throws on unequal norms.
bool bipartition_dominance_leq(const Bipartition& a, const Bipartition& b);

/// True if every box of `inner` lies in `outer`.
bool contains(const Partition& outer, const Partition& inner);

}  // namespace howe
