#include "howe/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "howe/errors.hpp"

namespace howe {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ValidationError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
    }
    norm_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    return os << ')';
}

Partition partition_from_unsorted(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> all(a.parts().begin(), a.parts().end());
    all.insert(all.end(), b.parts().begin(), b.parts().end());
    return partition_from_unsorted(std::move(all));
}

std::string Bipartition::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Bipartition& b) {
    return os << '(' << b.first << ',' << b.second << ')';
}

bool canonical_before(const Bipartition& a, const Bipartition& b) {
    if (a.first.norm() != b.first.norm()) return a.first.norm() > b.first.norm();
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw ValidationError("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    if (n < 0) throw ValidationError("bipartitions_of: negative argument");
    std::vector<Bipartition> out;
    for (int a = n; a >= 0; --a) {
        const auto firsts = partitions_of(a);
        const auto seconds = partitions_of(n - a);
        for (const auto& alpha : firsts)
            for (const auto& beta : seconds) out.push_back({alpha, beta});
    }
    return out;
}

long long partition_count(int n) {
    if (n < 0) return 0;
    // Euler's pentagonal recurrence.
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        long long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > i) break;
            const long long sign = (k % 2) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(i - g1)];
            if (g2 <= i) total += sign * p[static_cast<std::size_t>(i - g2)];
        }
        p[static_cast<std::size_t>(i)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

namespace {

// Row i of the result may grow to at most p[i-1] (interlacing), row 0 without bound.
void horizontal_rec(const Partition& p, std::size_t row, int remaining, std::vector<int>& current,
                    std::vector<Partition>& out) {
    const std::size_t rows = p.length() + 1;
    if (row == rows) {
        if (remaining == 0) {
            std::vector<int> parts;
            for (int v : current)
                if (v > 0) parts.push_back(v);
            out.emplace_back(std::move(parts));
        }
        return;
    }
    const int base = p[row];
    const int cap = row == 0 ? base + remaining : std::min(base + remaining, p[row - 1]);
    for (int value = cap; value >= base; --value) {
        current.push_back(value);
        horizontal_rec(p, row + 1, remaining - (value - base), current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> horizontal_strip_additions(const Partition& p, int size) {
    if (size < 0) throw ValidationError("strip size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    horizontal_rec(p, 0, size, current, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> vertical_strip_additions(const Partition& p, int size) {
    auto out = horizontal_strip_additions(conjugate(p), size);
    for (auto& lambda : out) lambda = conjugate(lambda);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.norm() != b.norm()) throw ValidationError("dominance_leq: partitions of different norms");
    int sa = 0, sb = 0;
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

bool bipartition_dominance_leq(const Bipartition& a, const Bipartition& b) {
    if (a.norm() != b.norm())
        throw ValidationError("bipartition_dominance_leq: bipartitions of different norms");
    const std::size_t len1 = std::max(a.first.length(), b.first.length());
    const std::size_t len2 = std::max(a.second.length(), b.second.length());
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        sa += a.first[i];
        sb += b.first[i];
        if (sa > sb) return false;
    }
    for (std::size_t i = 0; i < len2; ++i) {
        sa += a.second[i];
        sb += b.second[i];
        if (sa > sb) return false;
    }
    return true;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

}  // namespace howe
