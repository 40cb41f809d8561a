#include "howe/bn_characters.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "howe/errors.hpp"

namespace howe {

namespace {

std::atomic<int> g_oracle_bound{kDefaultOracleBound};

using LabelKey = std::pair<std::vector<int>, std::vector<int>>;

LabelKey key_of(const BnClassLabel& label) {
    return {std::vector<int>(label.positive_cycles.parts().begin(), label.positive_cycles.parts().end()),
            std::vector<int>(label.negative_cycles.parts().begin(), label.negative_cycles.parts().end())};
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Encodes a cycle type as a base-(n+1) number: one digit per (length, sign).
// Fits in 64 bits for n <= kMaxEnumerableRank.
class CycleTypeEncoder {
public:
    explicit CycleTypeEncoder(int n) : n_(n), weights_(2 * static_cast<std::size_t>(n) + 1, 0) {
        std::uint64_t w = 1;
        for (auto& weight : weights_) {
            weight = w;
            w *= static_cast<std::uint64_t>(n + 1);
        }
    }

    // Digit for a cycle of `length` (1..n) with the given sign.
    [[nodiscard]] std::uint64_t weight(int length, bool negative) const {
        return weights_[static_cast<std::size_t>(length - 1 + (negative ? n_ : 0))];
    }

    [[nodiscard]] std::uint64_t encode(const BnClassLabel& label) const {
        std::uint64_t key = 0;
        for (int part : label.positive_cycles.parts()) key += weight(part, false);
        for (int part : label.negative_cycles.parts()) key += weight(part, true);
        return key;
    }

private:
    int n_;
    std::vector<std::uint64_t> weights_;
};

struct EnumerationSetup {
    std::vector<std::vector<int>> permutations;
    CycleTypeEncoder encoder;
    std::unordered_map<std::uint64_t, std::size_t> class_of_key;
    std::size_t class_count;
};

EnumerationSetup make_setup(int n) {
    if (n < 0 || n > kMaxEnumerableRank)
        throw ValidationError("signed-permutation enumeration supports ranks 0.." +
                              std::to_string(kMaxEnumerableRank));
    EnumerationSetup setup{{}, CycleTypeEncoder(n), {}, 0};
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        setup.permutations.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto labels = bipartitions_of(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
        setup.class_of_key.emplace(setup.encoder.encode({labels[i].first, labels[i].second}), i);
    setup.class_count = labels.size();
    return setup;
}

// Adds the classes of the 2^n signed versions of one permutation.
void accumulate_signed_versions(const std::vector<int>& perm, const EnumerationSetup& setup,
                                std::vector<std::int64_t>& counts) {
    const int n = static_cast<int>(perm.size());
    // Cycle supports as bitmasks; the sign of a cycle is the parity of the
    // negative entries it contains.
    std::vector<std::pair<int, std::uint32_t>> cycles;
    std::vector<bool> seen(perm.size(), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::uint32_t support = 0;
        int length = 0;
        for (int j = start; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            support |= 1u << j;
            ++length;
        }
        cycles.emplace_back(length, support);
    }
    const std::uint32_t masks = 1u << n;
    for (std::uint32_t signs = 0; signs < masks; ++signs) {
        std::uint64_t key = 0;
        for (const auto& [length, support] : cycles)
            key += setup.encoder.weight(length, (std::popcount(signs & support) & 1) != 0);
        ++counts[setup.class_of_key.at(key)];
    }
}

}  // namespace

int oracle_rank_bound() noexcept { return g_oracle_bound.load(); }

void set_oracle_rank_bound(int bound) {
    if (bound < 0 || bound > kMaxEnumerableRank)
        throw ValidationError("oracle rank bound must lie in 0.." + std::to_string(kMaxEnumerableRank));
    g_oracle_bound.store(bound);
}

std::string BnClassLabel::to_string() const {
    std::ostringstream os;
    os << '(' << positive_cycles << ',' << negative_cycles << ')';
    return os.str();
}

std::int64_t hyperoctahedral_order(int n) {
    return (std::int64_t{1} << n) * factorial(n);
}

std::int64_t centralizer_order(const BnClassLabel& label) {
    std::int64_t z = 1;
    auto contribute = [&z](const Partition& p) {
        for (int len = 1; len <= p.norm(); ++len) {
            const int mult = p.multiplicity(len);
            for (int i = 0; i < mult; ++i) z *= 2 * len;
            z *= factorial(mult);
        }
    };
    contribute(label.positive_cycles);
    contribute(label.negative_cycles);
    return z;
}

std::size_t ClassData::index_of(const BnClassLabel& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw ValidationError("class label " + label.to_string() + " is not a class of W_" +
                          std::to_string(rank));
}

std::vector<std::int64_t> enumerate_class_sizes_serial(int n) {
    const auto setup = make_setup(n);
    std::vector<std::int64_t> counts(setup.class_count, 0);
    for (const auto& perm : setup.permutations) accumulate_signed_versions(perm, setup, counts);
    return counts;
}

std::vector<std::int64_t> enumerate_class_sizes_parallel(int n) {
    const auto setup = make_setup(n);
    std::vector<std::int64_t> counts(setup.class_count, 0);
    const auto total = static_cast<std::int64_t>(setup.permutations.size());
#pragma omp parallel default(none) shared(setup, counts, total)
    {
        std::vector<std::int64_t> local(setup.class_count, 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < total; ++i)
            accumulate_signed_versions(setup.permutations[static_cast<std::size_t>(i)], setup, local);
#pragma omp critical
        for (std::size_t c = 0; c < local.size(); ++c) counts[c] += local[c];
    }
    return counts;
}

namespace {

std::unique_ptr<ClassData> make_class_data(int n) {
    auto data = std::make_unique<ClassData>();
    data->rank = n;
    data->group_order = hyperoctahedral_order(n);
    for (auto& b : bipartitions_of(n)) data->labels.push_back({b.first, b.second});
    data->sizes = enumerate_class_sizes_parallel(n);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < data->labels.size(); ++i) {
        const std::int64_t z = centralizer_order(data->labels[i]);
        data->centralizers.push_back(z);
        if (z * data->sizes[i] != data->group_order)
            throw InvariantViolation("class size of " + data->labels[i].to_string() + " in W_" +
                                     std::to_string(n) + ": enumeration gives " +
                                     std::to_string(data->sizes[i]) + ", centralizer formula gives " +
                                     std::to_string(data->group_order / z));
        total += data->sizes[i];
    }
    if (total != data->group_order)
        throw InvariantViolation("class sizes of W_" + std::to_string(n) + " do not sum to the group order");
    return data;
}

void check_rank(int n) {
    if (n < 0) throw ValidationError("negative rank");
    if (n > oracle_rank_bound())
        throw ValidationError("rank " + std::to_string(n) + " exceeds the oracle bound " +
                              std::to_string(oracle_rank_bound()));
}

}  // namespace

const ClassData& conjugacy_classes(int n) {
    check_rank(n);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<ClassData>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = make_class_data(n);
    return *slot;
}

// ---------------------------------------------------------------------------
// Class functions

ClassFunction::ClassFunction(int rank, std::vector<Rational> values)
    : rank_(rank), values_(std::move(values)) {
    if (values_.size() != conjugacy_classes(rank).size())
        throw ValidationError("class function has the wrong number of values for W_" +
                              std::to_string(rank));
}

ClassFunction ClassFunction::zero(int rank) { return constant(rank, Rational(0)); }

ClassFunction ClassFunction::constant(int rank, Rational value) {
    return ClassFunction(rank, std::vector<Rational>(conjugacy_classes(rank).size(), value));
}

const Rational& ClassFunction::at(const BnClassLabel& label) const {
    return values_[conjugacy_classes(rank_).index_of(label)];
}

Rational ClassFunction::degree() const {
    // The identity is the class ((1^n), ()), which is last among the
    // classes with empty negative part; look it up rather than rely on that.
    return at({Partition(std::vector<int>(static_cast<std::size_t>(rank_), 1)), {}});
}

bool ClassFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.numerator() == 0; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (other.rank_ != rank_) throw ValidationError("adding class functions of different ranks");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
    if (other.rank_ != rank_) throw ValidationError("subtracting class functions of different ranks");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.rank_ != b.rank_) throw ValidationError("multiplying class functions of different ranks");
    ClassFunction out = a;
    for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] *= b.values_[i];
    return out;
}

ProductClassFunction::ProductClassFunction(int rank_a, int rank_b)
    : rank_a_(rank_a),
      rank_b_(rank_b),
      cols_(conjugacy_classes(rank_b).size()),
      values_(conjugacy_classes(rank_a).size() * cols_, Rational(0)) {}

ProductClassFunction::ProductClassFunction(int rank_a, int rank_b, std::vector<Rational> values)
    : ProductClassFunction(rank_a, rank_b) {
    if (values.size() != values_.size())
        throw ValidationError("product class function has the wrong number of values");
    values_ = std::move(values);
}

ProductClassFunction& ProductClassFunction::operator+=(const ProductClassFunction& other) {
    if (other.rank_a_ != rank_a_ || other.rank_b_ != rank_b_)
        throw ValidationError("adding product class functions on different groups");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ProductClassFunction outer_product(const ClassFunction& f, const ClassFunction& g) {
    ProductClassFunction out(f.rank(), g.rank());
    for (std::size_t i = 0; i < f.values().size(); ++i)
        for (std::size_t j = 0; j < g.values().size(); ++j) out.at(i, j) = f[i] * g[j];
    return out;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.rank() != g.rank()) throw ValidationError("inner product of class functions of different ranks");
    const auto& classes = conjugacy_classes(f.rank());
    Rational sum(0);
    for (std::size_t i = 0; i < classes.size(); ++i) sum += f[i] * g[i] * classes.sizes[i];
    return sum / classes.group_order;
}

Rational inner_product(const ProductClassFunction& f, const ProductClassFunction& g) {
    if (f.rank_a() != g.rank_a() || f.rank_b() != g.rank_b())
        throw ValidationError("inner product of product class functions on different groups");
    const auto& ca = conjugacy_classes(f.rank_a());
    const auto& cb = conjugacy_classes(f.rank_b());
    Rational sum(0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < cb.size(); ++j) row += f.at(i, j) * g.at(i, j) * cb.sizes[j];
        sum += row * ca.sizes[i];
    }
    return sum / ca.group_order / cb.group_order;
}

namespace {

BnClassLabel fuse(const BnClassLabel& x, const BnClassLabel& y) {
    return {merge_parts(x.positive_cycles, y.positive_cycles),
            merge_parts(x.negative_cycles, y.negative_cycles)};
}

// fusion[i * cols + j] = class of W_{a+b} containing class (i, j) of W_a x W_b.
std::vector<std::size_t> fusion_map(int a, int b) {
    const auto& ca = conjugacy_classes(a);
    const auto& cb = conjugacy_classes(b);
    const auto& cn = conjugacy_classes(a + b);
    std::map<LabelKey, std::size_t> index;
    for (std::size_t k = 0; k < cn.size(); ++k) index.emplace(key_of(cn.labels[k]), k);
    std::vector<std::size_t> out;
    out.reserve(ca.size() * cb.size());
    for (const auto& x : ca.labels)
        for (const auto& y : cb.labels) out.push_back(index.at(key_of(fuse(x, y))));
    return out;
}

}  // namespace

ClassFunction induce_class_function(const ProductClassFunction& f) {
    const int a = f.rank_a();
    const int b = f.rank_b();
    const auto& ca = conjugacy_classes(a);
    const auto& cb = conjugacy_classes(b);
    const auto& cn = conjugacy_classes(a + b);
    const auto fusion = fusion_map(a, b);
    // Ind f(g) = |C_G(g)| * sum over H-classes c inside g^G of f(c) / |C_H(c)|.
    std::vector<Rational> values(cn.size(), Rational(0));
    for (std::size_t i = 0; i < ca.size(); ++i)
        for (std::size_t j = 0; j < cb.size(); ++j) {
            const Rational& v = f.at(i, j);
            if (v.numerator() == 0) continue;
            values[fusion[i * cb.size() + j]] += v / (ca.centralizers[i] * cb.centralizers[j]);
        }
    for (std::size_t k = 0; k < cn.size(); ++k) values[k] *= cn.centralizers[k];
    return ClassFunction(a + b, std::move(values));
}

ProductClassFunction restrict_class_function(const ClassFunction& f, int a) {
    const int b = f.rank() - a;
    if (a < 0 || b < 0) throw ValidationError("restriction to a subgroup of larger rank");
    const auto fusion = fusion_map(a, b);
    ProductClassFunction out(a, b);
    const std::size_t cols = out.cols();
    for (std::size_t idx = 0; idx < fusion.size(); ++idx) out.at(idx / cols, idx % cols) = f[fusion[idx]];
    return out;
}

// ---------------------------------------------------------------------------
// Symmetric group characters

namespace {

// Beta-set recursion: removing a rim hook of length h moves one bead from
// position x to x - h; the sign counts beads strictly in between.
std::int64_t mn_recursive(std::uint64_t beads, std::span<const int> cycles) {
    if (cycles.empty()) return 1;
    const int h = cycles.front();
    const auto rest = cycles.subspan(1);
    std::int64_t total = 0;
    for (int x = h; x < 64; ++x) {
        const std::uint64_t from = std::uint64_t{1} << x;
        const std::uint64_t to = std::uint64_t{1} << (x - h);
        if (!(beads & from) || (beads & to)) continue;
        const std::uint64_t between = beads & (from - 1) & ~((to << 1) - 1);
        const int sign = (std::popcount(between) & 1) ? -1 : 1;
        total += sign * mn_recursive((beads & ~from) | to, rest);
    }
    return total;
}

}  // namespace

std::int64_t sn_character_value(const Partition& label, const Partition& cycle_type) {
    if (label.norm() != cycle_type.norm())
        throw ValidationError("sn_character_value: label and class have different norms");
    if (label.norm() > 31) throw ValidationError("sn_character_value: norm too large");
    const auto len = static_cast<int>(label.length());
    std::uint64_t beads = 0;
    for (int i = 0; i < len; ++i) beads |= std::uint64_t{1} << (label[static_cast<std::size_t>(i)] + len - 1 - i);
    return mn_recursive(beads, cycle_type.parts());
}

// ---------------------------------------------------------------------------
// Linear characters

std::string_view to_string(LinearCharacter which) noexcept {
    switch (which) {
        case LinearCharacter::trivial: return "trivial";
        case LinearCharacter::sign_changes: return "sign_changes";
        case LinearCharacter::permutation_sign: return "permutation_sign";
        case LinearCharacter::coxeter_sign: return "coxeter_sign";
    }
    return "unknown";
}

LinearCharacter parse_linear_character(std::string_view name) {
    for (auto which : {LinearCharacter::trivial, LinearCharacter::sign_changes,
                       LinearCharacter::permutation_sign, LinearCharacter::coxeter_sign})
        if (to_string(which) == name) return which;
    throw ValidationError("unknown linear character '" + std::string(name) + "'");
}

int linear_character_value(LinearCharacter which, const BnClassLabel& label) {
    const auto parity = [](std::size_t k) { return (k % 2) ? -1 : 1; };
    const std::size_t negative = label.negative_cycles.length();
    const std::size_t cycles = label.positive_cycles.length() + negative;
    const int sign_changes = parity(negative);
    const int permutation_sign = parity(static_cast<std::size_t>(label.rank()) - cycles);
    switch (which) {
        case LinearCharacter::trivial: return 1;
        case LinearCharacter::sign_changes: return sign_changes;
        case LinearCharacter::permutation_sign: return permutation_sign;
        case LinearCharacter::coxeter_sign: return sign_changes * permutation_sign;
    }
    return 1;
}

ClassFunction linear_character(int n, LinearCharacter which) {
    const auto& classes = conjugacy_classes(n);
    std::vector<Rational> values;
    values.reserve(classes.size());
    for (const auto& label : classes.labels) values.emplace_back(linear_character_value(which, label));
    return ClassFunction(n, std::move(values));
}

// ---------------------------------------------------------------------------
// Character tables

CharacterTable::CharacterTable(const ClassData& classes, std::vector<Bipartition> labels,
                               std::vector<ClassFunction> characters)
    : classes_(&classes), labels_(std::move(labels)), characters_(std::move(characters)) {}

std::size_t CharacterTable::index_of(const Bipartition& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw ValidationError("label " + label.to_string() + " is not an irreducible of W_" +
                          std::to_string(rank()));
}

const ClassFunction& CharacterTable::character(const Bipartition& label) const {
    return characters_[index_of(label)];
}

std::int64_t CharacterTable::value(std::size_t row, std::size_t col) const {
    return characters_[row][col].numerator();
}

std::int64_t CharacterTable::degree(const Bipartition& label) const {
    return character(label).degree().numerator();
}

namespace {

ClassFunction pulled_back_sn_character(const Partition& label, int n, bool twist_by_sign_changes) {
    const auto& classes = conjugacy_classes(n);
    std::vector<Rational> values;
    values.reserve(classes.size());
    for (const auto& c : classes.labels) {
        std::int64_t v = sn_character_value(label, merge_parts(c.positive_cycles, c.negative_cycles));
        if (twist_by_sign_changes) v *= linear_character_value(LinearCharacter::sign_changes, c);
        values.emplace_back(v);
    }
    return ClassFunction(n, std::move(values));
}

void certify(const CharacterTable& table) {
    const auto& classes = table.classes();
    const std::string where = " in the character table of W_" + std::to_string(table.rank());
    for (std::size_t r = 0; r < table.size(); ++r)
        for (const auto& v : table.character(r).values())
            if (v.denominator() != 1)
                throw InvariantViolation("non-integral character value" + where);
    for (std::size_t r = 0; r < table.size(); ++r)
        for (std::size_t s = r; s < table.size(); ++s) {
            const Rational ip = inner_product(table.character(r), table.character(s));
            if (ip != Rational(r == s ? 1 : 0))
                throw InvariantViolation("row orthogonality fails for " + table.labels()[r].to_string() +
                                         ", " + table.labels()[s].to_string() + where);
        }
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t d = c; d < classes.size(); ++d) {
            std::int64_t sum = 0;
            for (std::size_t r = 0; r < table.size(); ++r) sum += table.value(r, c) * table.value(r, d);
            if (sum != (c == d ? classes.centralizers[c] : 0))
                throw InvariantViolation("column orthogonality fails for classes " +
                                         classes.labels[c].to_string() + ", " +
                                         classes.labels[d].to_string() + where);
        }
}

}  // namespace

CharacterTable build_character_table(int n) {
    const auto& classes = conjugacy_classes(n);
    auto labels = bipartitions_of(n);
    std::vector<ClassFunction> characters;
    characters.reserve(labels.size());
    for (const auto& label : labels) {
        const int a = label.first.norm();
        const int b = label.second.norm();
        const auto factor = outer_product(pulled_back_sn_character(label.first, a, false),
                                          pulled_back_sn_character(label.second, b, true));
        characters.push_back(induce_class_function(factor));
    }
    CharacterTable table(classes, std::move(labels), std::move(characters));
    certify(table);
    return table;
}

const CharacterTable& character_table(int n) {
    check_rank(n);
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CharacterTable>(build_character_table(n));
    return *slot;
}

Multiplicities decompose(const ClassFunction& f) {
    const auto& table = character_table(f.rank());
    Multiplicities out;
    ClassFunction reconstruction = ClassFunction::zero(f.rank());
    for (std::size_t r = 0; r < table.size(); ++r) {
        const Rational ip = inner_product(f, table.character(r));
        if (ip.denominator() != 1)
            throw ValidationError("decompose: <f, " + table.labels()[r].to_string() +
                                  "> is not an integer; input is not a virtual character");
        if (ip.numerator() == 0) continue;
        out.emplace_back(table.labels()[r], ip.numerator());
        reconstruction += table.character(r) * ip;
    }
    if (reconstruction != f)
        throw InvariantViolation("decompose: reconstruction differs from the input");
    return out;
}

std::vector<std::pair<Bipartition, Bipartition>> tensor_label_map(int n, LinearCharacter which) {
    const auto& table = character_table(n);
    const auto twist = linear_character(n, which);
    std::vector<std::pair<Bipartition, Bipartition>> out;
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto parts = decompose(table.character(r) * twist);
        if (parts.size() != 1 || parts.front().second != 1)
            throw InvariantViolation("tensoring " + table.labels()[r].to_string() +
                                     " with a linear character is not irreducible");
        out.emplace_back(table.labels()[r], parts.front().first);
    }
    return out;
}

Bipartition twist_label(const Bipartition& label, LinearCharacter which) {
    switch (which) {
        case LinearCharacter::trivial: return label;
        case LinearCharacter::sign_changes: return {label.second, label.first};
        case LinearCharacter::permutation_sign: return {conjugate(label.first), conjugate(label.second)};
        case LinearCharacter::coxeter_sign: return {conjugate(label.second), conjugate(label.first)};
    }
    return label;
}

}  // namespace howe
