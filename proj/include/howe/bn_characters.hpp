#pragma once

// Exact character theory of the hyperoctahedral groups W_n (signed permutations
// of n letters). Everything here is computed from first principles: class sizes
// by enumerating the group, irreducibles by inducing from W_a x W_b. This is the
// reference against which the combinatorial formulas are checked.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "howe/partition.hpp"

namespace howe {

using Rational = boost::rational<std::int64_t>;

inline constexpr int kDefaultOracleBound = 6;
// Hard ceiling for the enumeration kernel (8! * 2^8 elements).
inline constexpr int kMaxEnumerableRank = 8;

int oracle_rank_bound() noexcept;
/// Throws ValidationError outside [0, kMaxEnumerableRank].
void set_oracle_rank_bound(int bound);

/// Conjugacy class of a signed permutation: cycle types of the cycles whose
/// sign product is +1 and -1 respectively.
struct BnClassLabel {
    Partition positive_cycles;
    Partition negative_cycles;

    [[nodiscard]] int rank() const noexcept {
        return positive_cycles.norm() + negative_cycles.norm();
    }
    bool operator==(const BnClassLabel&) const = default;
    [[nodiscard]] std::string to_string() const;
};

std::int64_t hyperoctahedral_order(int n);

/// Order of the centralizer of an element of the given class:
/// prod_i (2i)^{a_i} a_i! (2i)^{b_i} b_i! with a_i, b_i the multiplicities of i.
std::int64_t centralizer_order(const BnClassLabel& label);

/// Conjugacy classes of W_n in canonical (bipartition) order.
struct ClassData {
    int rank = 0;
    std::vector<BnClassLabel> labels;
    std::vector<std::int64_t> sizes;
    std::vector<std::int64_t> centralizers;
    std::int64_t group_order = 1;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
    /// Throws ValidationError for a label of the wrong rank.
    [[nodiscard]] std::size_t index_of(const BnClassLabel& label) const;
};

// Enumeration kernels: class sizes of W_n, in canonical label order, obtained by
// walking all 2^n n! signed permutations.
std::vector<std::int64_t> enumerate_class_sizes_serial(int n);
std::vector<std::int64_t> enumerate_class_sizes_parallel(int n);

/// Cached, self-validated class data: enumerated sizes must equal
/// |W_n| / centralizer_order for every class.
const ClassData& conjugacy_classes(int n);

/// A rational-valued class function on W_n, indexed by canonical class index.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(int rank, std::vector<Rational> values);
    static ClassFunction zero(int rank);
    static ClassFunction constant(int rank, Rational value);

    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return values_[i]; }
    [[nodiscard]] const Rational& at(const BnClassLabel& label) const;
    [[nodiscard]] Rational degree() const;  // value at the identity class
    [[nodiscard]] bool is_zero() const;

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    ClassFunction& operator*=(const Rational& scalar);
    bool operator==(const ClassFunction&) const = default;

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
    /// Pointwise product (tensor product of characters).
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

private:
    int rank_ = 0;
    std::vector<Rational> values_;
};

/// Class function on W_a x W_b, row-major over (class of W_a, class of W_b).
class ProductClassFunction {
public:
    ProductClassFunction(int rank_a, int rank_b);
    ProductClassFunction(int rank_a, int rank_b, std::vector<Rational> values);

    [[nodiscard]] int rank_a() const noexcept { return rank_a_; }
    [[nodiscard]] int rank_b() const noexcept { return rank_b_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] Rational& at(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
    [[nodiscard]] const Rational& at(std::size_t i, std::size_t j) const {
        return values_[i * cols_ + j];
    }
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }

    ProductClassFunction& operator+=(const ProductClassFunction& other);
    bool operator==(const ProductClassFunction&) const = default;

private:
    int rank_a_;
    int rank_b_;
    std::size_t cols_;
    std::vector<Rational> values_;
};

/// f(x) g(y) on W_a x W_b.
ProductClassFunction outer_product(const ClassFunction& f, const ClassFunction& g);

/// Class-size-weighted inner product (1/|G|) sum_g f(g) g(g). Values are real
/// so no conjugation is needed.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);
Rational inner_product(const ProductClassFunction& f, const ProductClassFunction& g);

/// Induction from W_a x W_b to W_{a+b} through class fusion
/// (concatenate positive cycle types, concatenate negative cycle types).
ClassFunction induce_class_function(const ProductClassFunction& f);

/// Restriction of a class function on W_n to W_a x W_{n-a}.
ProductClassFunction restrict_class_function(const ClassFunction& f, int a);

/// Irreducible character of the symmetric group by the Murnaghan-Nakayama rule.
std::int64_t sn_character_value(const Partition& label, const Partition& cycle_type);

enum class LinearCharacter { trivial, sign_changes, permutation_sign, coxeter_sign };

std::string_view to_string(LinearCharacter which) noexcept;
/// Accepts the names printed by to_string; throws ValidationError otherwise.
LinearCharacter parse_linear_character(std::string_view name);

/// Value of a linear character on a class, computed from the label.
int linear_character_value(LinearCharacter which, const BnClassLabel& label);
ClassFunction linear_character(int n, LinearCharacter which);

/// Irreducible characters of W_n. Rows are bipartitions in canonical order, columns
/// are classes in canonical order. Character (a,b) is the induction from
/// W_|a| x W_|b| of chi_a (pulled back through W -> S) times chi_b twisted by the
/// sign-change character.
class CharacterTable {
public:
    CharacterTable(const ClassData& classes, std::vector<Bipartition> labels,
                   std::vector<ClassFunction> characters);

    [[nodiscard]] int rank() const noexcept { return classes_->rank; }
    [[nodiscard]] const ClassData& classes() const noexcept { return *classes_; }
    [[nodiscard]] const std::vector<Bipartition>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t index_of(const Bipartition& label) const;
    [[nodiscard]] const ClassFunction& character(std::size_t row) const { return characters_[row]; }
    [[nodiscard]] const ClassFunction& character(const Bipartition& label) const;
    [[nodiscard]] std::int64_t value(std::size_t row, std::size_t col) const;
    [[nodiscard]] std::int64_t degree(const Bipartition& label) const;

private:
    const ClassData* classes_;
    std::vector<Bipartition> labels_;
    std::vector<ClassFunction> characters_;
};

/// Builds and certifies the table: integral values, row and column orthogonality.
/// Throws InvariantViolation if certification fails.
CharacterTable build_character_table(int n);

/// Cached certified table.
const CharacterTable& character_table(int n);

using Multiplicities = std::vector<std::pair<Bipartition, std::int64_t>>;

/// Nonzero multiplicities <f, chi> in canonical order. Throws ValidationError if
/// some inner product is not an integer, InvariantViolation if the reconstruction
/// differs from f.
Multiplicities decompose(const ClassFunction& f);

/// Label permutation induced by tensoring with a linear character, computed by
/// tensoring and decomposing. Indexed like bipartitions_of(n).
std::vector<std::pair<Bipartition, Bipartition>> tensor_label_map(int n, LinearCharacter which);

/// Closed form of the same permutation:
/// sign_changes (a,b)->(b,a); permutation_sign (a,b)->(a',b'); coxeter_sign (a,b)->(b',a').
Bipartition twist_label(const Bipartition& label, LinearCharacter which);

}  // namespace howe
