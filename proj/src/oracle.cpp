#include "howe/oracle.hpp"

#include <algorithm>

#include "howe/errors.hpp"

namespace howe::oracle {

namespace {

ClassFunction integral_or_throw(ClassFunction f) {
    for (const auto& v : f.values())
        if (v.denominator() != 1) throw InvariantViolation("induced character has a non-integral value");
    return f;
}

std::vector<std::vector<std::int64_t>> integer_values(const ProductClassFunction& omega) {
    const auto rows = conjugacy_classes(omega.rank_a()).size();
    std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(omega.cols()));
    for (std::size_t c = 0; c < rows; ++c)
        for (std::size_t d = 0; d < omega.cols(); ++d) {
            const auto& v = omega.at(c, d);
            if (v.denominator() != 1) throw InvariantViolation("Omega has a non-integral value");
            out[c][d] = v.numerator();
        }
    return out;
}

// Row i of the multiplicity matrix: sum_{c,d} |c||d| Omega(c,d) chi_i(c) chi'_j(d) / (|W_r||W_r'|).
void multiplicity_row(std::size_t i, const CharacterTable& left, const CharacterTable& right,
                      const std::vector<std::vector<std::int64_t>>& weighted,
                      std::vector<std::int64_t>& out) {
    const auto& ca = left.classes();
    const auto& cb = right.classes();
    const __int128 order = static_cast<__int128>(ca.group_order) * cb.group_order;
    for (std::size_t j = 0; j < right.size(); ++j) {
        __int128 sum = 0;
        for (std::size_t c = 0; c < ca.size(); ++c) {
            __int128 inner = 0;
            for (std::size_t d = 0; d < cb.size(); ++d) inner += static_cast<__int128>(weighted[c][d]) * right.value(j, d);
            sum += inner * ca.sizes[c] * left.value(i, c);
        }
        if (sum % order != 0) throw InvariantViolation("Omega is not a virtual character");
        out[j] = static_cast<std::int64_t>(sum / order);
    }
}

std::vector<std::vector<std::int64_t>> size_weighted(const ProductClassFunction& omega) {
    auto values = integer_values(omega);
    const auto& cb = conjugacy_classes(omega.rank_b());
    for (auto& row : values)
        for (std::size_t d = 0; d < row.size(); ++d) row[d] *= cb.sizes[d];
    return values;
}

}  // namespace

ClassFunction induced_character(const Bipartition& chi, int extra, LinearCharacter which) {
    const auto& chi_values = character_table(chi.norm()).character(chi);
    return integral_or_throw(induce_class_function(outer_product(chi_values, linear_character(extra, which))));
}

ProductClassFunction omega_character(int r, int r_prime, OmegaFormula formula, LinearCharacter sgn) {
    ProductClassFunction omega(r, r_prime);
    const LinearCharacter left_twist = formula == OmegaFormula::u1 ? LinearCharacter::trivial : sgn;
    for (int l = 0; l <= std::min(r, r_prime); ++l) {
        const auto& table = character_table(l);
        const auto sgn_l = linear_character(l, sgn);
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& chi = table.character(i);
            const auto left = induce_class_function(outer_product(chi, linear_character(r - l, left_twist)));
            const auto right = induce_class_function(
                outer_product(chi * sgn_l, linear_character(r_prime - l, LinearCharacter::trivial)));
            omega += outer_product(left, right);
        }
    }
    return omega;
}

DenseMultiplicities omega_multiplicities_serial(const ProductClassFunction& omega) {
    const auto& left = character_table(omega.rank_a());
    const auto& right = character_table(omega.rank_b());
    const auto weighted = size_weighted(omega);
    DenseMultiplicities out(left.size(), std::vector<std::int64_t>(right.size(), 0));
    for (std::size_t i = 0; i < left.size(); ++i) multiplicity_row(i, left, right, weighted, out[i]);
    return out;
}

DenseMultiplicities omega_multiplicities(const ProductClassFunction& omega) {
    const auto& left = character_table(omega.rank_a());
    const auto& right = character_table(omega.rank_b());
    const auto weighted = size_weighted(omega);
    DenseMultiplicities out(left.size(), std::vector<std::int64_t>(right.size(), 0));
    const auto rows = static_cast<std::int64_t>(left.size());
#pragma omp parallel for schedule(static) default(none) shared(left, right, weighted, out, rows)
    for (std::int64_t i = 0; i < rows; ++i)
        multiplicity_row(static_cast<std::size_t>(i), left, right, weighted, out[static_cast<std::size_t>(i)]);
    return out;
}

DenseMultiplicities omega_multiplicities(const MultiplicityTable& shape) {
    if (shape.r_prime < 0) return DenseMultiplicities(shape.row_labels.size());
    return omega_multiplicities(omega_character(shape.r, shape.r_prime, shape.formula, shape.sgn));
}

}  // namespace howe::oracle
