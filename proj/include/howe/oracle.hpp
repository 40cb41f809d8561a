#pragma once

// Character-side evaluation of the Weyl group formulas: builds the induced
// class functions explicitly and decomposes them by inner products. Shares no
// code with the Pieri-rule path in howe_unipotent beyond the label types.

#include <cstdint>
#include <vector>

#include "howe/bn_characters.hpp"
#include "howe/howe_unipotent.hpp"

namespace howe::oracle {

/// Ind_{W_l x W_extra}^{W_{l+extra}} (chi (x) which) as an explicit class function.
ClassFunction induced_character(const Bipartition& chi, int extra, LinearCharacter which);

/// The character of Omega on W_r x W_r': the double sum with every induction and
/// the twist "sgn chi" evaluated pointwise on classes.
ProductClassFunction omega_character(int r, int r_prime, OmegaFormula formula, LinearCharacter sgn);

/// Dense matrix <Omega, chi_i (x) chi'_j> over Irr(W_r) x Irr(W_r') in canonical order.
using DenseMultiplicities = std::vector<std::vector<std::int64_t>>;
DenseMultiplicities omega_multiplicities(const ProductClassFunction& omega);
DenseMultiplicities omega_multiplicities_serial(const ProductClassFunction& omega);

/// omega_character followed by omega_multiplicities for the data of a table.
DenseMultiplicities omega_multiplicities(const MultiplicityTable& shape);

}  // namespace howe::oracle
