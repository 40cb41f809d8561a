#pragma once

// Howe correspondence between unipotent Harish-Chandra series of a unitary dual
// pair, at the level of the relative Weyl groups W_r x W_r'.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "howe/bn_characters.hpp"
#include "howe/errors.hpp"
#include "howe/partition.hpp"

namespace howe {

/// One member of a unipotent series: the cuspidal unipotent lambda_k of
/// U_{k(k+1)/2} and an irreducible of the relative Weyl group W_r.
struct SeriesLabel {
    int k = 0;
    Bipartition char_label;

    bool operator==(const SeriesLabel&) const = default;
    [[nodiscard]] std::string to_string() const;
};

/// A unitary group in one of the two Witt towers: dimension 2 * witt_index + dim_parity.
struct TowerContext {
    int q = 3;
    int dim_parity = 0;
    int witt_index = 0;

    [[nodiscard]] int dimension() const noexcept { return 2 * witt_index + dim_parity; }
    /// q odd and at least 3, parity in {0, 1}, nonnegative Witt index.
    void validate() const;
    bool operator==(const TowerContext&) const = default;
};

/// k(k+1)/2, the dimension of the unitary group carrying lambda_k.
int triangular(int k);

/// floor(k(k+1)/4).
int witt_index_of_cuspidal(int k);

/// Maps (k, parity of the target tower) to the partner cuspidal index.
using CuspidalThetaRule = std::function<int(int k, int target_parity)>;

/// For k >= 1 the unique k' in {k-1, k+1} with k'(k'+1)/2 of the target parity;
/// for k = 0 the result is 0 (even target) or 1 (odd target).
int default_theta_cuspidal(int k, int target_parity);

/// Partial order on images; returns a <= b.
using ImageOrder = std::function<bool(const SeriesLabel& a, const SeriesLabel& b)>;

/// Bipartition dominance on the character labels (padded concatenation).
/// Labels with different cuspidal index are incomparable.
bool default_image_order(const SeriesLabel& a, const SeriesLabel& b);

/// Pluggable conventions. `sgn` is the linear character meant by "sgn" in the
/// Weyl group formulas.
struct HoweOptions {
    LinearCharacter sgn = LinearCharacter::coxeter_sign;
    CuspidalThetaRule theta = default_theta_cuspidal;
    ImageOrder order = default_image_order;
};

int theta_cuspidal(int k, int target_parity, const HoweOptions& options = {});

enum class OmegaFormula { u1, u2 };

/// u1 when k is odd or k = k' = 0, u2 otherwise.
OmegaFormula formula_for(int k, int k_prime);
std::string_view to_string(OmegaFormula f) noexcept;

/// Irreducible constituents of Ind_{W_l x W_extra}^{W_{l+extra}} (chi (x) which), by the
/// Pieri rules. Every constituent has multiplicity one. Canonical order.
std::vector<Bipartition> pieri_induce(const Bipartition& chi, int extra, LinearCharacter which);

/// Decomposition of Omega_{m,m',k} over Irr(W_r) x Irr(W_r').
struct MultiplicityTable {
    int m = 0;
    int m_prime = 0;
    int k = 0;
    int k_prime = 0;
    int r = 0;
    int r_prime = 0;  // negative below first occurrence
    OmegaFormula formula = OmegaFormula::u1;
    LinearCharacter sgn = LinearCharacter::coxeter_sign;
    std::vector<Bipartition> row_labels;
    std::vector<Bipartition> col_labels;
    /// (row, col) -> positive multiplicity.
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> entries;

    [[nodiscard]] bool empty() const noexcept { return entries.empty(); }
    [[nodiscard]] std::int64_t at(std::size_t row, std::size_t col) const;
    bool operator==(const MultiplicityTable&) const = default;
};

/// Builds the table from the Pieri expansion of the formulas; parallel over
/// the summation terms. Empty (no columns) when m' < m(k').
MultiplicityTable omega_unipotent(const TowerContext& ctx, const TowerContext& ctx_prime, int k,
                                  const HoweOptions& options = {});

/// Single-threaded reference for omega_unipotent.
MultiplicityTable omega_unipotent_serial(const TowerContext& ctx, const TowerContext& ctx_prime, int k,
                                         const HoweOptions& options = {});

/// Validates that `pi` is a member of a unipotent series of the group `ctx`.
void validate_series_label(const SeriesLabel& pi, const TowerContext& ctx);

/// All unipotent series labels of the group (every admissible k, every bipartition).
std::vector<SeriesLabel> unipotent_series_labels(const TowerContext& ctx);

using Images = std::vector<std::pair<SeriesLabel, std::int64_t>>;

/// Row of the table indexed by pi: images with positive multiplicity, column order.
Images theta_images(const SeriesLabel& pi, const TowerContext& ctx, const TowerContext& ctx_prime,
                    const HoweOptions& options = {});

struct Extremes {
    SeriesLabel min;
    SeriesLabel max;
};

/// Raised when the configured order has no unique minimum or maximum on an image set.
class NoUniqueExtremeError : public InvariantViolation {
public:
    NoUniqueExtremeError(const std::string& what, std::vector<SeriesLabel> witness)
        : InvariantViolation(what), witness_(std::move(witness)) {}
    [[nodiscard]] const std::vector<SeriesLabel>& witness() const noexcept { return witness_; }

private:
    std::vector<SeriesLabel> witness_;
};

/// Unique minimum and maximum of a set under an order. Throws ValidationError on
/// an empty set, NoUniqueExtremeError with the minimal (or maximal) elements otherwise.
Extremes extremes_of(const std::vector<SeriesLabel>& elements, const ImageOrder& order);

Extremes extremal_images(const SeriesLabel& pi, const TowerContext& ctx, const TowerContext& ctx_prime,
                         const HoweOptions& options = {});

}  // namespace howe
