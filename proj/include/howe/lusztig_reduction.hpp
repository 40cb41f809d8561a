#pragma once

// Reduction of the correspondence on an arbitrary Lusztig series to the
// unipotent case: semisimple class data, centralizer bookkeeping, transport of
// cuspidal supports, and the Weyl group level decomposition of Omega_{m,m',rho}.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "howe/howe_unipotent.hpp"

namespace howe {

/// q^{2d} - 1: eigenvalues of degree dividing 2d are powers of a generator of
/// the multiplicative group of that order.
std::int64_t exponent_modulus(int q, int degree);

/// Orbit of an eigenvalue g^e under the twisted Frobenius e -> -q e (mod modulus).
struct EigenvalueOrbit {
    std::vector<std::int64_t> exponents;  // sorted
    std::int64_t modulus = 1;
    int multiplicity = 1;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(exponents.size()); }
    [[nodiscard]] bool is_one() const noexcept { return exponents.size() == 1 && exponents[0] == 0; }
    [[nodiscard]] bool is_minus_one() const noexcept {
        return exponents.size() == 1 && modulus % 2 == 0 && exponents[0] == modulus / 2;
    }
    [[nodiscard]] int rank() const noexcept { return size() * multiplicity; }
    bool operator==(const EigenvalueOrbit&) const = default;
};

/// Closure of `exponent` modulo q^{2 degree} - 1. A missing exponent stands for
/// the eigenvalue 0 and is rejected.
EigenvalueOrbit orbit_closure(int q, int degree, std::optional<std::int64_t> exponent, int multiplicity = 1);

/// Same, with the modulus given directly.
EigenvalueOrbit orbit_closure_mod(int q, std::int64_t modulus, std::optional<std::int64_t> exponent,
                                  int multiplicity = 1);

/// Rational semisimple class as a multiset of Frobenius orbits of eigenvalues.
struct SemisimpleDescriptor {
    int q = 3;
    std::int64_t modulus = 8;
    std::vector<EigenvalueOrbit> orbits;

    /// Sum of size * multiplicity over the orbits.
    [[nodiscard]] int dimension() const noexcept;
    /// Multiplicity of the eigenvalue 1 (0 when absent).
    [[nodiscard]] int one_multiplicity() const noexcept;
    /// Orbits closed, pairwise disjoint, positive multiplicities, common modulus.
    void validate() const;
    bool operator==(const SemisimpleDescriptor&) const = default;

    static SemisimpleDescriptor trivial(int q, int dimension, std::int64_t modulus);
};

enum class FactorKind { linear, unitary };
std::string_view to_string(FactorKind kind) noexcept;

/// GL_size or U_size over the field extension of degree field_degree.
struct CentralizerFactor {
    FactorKind kind = FactorKind::unitary;
    int size = 0;
    int field_degree = 1;

    [[nodiscard]] int rank() const noexcept { return size * field_degree; }
    [[nodiscard]] std::string to_string() const;
    bool operator==(const CentralizerFactor&) const = default;
};

/// Orbits of odd size give unitary factors, orbits of even size linear ones.
FactorKind classify_orbit(const EigenvalueOrbit& orbit);

struct CentralizerDecomposition {
    std::vector<CentralizerFactor> factors;  // one per orbit other than {1}, in orbit order
    TowerContext unipotent_block;            // the unitary group on the 1-eigenspace
    int reduction_l = 0;                     // m minus the Witt index of that block
};

CentralizerDecomposition centralizer_decomposition(const SemisimpleDescriptor& s, const TowerContext& ctx);

/// The element of the partner group with the same orbits away from 1, padded
/// with eigenvalue 1 to the partner dimension.
SemisimpleDescriptor match_semisimple(const SemisimpleDescriptor& s, const TowerContext& ctx,
                                      const TowerContext& ctx_prime);

// ---------------------------------------------------------------------------
// Cuspidal supports

/// A cuspidal representation of GL_size, identified only by an opaque label.
/// The label "1" (with size 1) is the trivial representation of GL_1.
struct GlCuspidal {
    int size = 1;
    std::string label = "1";

    [[nodiscard]] bool is_trivial() const noexcept { return size == 1 && label == "1"; }
    bool operator==(const GlCuspidal&) const = default;
};

GlCuspidal trivial_gl1();

/// The cuspidal representation phi of the classical factor G_{m-|t|}, with the
/// data its Howe correspondent needs. For unipotent phi = lambda_k only `k` is
/// set; otherwise the partner label and its first occurrence are supplied.
struct CuspidalBase {
    std::optional<int> k;
    std::string label;
    int witt_index = 0;
    std::string partner_label;
    int partner_witt_index = 0;

    static CuspidalBase unipotent(int k);
    bool operator==(const CuspidalBase&) const = default;
};

struct CuspidalSupport {
    std::vector<GlCuspidal> gl_part;
    CuspidalBase base;

    [[nodiscard]] int gl_rank() const noexcept;
    [[nodiscard]] int trivial_count() const noexcept;
    bool operator==(const CuspidalSupport&) const = default;
};

/// Cuspidal support of the correspondents, or nullopt when m' is below the first
/// occurrence of phi. Trivial GL_1 entries are appended or removed so that the
/// partner Levi has rank m' - l'; the GL block otherwise moves unchanged.
std::optional<CuspidalSupport> transport_support(const CuspidalSupport& support, const TowerContext& ctx,
                                                 const TowerContext& ctx_prime,
                                                 const HoweOptions& options = {});

/// Cuspidal pair of G_m in Lusztig coordinates: the GL block, the cuspidal
/// unipotent index k of the unipotent part, and the semisimple class (trivial
/// when absent).
struct CuspidalPair {
    std::vector<GlCuspidal> gl_part;
    int base_k = 0;
    std::optional<SemisimpleDescriptor> semisimple;

    [[nodiscard]] int torus_rank() const noexcept;
    [[nodiscard]] int gl_rank() const noexcept;
    bool operator==(const CuspidalPair&) const = default;
};

/// The unipotent cuspidal pair (G_{m(k)} x T_{m-m(k)}, lambda_k (x) 1).
CuspidalPair unipotent_cuspidal_pair(int k, const TowerContext& ctx);

std::optional<CuspidalPair> transport_series(const CuspidalPair& pair, const TowerContext& ctx,
                                             const TowerContext& ctx_prime, const HoweOptions& options = {});

struct RelativeWeylGroup {
    std::vector<CentralizerFactor> hash_factors;  // describes W_{G_#(s)}(rho_#)
    int b_rank = 0;                               // the W_r factor
};

RelativeWeylGroup weyl_of_cuspidal_pair(const CuspidalPair& pair, const TowerContext& ctx);

/// Omega_{m,m',rho} = (regular pairing on the # part) (x) Omega_{m-l, m'-l', k}.
struct FullDecomposition {
    std::vector<CentralizerFactor> hash_factors;
    std::string pairing = "diagonal";
    int reduction_l = 0;
    int reduction_l_prime = 0;
    MultiplicityTable unipotent_table;
};

/// nullopt when the series has no correspondent (below first occurrence).
std::optional<FullDecomposition> omega_full(const CuspidalPair& pair, const TowerContext& ctx,
                                            const TowerContext& ctx_prime, const HoweOptions& options = {});

// ---------------------------------------------------------------------------
// Lusztig coordinates

/// Unipotent label on one factor: a partition of the size for GL factors, a
/// series label (k, bipartition) for unitary factors.
using UnipotentLabel = std::variant<Partition, SeriesLabel>;

std::string to_string(const UnipotentLabel& label);

/// All unipotent labels of a factor, in canonical order.
std::vector<UnipotentLabel> unipotent_labels(const CentralizerFactor& factor);

/// An irreducible in the Lusztig series of s: one unipotent label per orbit of s,
/// in orbit order (the orbit {1} carries a SeriesLabel for the block U_{nu_1}).
struct RepresentationLabel {
    SemisimpleDescriptor s;
    std::vector<UnipotentLabel> orbit_labels;
    bool operator==(const RepresentationLabel&) const = default;
};

/// Xi: splits off the label on the eigenvalue-1 block.
struct LusztigCoordinates {
    std::vector<UnipotentLabel> hash_part_label;
    SeriesLabel unipotent_part;
    int reduction_l = 0;
    bool operator==(const LusztigCoordinates&) const = default;
};

LusztigCoordinates lusztig_coordinates(const RepresentationLabel& pi, const TowerContext& ctx);
RepresentationLabel from_lusztig_coordinates(const LusztigCoordinates& coords, const SemisimpleDescriptor& s,
                                             const TowerContext& ctx);

/// Every representation label of the Lusztig series of s.
std::vector<RepresentationLabel> series_representations(const SemisimpleDescriptor& s, const TowerContext& ctx);

/// pi' in Theta(pi), decided pointwise: matching semisimple parts, equal # labels,
/// and a nonzero entry of the reduced unipotent table.
bool in_theta(const RepresentationLabel& pi, const RepresentationLabel& pi_prime, const TowerContext& ctx,
              const TowerContext& ctx_prime, const HoweOptions& options = {});

/// Theta(pi) enumerated from the images of the unipotent part.
std::vector<RepresentationLabel> theta_full(const RepresentationLabel& pi, const TowerContext& ctx,
                                            const TowerContext& ctx_prime, const HoweOptions& options = {});

/// Extremal elements of Theta(pi), ordered through the unipotent parts.
std::pair<RepresentationLabel, RepresentationLabel> extremal_full(const RepresentationLabel& pi,
                                                                  const TowerContext& ctx,
                                                                  const TowerContext& ctx_prime,
                                                                  const HoweOptions& options = {});

}  // namespace howe
