#pragma once

// Property checks run by `howe verify` and the acceptance suite. Each check
// catches its own exceptions and reports them as a failure with a witness.

#include <random>
#include <string>
#include <vector>

#include "howe/howe_unipotent.hpp"
#include "howe/lusztig_reduction.hpp"

namespace howe::verify {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

PropertyResult check_class_sizes(int max_rank);
PropertyResult check_character_tables(int max_rank);
PropertyResult check_partition_invariants(int max_norm);
PropertyResult check_twist_closed_forms(int max_rank);

/// Pieri expansion of Ind(chi (x) 1) and Ind(chi (x) sgn) against explicit
/// induction, for all 0 <= l <= r <= max_rank.
PropertyResult check_pieri_induction(int max_rank, LinearCharacter sgn);

/// Combinatorial tables against the oracle, entrywise, plus the degree identity.
/// Covers k <= max_k, both partner parities, r, r' <= max_r.
PropertyResult check_omega_oracle(int max_r, int max_k, const HoweOptions& options = {});

/// Tables are empty exactly when m' < m(k').
PropertyResult check_first_occurrence_zero(int max_r, int max_k, const HoweOptions& options = {});

/// Every row nonempty for m' >= m(k'). With `stable_range_only`, only for r' >= r.
PropertyResult check_rows_nonempty(int max_r, int max_k, bool stable_range_only, const HoweOptions& options = {});

/// Unique min and max of every nonempty image set under options.order.
PropertyResult check_extremal(int max_r, int max_k, const HoweOptions& options = {});

/// Random semisimple descriptor over q with dimension at most max_dim (at least 1).
SemisimpleDescriptor random_semisimple(std::mt19937_64& rng, int q, int max_dim);

/// Rank conservation, unitary +-1 orbits, and matching # factors after match_semisimple.
PropertyResult check_centralizer_random(int count, std::uint64_t seed);

/// omega_full with trivial s serializes identically to omega_unipotent.
PropertyResult check_reduction_consistency(int max_r, int max_k, const HoweOptions& options = {});

/// Pointwise membership (in_theta) agrees with the enumerated set (theta_full)
/// for semisimple classes with l <= 1 and reduced Witt indices <= max_block.
PropertyResult check_membership(int max_block, const HoweOptions& options = {});

/// Grow-then-shrink round trips, the underflow error, verbatim GL blocks.
PropertyResult check_transport_laws(const HoweOptions& options = {});

std::vector<PropertyResult> run_verification(int max_rank, const HoweOptions& options = {});

}  // namespace howe::verify
