#include "howe/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "howe/json_io.hpp"
#include "howe/oracle.hpp"

namespace howe::verify {

namespace {

// Runs `body`; it returns an empty string on success or a witness on failure.
PropertyResult run_check(std::string name, const std::function<std::string()>& body) {
    PropertyResult result{std::move(name), false, {}};
    try {
        result.detail = body();
        result.passed = result.detail.empty();
    } catch (const std::exception& e) {
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

struct OmegaCase {
    int k;
    int k_prime;
    TowerContext ctx;
    TowerContext ctx_prime;
};

std::string describe(const OmegaCase& c) {
    std::ostringstream os;
    os << "(m=" << c.ctx.witt_index << ", m'=" << c.ctx_prime.witt_index << ", k=" << c.k << ", k'=" << c.k_prime
       << ", parity'=" << c.ctx_prime.dim_parity << ")";
    return os.str();
}

// All (k, partner parity, r, r') with k <= max_k and r in [0, max_r], r' in [r_prime_lo, max_r].
// Cases with m' < 0 are skipped.
std::vector<OmegaCase> omega_cases(int max_r, int max_k, int r_prime_lo, const HoweOptions& options) {
    std::vector<OmegaCase> out;
    for (int k = 0; k <= max_k; ++k)
        for (int parity_prime = 0; parity_prime <= 1; ++parity_prime) {
            const int k_prime = theta_cuspidal(k, parity_prime, options);
            for (int r = 0; r <= max_r; ++r)
                for (int r_prime = r_prime_lo; r_prime <= max_r; ++r_prime) {
                    const int m_prime = witt_index_of_cuspidal(k_prime) + r_prime;
                    if (m_prime < 0) continue;
                    out.push_back({k, k_prime, {3, triangular(k) % 2, witt_index_of_cuspidal(k) + r},
                                   {3, parity_prime, m_prime}});
                }
        }
    return out;
}

std::string labels_to_string(const std::vector<Bipartition>& labels) {
    std::string s = "{";
    for (const auto& b : labels) s += " " + b.to_string();
    return s + " }";
}

}  // namespace

PropertyResult check_class_sizes(int max_rank) {
    return run_check("class sizes: enumeration (serial and parallel) = |W_n| / centralizer order", [=] {
        for (int n = 0; n <= max_rank; ++n) {
            const auto& classes = conjugacy_classes(n);  // self-validating
            if (enumerate_class_sizes_serial(n) != classes.sizes)
                return "serial and parallel enumeration differ at n=" + std::to_string(n);
            std::int64_t total = 0;
            for (auto s : classes.sizes) total += s;
            if (total != hyperoctahedral_order(n)) return "sizes do not sum to 2^n n! at n=" + std::to_string(n);
            if (classes.size() != bipartitions_of(n).size())
                return "class count differs from bipartition count at n=" + std::to_string(n);
        }
        return std::string();
    });
}

PropertyResult check_character_tables(int max_rank) {
    return run_check("character tables: integral, row and column orthogonal", [=] {
        for (int n = 0; n <= max_rank; ++n) {
            const auto table = build_character_table(n);  // certifies or throws
            const auto& classes = table.classes();
            for (std::size_t r = 0; r < table.size(); ++r)
                for (std::size_t s = 0; s < table.size(); ++s) {
                    std::int64_t sum = 0;
                    for (std::size_t c = 0; c < classes.size(); ++c)
                        sum += classes.sizes[c] * table.value(r, c) * table.value(s, c);
                    if (sum != (r == s ? classes.group_order : 0))
                        return "row orthogonality fails at n=" + std::to_string(n);
                }
        }
        return std::string();
    });
}

PropertyResult check_partition_invariants(int max_norm) {
    return run_check("partitions: counts, conjugation involution, strip duality", [=] {
        for (int n = 0; n <= max_norm; ++n) {
            const auto parts = partitions_of(n);
            if (static_cast<long long>(parts.size()) != partition_count(n))
                return "partition count mismatch at n=" + std::to_string(n);
            for (const auto& p : parts) {
                if (conjugate(conjugate(p)) != p) return "conjugation is not an involution on " + p.to_string();
                for (int s = 0; s + n <= max_norm; ++s) {
                    auto dual = horizontal_strip_additions(conjugate(p), s);
                    for (auto& x : dual) x = conjugate(x);
                    std::sort(dual.begin(), dual.end(), std::greater<>());
                    if (dual != vertical_strip_additions(p, s))
                        return "strip duality fails for " + p.to_string() + " + " + std::to_string(s);
                }
            }
        }
        return std::string();
    });
}

PropertyResult check_twist_closed_forms(int max_rank) {
    return run_check("linear-character twists: oracle map = closed form, involutive", [=] {
        for (int n = 0; n <= max_rank; ++n)
            for (auto which : {LinearCharacter::trivial, LinearCharacter::sign_changes,
                               LinearCharacter::permutation_sign, LinearCharacter::coxeter_sign})
                for (const auto& [from, to] : tensor_label_map(n, which)) {
                    if (twist_label(from, which) != to)
                        return std::string(to_string(which)) + ": oracle sends " + from.to_string() + " to " +
                               to.to_string() + ", closed form to " + twist_label(from, which).to_string();
                    if (twist_label(to, which) != from) return "twist is not an involution on " + from.to_string();
                }
        return std::string();
    });
}

PropertyResult check_pieri_induction(int max_rank, LinearCharacter sgn) {
    return run_check("induction: Pieri rule = explicit induced character (trivial and " +
                         std::string(to_string(sgn)) + ")",
                     [=] {
                         for (int r = 0; r <= max_rank; ++r)
                             for (int l = 0; l <= r; ++l)
                                 for (const auto& chi : bipartitions_of(l))
                                     for (auto which : {LinearCharacter::trivial, sgn}) {
                                         const auto combinatorial = pieri_induce(chi, r - l, which);
                                         std::vector<Bipartition> expected;
                                         for (const auto& [label, mult] :
                                              decompose(oracle::induced_character(chi, r - l, which))) {
                                             if (mult != 1)
                                                 return "oracle multiplicity " + std::to_string(mult) + " for " +
                                                        label.to_string();
                                             expected.push_back(label);
                                         }
                                         if (combinatorial != expected)
                                             return "Ind " + chi.to_string() + " x " +
                                                    std::string(to_string(which)) + "_" + std::to_string(r - l) +
                                                    ": Pieri " + labels_to_string(combinatorial) + ", oracle " +
                                                    labels_to_string(expected);
                                     }
                         return std::string();
                     });
}

PropertyResult check_omega_oracle(int max_r, int max_k, const HoweOptions& options) {
    return run_check("Omega tables: Pieri expansion = oracle inner products, degree identity", [=] {
        for (const auto& c : omega_cases(max_r, max_k, 0, options)) {
            const auto table = omega_unipotent(c.ctx, c.ctx_prime, c.k, options);
            if (omega_unipotent_serial(c.ctx, c.ctx_prime, c.k, options) != table)
                return "parallel and serial tables differ at " + describe(c);
            const auto omega = oracle::omega_character(table.r, table.r_prime, table.formula, table.sgn);
            const auto dense = oracle::omega_multiplicities(omega);
            for (std::size_t i = 0; i < table.row_labels.size(); ++i)
                for (std::size_t j = 0; j < table.col_labels.size(); ++j)
                    if (dense[i][j] != table.at(i, j))
                        return "entry " + table.row_labels[i].to_string() + " x " + table.col_labels[j].to_string() +
                               " at " + describe(c) + ": table " + std::to_string(table.at(i, j)) + ", oracle " +
                               std::to_string(dense[i][j]);
            const auto& left = character_table(table.r);
            const auto& right = character_table(table.r_prime);
            std::int64_t degree = 0;
            for (const auto& [key, mult] : table.entries)
                degree += mult * left.degree(table.row_labels[key.first]) * right.degree(table.col_labels[key.second]);
            const auto& ca = conjugacy_classes(table.r);
            const auto& cb = conjugacy_classes(table.r_prime);
            const auto identity_a = ca.index_of({Partition(std::vector<int>(static_cast<std::size_t>(table.r), 1)), {}});
            const auto identity_b =
                cb.index_of({Partition(std::vector<int>(static_cast<std::size_t>(table.r_prime), 1)), {}});
            if (Rational(degree) != omega.at(identity_a, identity_b))
                return "degree identity fails at " + describe(c);
        }
        return std::string();
    });
}

PropertyResult check_first_occurrence_zero(int max_r, int max_k, const HoweOptions& options) {
    return run_check("first occurrence: zero exactly below m(k'), nonzero series at or above", [=] {
        for (const auto& c : omega_cases(max_r, max_k, -max_k * max_k, options)) {
            const auto table = omega_unipotent(c.ctx, c.ctx_prime, c.k, options);
            const bool below = c.ctx_prime.witt_index < witt_index_of_cuspidal(c.k_prime);
            if (below != table.empty()) return "table emptiness disagrees with first occurrence at " + describe(c);
            if (below)
                for (const auto& b : table.row_labels)
                    if (!theta_images({c.k, b}, c.ctx, c.ctx_prime, options).empty())
                        return "nonempty image below first occurrence at " + describe(c);
        }
        return std::string();
    });
}

PropertyResult check_rows_nonempty(int max_r, int max_k, bool stable_range_only, const HoweOptions& options) {
    std::string name = stable_range_only ? "every representation has an image when r' >= r"
                                         : "every representation has an image when m' >= m(k')";
    return run_check(std::move(name), [=] {
        for (const auto& c : omega_cases(max_r, max_k, 0, options)) {
            const auto table = omega_unipotent(c.ctx, c.ctx_prime, c.k, options);
            if (stable_range_only && table.r_prime < table.r) continue;
            for (std::size_t i = 0; i < table.row_labels.size(); ++i) {
                const bool hit = std::any_of(table.entries.begin(), table.entries.end(),
                                             [i](const auto& e) { return e.first.first == i; });
                if (!hit) return "empty image for " + table.row_labels[i].to_string() + " at " + describe(c);
            }
        }
        return std::string();
    });
}

PropertyResult check_extremal(int max_r, int max_k, const HoweOptions& options) {
    return run_check("extremal images: unique min and max under the configured order", [=] {
        for (const auto& c : omega_cases(max_r, max_k, 0, options)) {
            const auto table = omega_unipotent(c.ctx, c.ctx_prime, c.k, options);
            for (const auto& b : table.row_labels) {
                const auto images = theta_images({c.k, b}, c.ctx, c.ctx_prime, options);
                if (images.empty()) continue;
                try {
                    const auto ex = extremal_images({c.k, b}, c.ctx, c.ctx_prime, options);
                    for (const auto& [img, mult] : images)
                        if (!options.order(ex.min, img) || !options.order(img, ex.max))
                            return "extremes do not bound " + img.to_string();
                } catch (const NoUniqueExtremeError& e) {
                    return "for " + b.to_string() + " at " + describe(c) + ": " + e.what();
                }
            }
        }
        return std::string();
    });
}

SemisimpleDescriptor random_semisimple(std::mt19937_64& rng, int q, int max_dim) {
    std::uniform_int_distribution<int> degree_dist(1, 3);
    const int degree = degree_dist(rng);
    const std::int64_t modulus = exponent_modulus(q, degree);
    std::uniform_int_distribution<int> target_dist(1, max_dim);
    int remaining = target_dist(rng);
    SemisimpleDescriptor s{q, modulus, {}};
    std::vector<std::int64_t> used;
    std::uniform_int_distribution<std::int64_t> exponent_dist(0, modulus - 1);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int attempt = 0; remaining > 0 && attempt < 64; ++attempt) {
        const int choice = pick(rng);
        const std::int64_t e = choice == 0 ? 0 : choice == 1 ? modulus / 2 : exponent_dist(rng);
        auto orbit = orbit_closure_mod(q, modulus, e);
        if (orbit.size() > remaining) continue;
        if (std::any_of(orbit.exponents.begin(), orbit.exponents.end(),
                        [&](std::int64_t x) { return std::find(used.begin(), used.end(), x) != used.end(); }))
            continue;
        std::uniform_int_distribution<int> mult_dist(1, remaining / orbit.size());
        orbit.multiplicity = mult_dist(rng);
        remaining -= orbit.rank();
        used.insert(used.end(), orbit.exponents.begin(), orbit.exponents.end());
        s.orbits.push_back(std::move(orbit));
    }
    if (s.orbits.empty()) s = SemisimpleDescriptor::trivial(q, 1, modulus);
    return s;
}

PropertyResult check_centralizer_random(int count, std::uint64_t seed) {
    return run_check("centralizers: rank conservation, unitary +-1 factors, matching # factors", [=]() -> std::string {
        std::mt19937_64 rng(seed);
        for (int i = 0; i < count; ++i) {
            const int q = i % 2 ? 5 : 3;
            const auto s = random_semisimple(rng, q, 8);
            const int n = s.dimension();
            const TowerContext ctx{q, n % 2, n / 2};
            const auto dec = centralizer_decomposition(s, ctx);
            int total = s.one_multiplicity();
            for (const auto& f : dec.factors) total += f.rank();
            if (total != n) return "rank not conserved for descriptor #" + std::to_string(i);
            std::size_t next = 0;
            for (const auto& o : s.orbits) {
                if (o.is_one()) continue;
                const auto& f = dec.factors[next++];
                if (o.is_minus_one() && f.kind != FactorKind::unitary)
                    return "the -1 orbit gave a linear factor in descriptor #" + std::to_string(i);
                if (f.rank() != o.rank()) return "factor rank differs from orbit rank";
            }
            if (2 * dec.unipotent_block.witt_index + dec.unipotent_block.dim_parity != s.one_multiplicity())
                return "unipotent block has the wrong dimension";
            std::uniform_int_distribution<int> extra(0, 6);
            const int n_prime = n - s.one_multiplicity() + extra(rng);
            const TowerContext ctx_prime{q, n_prime % 2, n_prime / 2};
            const auto s_prime = match_semisimple(s, ctx, ctx_prime);
            if (s_prime.dimension() != n_prime) return "matched element has the wrong dimension";
            if (centralizer_decomposition(s_prime, ctx_prime).factors != dec.factors)
                return "# factors differ after matching for descriptor #" + std::to_string(i);
        }
        return std::string();
    });
}

PropertyResult check_reduction_consistency(int max_r, int max_k, const HoweOptions& options) {
    return run_check("reduction: omega_full with trivial s is byte-identical to omega_unipotent", [=] {
        for (const auto& c : omega_cases(max_r, max_k, 0, options)) {
            const auto expected = dump(json(omega_unipotent(c.ctx, c.ctx_prime, c.k, options)));
            auto pair = unipotent_cuspidal_pair(c.k, c.ctx);
            for (int explicit_s = 0; explicit_s <= 1; ++explicit_s) {
                if (explicit_s)
                    pair.semisimple =
                        SemisimpleDescriptor::trivial(c.ctx.q, c.ctx.dimension(), exponent_modulus(c.ctx.q, 1));
                const auto full = omega_full(pair, c.ctx, c.ctx_prime, options);
                if (!full) return "omega_full is zero at " + describe(c);
                if (!full->hash_factors.empty() || full->reduction_l != 0)
                    return "trivial s produced a # part at " + describe(c);
                if (dump(json(full->unipotent_table)) != expected) return "serializations differ at " + describe(c);
            }
        }
        return std::string();
    });
}

PropertyResult check_membership(int max_block, const HoweOptions& options) {
    return run_check("membership: pointwise test = enumerated Theta (l <= 1)", [=] {
        const int q = 3;
        const std::int64_t modulus = exponent_modulus(q, 1);
        // Orbits away from 1 of total dimension <= 3: -1, a pair of size-1 orbits, a size-2 orbit.
        const std::vector<std::vector<std::pair<std::int64_t, int>>> shapes = {
            {}, {{4, 1}}, {{4, 2}}, {{2, 1}, {6, 1}}, {{1, 1}}, {{4, 3}}};
        std::size_t checked = 0;
        for (int dim = 0; dim <= 2 * max_block + 3; ++dim)
            for (const auto& shape : shapes) {
                SemisimpleDescriptor s{q, modulus, {}};
                int away = 0;
                for (auto [e, mult] : shape) {
                    s.orbits.push_back(orbit_closure_mod(q, modulus, e, mult));
                    away += s.orbits.back().rank();
                }
                if (away > dim) continue;
                if (dim - away > 0) s.orbits.push_back(orbit_closure_mod(q, modulus, 0, dim - away));
                const TowerContext ctx{q, dim % 2, dim / 2};
                const auto dec = centralizer_decomposition(s, ctx);
                if (dec.reduction_l > 1 || dec.unipotent_block.witt_index > max_block) continue;
                for (int dim_prime = away; dim_prime <= away + 2 * max_block + 1; ++dim_prime) {
                    const TowerContext ctx_prime{q, dim_prime % 2, dim_prime / 2};
                    const auto s_prime = match_semisimple(s, ctx, ctx_prime);
                    const auto dec_prime = centralizer_decomposition(s_prime, ctx_prime);
                    if (dec_prime.reduction_l > 1 || dec_prime.unipotent_block.witt_index > max_block) continue;
                    auto candidates = series_representations(s_prime, ctx_prime);
                    if (!shape.empty())  // representations of the wrong series are never images
                        for (auto& other : series_representations(
                                 SemisimpleDescriptor::trivial(q, dim_prime, modulus), ctx_prime))
                            candidates.push_back(std::move(other));
                    for (const auto& pi : series_representations(s, ctx)) {
                        const auto set = theta_full(pi, ctx, ctx_prime, options);
                        for (const auto& candidate : candidates) {
                            const bool listed = std::find(set.begin(), set.end(), candidate) != set.end();
                            if (listed != in_theta(pi, candidate, ctx, ctx_prime, options))
                                return "membership disagrees for dim " + std::to_string(dim) + " -> " +
                                       std::to_string(dim_prime);
                            ++checked;
                        }
                    }
                }
            }
        if (checked == 0) return std::string("no cases were checked");
        return std::string();
    });
}

PropertyResult check_transport_laws(const HoweOptions& options) {
    return run_check("support transport: round trip, underflow error, verbatim GL blocks", [=] {
        const GlCuspidal sigma{2, "sigma"};
        // Unipotent supports: grow to a larger partner, then come back.
        for (int k = 0; k <= 3; ++k)
            for (int parity_prime = 0; parity_prime <= 1; ++parity_prime)
                for (int r = 0; r <= 3; ++r) {
                    const TowerContext ctx{3, triangular(k) % 2, witt_index_of_cuspidal(k) + r};
                    const int k_prime = theta_cuspidal(k, parity_prime, options);
                    const TowerContext ctx_prime{3, parity_prime, witt_index_of_cuspidal(k_prime) + r + 2};
                    CuspidalSupport support{std::vector<GlCuspidal>(static_cast<std::size_t>(r), trivial_gl1()),
                                            CuspidalBase::unipotent(k)};
                    const auto grown = transport_support(support, ctx, ctx_prime, options);
                    if (!grown || grown->trivial_count() != r + 2) return std::string("unipotent growth failed");
                    const auto back = transport_support(*grown, ctx_prime, ctx, options);
                    if (!back || *back != support) return "unipotent round trip failed for k=" + std::to_string(k);
                }
        // Opaque base with a nontrivial GL block.
        CuspidalSupport support{{sigma, trivial_gl1(), trivial_gl1()}, {std::nullopt, "phi", 1, "phi'", 2}};
        const TowerContext ctx{3, 0, 5};
        const TowerContext ctx_prime{3, 1, 9};
        const auto grown = transport_support(support, ctx, ctx_prime, options);
        if (!grown) return std::string("opaque growth returned zero");
        std::vector<GlCuspidal> nontrivial;
        for (const auto& g : grown->gl_part)
            if (!g.is_trivial()) nontrivial.push_back(g);
        if (nontrivial != std::vector<GlCuspidal>{sigma}) return std::string("GL block not transported verbatim");
        if (grown->gl_rank() + grown->base.witt_index != ctx_prime.witt_index)
            return std::string("grown support has the wrong rank");
        const auto back = transport_support(*grown, ctx_prime, ctx, options);
        if (!back || *back != support) return std::string("opaque round trip failed");
        // Not enough trivial entries to remove.
        CuspidalSupport thin{{GlCuspidal{1, "sigma"}, trivial_gl1()}, {std::nullopt, "phi", 0, "phi'", 0}};
        try {
            transport_support(thin, {3, 0, 2}, {3, 0, 0}, options);
            return std::string("underflow did not raise");
        } catch (const ValidationError&) {
        }
        return std::string();
    });
}

std::vector<PropertyResult> run_verification(int max_rank, const HoweOptions& options) {
    const int table_rank = std::min(max_rank, 4);
    std::vector<PropertyResult> out;
    out.push_back(check_partition_invariants(std::max(max_rank, 8)));
    out.push_back(check_class_sizes(max_rank));
    out.push_back(check_character_tables(max_rank));
    out.push_back(check_twist_closed_forms(max_rank));
    out.push_back(check_pieri_induction(max_rank, options.sgn));
    out.push_back(check_omega_oracle(table_rank, 3, options));
    out.push_back(check_first_occurrence_zero(table_rank, 4, options));
    out.push_back(check_rows_nonempty(table_rank, 3, true, options));
    out.push_back(check_extremal(table_rank, 3, options));
    out.push_back(check_centralizer_random(200, 20261016));
    out.push_back(check_reduction_consistency(table_rank, 3, options));
    out.push_back(check_membership(std::min(max_rank, 3), options));
    out.push_back(check_transport_laws(options));
    return out;
}

}  // namespace howe::verify
