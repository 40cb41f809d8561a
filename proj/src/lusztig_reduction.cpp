#include "howe/lusztig_reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace howe {

namespace {

void validate_q(int q) {
    if (q < 3 || q % 2 == 0) throw ValidationError("q must be an odd prime power");
}

std::int64_t twisted_frobenius(std::int64_t e, int q, std::int64_t modulus) {
    const auto image = static_cast<std::int64_t>((static_cast<__int128>(e) * q) % modulus);
    return image == 0 ? 0 : modulus - image;
}

}  // namespace

std::int64_t exponent_modulus(int q, int degree) {
    validate_q(q);
    if (degree < 1) throw ValidationError("field degree must be positive");
    __int128 power = 1;
    for (int i = 0; i < 2 * degree; ++i) {
        power *= q;
        if (power > (__int128{1} << 62)) throw ValidationError("exponent modulus q^(2d)-1 overflows");
    }
    return static_cast<std::int64_t>(power - 1);
}

EigenvalueOrbit orbit_closure_mod(int q, std::int64_t modulus, std::optional<std::int64_t> exponent,
                                  int multiplicity) {
    validate_q(q);
    if (!exponent) throw ValidationError("the eigenvalue 0 has no exponent; semisimple elements are invertible");
    if (modulus < 2) throw ValidationError("exponent modulus must be at least 2");
    if (multiplicity < 1) throw ValidationError("orbit multiplicity must be positive");
    const std::int64_t start = ((*exponent % modulus) + modulus) % modulus;
    EigenvalueOrbit orbit;
    orbit.modulus = modulus;
    orbit.multiplicity = multiplicity;
    std::set<std::int64_t> seen{start};
    for (std::int64_t e = twisted_frobenius(start, q, modulus); e != start; e = twisted_frobenius(e, q, modulus)) {
        if (!seen.insert(e).second)
            throw ValidationError("the twisted Frobenius does not act by a permutation modulo " +
                                  std::to_string(modulus));
    }
    orbit.exponents.assign(seen.begin(), seen.end());
    return orbit;
}

EigenvalueOrbit orbit_closure(int q, int degree, std::optional<std::int64_t> exponent, int multiplicity) {
    return orbit_closure_mod(q, exponent_modulus(q, degree), exponent, multiplicity);
}

int SemisimpleDescriptor::dimension() const noexcept {
    int n = 0;
    for (const auto& o : orbits) n += o.rank();
    return n;
}

int SemisimpleDescriptor::one_multiplicity() const noexcept {
    for (const auto& o : orbits)
        if (o.is_one()) return o.multiplicity;
    return 0;
}

void SemisimpleDescriptor::validate() const {
    validate_q(q);
    std::set<std::int64_t> used;
    for (const auto& o : orbits) {
        if (o.modulus != modulus) throw ValidationError("orbits use different exponent moduli");
        if (o.exponents.empty()) throw ValidationError("empty eigenvalue orbit");
        if (orbit_closure_mod(q, modulus, o.exponents.front(), o.multiplicity) != o)
            throw ValidationError("eigenvalue orbit is not closed under the twisted Frobenius");
        for (auto e : o.exponents)
            if (!used.insert(e).second) throw ValidationError("eigenvalue orbits overlap");
    }
}

SemisimpleDescriptor SemisimpleDescriptor::trivial(int q, int dimension, std::int64_t modulus) {
    SemisimpleDescriptor s{q, modulus, {}};
    if (dimension > 0) s.orbits.push_back(orbit_closure_mod(q, modulus, 0, dimension));
    return s;
}

std::string_view to_string(FactorKind kind) noexcept { return kind == FactorKind::linear ? "GL" : "U"; }

std::string CentralizerFactor::to_string() const {
    std::ostringstream os;
    os << howe::to_string(kind) << '_' << size << "(q^" << field_degree << ')';
    return os.str();
}

// Single point of truth for the GL/U split; +-1 have orbits of size 1 and are unitary.
FactorKind classify_orbit(const EigenvalueOrbit& orbit) {
    return orbit.size() % 2 == 1 ? FactorKind::unitary : FactorKind::linear;
}

CentralizerDecomposition centralizer_decomposition(const SemisimpleDescriptor& s, const TowerContext& ctx) {
    s.validate();
    ctx.validate();
    if (s.q != ctx.q) throw ValidationError("semisimple element and group use different q");
    if (s.dimension() != ctx.dimension())
        throw ValidationError("orbit ranks sum to " + std::to_string(s.dimension()) + ", group dimension is " +
                              std::to_string(ctx.dimension()));
    CentralizerDecomposition out;
    for (const auto& o : s.orbits)
        if (!o.is_one()) out.factors.push_back({classify_orbit(o), o.multiplicity, o.size()});
    const int nu = s.one_multiplicity();
    out.unipotent_block = {ctx.q, nu % 2, nu / 2};
    out.reduction_l = ctx.witt_index - nu / 2;
    return out;
}

SemisimpleDescriptor match_semisimple(const SemisimpleDescriptor& s, const TowerContext& ctx,
                                      const TowerContext& ctx_prime) {
    centralizer_decomposition(s, ctx);
    ctx_prime.validate();
    if (ctx_prime.q != s.q) throw ValidationError("partner group uses a different q");
    const int away_from_one = s.dimension() - s.one_multiplicity();
    const int nu_prime = ctx_prime.dimension() - away_from_one;
    if (nu_prime < 0)
        throw ValidationError("eigenvalues away from 1 span " + std::to_string(away_from_one) +
                              " dimensions, more than the partner dimension " +
                              std::to_string(ctx_prime.dimension()));
    SemisimpleDescriptor out{s.q, s.modulus, {}};
    bool placed = false;
    for (const auto& o : s.orbits) {
        if (!o.is_one()) {
            out.orbits.push_back(o);
        } else if (nu_prime > 0) {
            out.orbits.push_back(orbit_closure_mod(s.q, s.modulus, 0, nu_prime));
            placed = true;
        }
    }
    if (!placed && nu_prime > 0 && s.one_multiplicity() == 0)
        out.orbits.push_back(orbit_closure_mod(s.q, s.modulus, 0, nu_prime));
    return out;
}

// ---------------------------------------------------------------------------
// Cuspidal supports

GlCuspidal trivial_gl1() { return {}; }

CuspidalBase CuspidalBase::unipotent(int k) {
    CuspidalBase base;
    base.k = k;
    base.label = "lambda_" + std::to_string(k);
    base.witt_index = witt_index_of_cuspidal(k);
    return base;
}

int CuspidalSupport::gl_rank() const noexcept {
    int total = 0;
    for (const auto& g : gl_part) total += g.size;
    return total;
}

int CuspidalSupport::trivial_count() const noexcept {
    return static_cast<int>(std::count_if(gl_part.begin(), gl_part.end(),
                                          [](const GlCuspidal& g) { return g.is_trivial(); }));
}

std::optional<CuspidalSupport> transport_support(const CuspidalSupport& support, const TowerContext& ctx,
                                                 const TowerContext& ctx_prime, const HoweOptions& options) {
    ctx.validate();
    ctx_prime.validate();
    for (const auto& g : support.gl_part)
        if (g.size < 1 || g.label.empty()) throw ValidationError("malformed GL cuspidal entry");
    const auto& base = support.base;
    if (base.k) {
        if (triangular(*base.k) % 2 != ctx.dim_parity)
            throw ValidationError("lambda_" + std::to_string(*base.k) + " does not live in this tower");
        if (base.witt_index != witt_index_of_cuspidal(*base.k))
            throw ValidationError("unipotent cuspidal base has the wrong Witt index");
    }
    if (support.gl_rank() + base.witt_index != ctx.witt_index)
        throw ValidationError("cuspidal support has rank " + std::to_string(support.gl_rank() + base.witt_index) +
                              ", group has Witt index " + std::to_string(ctx.witt_index));

    CuspidalBase partner;
    if (base.k) {
        partner = CuspidalBase::unipotent(theta_cuspidal(*base.k, ctx_prime.dim_parity, options));
    } else {
        partner = {std::nullopt, base.partner_label, base.partner_witt_index, base.label, base.witt_index};
    }
    const int first_occurrence = partner.witt_index;
    if (ctx_prime.witt_index < first_occurrence) return std::nullopt;

    CuspidalSupport out{support.gl_part, partner};
    const int target = ctx_prime.witt_index - first_occurrence;
    const int current = support.gl_rank();
    if (target >= current) {
        out.gl_part.insert(out.gl_part.end(), static_cast<std::size_t>(target - current), trivial_gl1());
    } else {
        int to_remove = current - target;
        if (support.trivial_count() < to_remove)
            throw ValidationError("support has " + std::to_string(support.trivial_count()) +
                                  " trivial GL_1 entries, " + std::to_string(to_remove) +
                                  " must be removed: no correspondent exists");
        for (auto it = out.gl_part.end(); to_remove > 0 && it != out.gl_part.begin();) {
            --it;
            if (it->is_trivial()) {
                it = out.gl_part.erase(it);
                --to_remove;
            }
        }
    }
    return out;
}

int CuspidalPair::torus_rank() const noexcept {
    return static_cast<int>(std::count_if(gl_part.begin(), gl_part.end(),
                                          [](const GlCuspidal& g) { return g.is_trivial(); }));
}

int CuspidalPair::gl_rank() const noexcept {
    int total = 0;
    for (const auto& g : gl_part) total += g.size;
    return total;
}

CuspidalPair unipotent_cuspidal_pair(int k, const TowerContext& ctx) {
    ctx.validate();
    if (triangular(k) % 2 != ctx.dim_parity || witt_index_of_cuspidal(k) > ctx.witt_index)
        throw ValidationError("no unipotent series with k=" + std::to_string(k) + " in this group");
    CuspidalPair pair;
    pair.gl_part.assign(static_cast<std::size_t>(ctx.witt_index - witt_index_of_cuspidal(k)), trivial_gl1());
    pair.base_k = k;
    return pair;
}

namespace {

SemisimpleDescriptor semisimple_or_trivial(const CuspidalPair& pair, const TowerContext& ctx) {
    if (pair.semisimple) return *pair.semisimple;
    return SemisimpleDescriptor::trivial(ctx.q, ctx.dimension(), exponent_modulus(ctx.q, 1));
}

// Reduced unipotent blocks of both groups, with the pair's k checked against its block.
struct ReducedPair {
    SemisimpleDescriptor s;
    SemisimpleDescriptor s_prime;
    CentralizerDecomposition dec;
    CentralizerDecomposition dec_prime;
};

ReducedPair reduce(const CuspidalPair& pair, const TowerContext& ctx, const TowerContext& ctx_prime) {
    ReducedPair out;
    out.s = semisimple_or_trivial(pair, ctx);
    out.dec = centralizer_decomposition(out.s, ctx);
    const auto& block = out.dec.unipotent_block;
    if (pair.base_k < 0 || triangular(pair.base_k) % 2 != block.dim_parity ||
        witt_index_of_cuspidal(pair.base_k) > block.witt_index)
        throw ValidationError("lambda_" + std::to_string(pair.base_k) +
                              " does not fit the unipotent block of the centralizer");
    out.s_prime = match_semisimple(out.s, ctx, ctx_prime);
    out.dec_prime = centralizer_decomposition(out.s_prime, ctx_prime);
    return out;
}

}  // namespace

std::optional<CuspidalPair> transport_series(const CuspidalPair& pair, const TowerContext& ctx,
                                             const TowerContext& ctx_prime, const HoweOptions& options) {
    const auto reduced = reduce(pair, ctx, ctx_prime);
    const int phi_witt = ctx.witt_index - pair.gl_rank();
    const int hash_witt = phi_witt - witt_index_of_cuspidal(pair.base_k);
    if (hash_witt < 0) throw ValidationError("cuspidal pair is larger than the group");
    const int k_prime = theta_cuspidal(pair.base_k, reduced.dec_prime.unipotent_block.dim_parity, options);
    if (witt_index_of_cuspidal(k_prime) > reduced.dec_prime.unipotent_block.witt_index) return std::nullopt;

    CuspidalSupport support{pair.gl_part, {std::nullopt, "phi", phi_witt, "phi'",
                                           hash_witt + witt_index_of_cuspidal(k_prime)}};
    const auto moved = transport_support(support, ctx, ctx_prime, options);
    if (!moved) return std::nullopt;
    CuspidalPair out;
    out.gl_part = moved->gl_part;
    out.base_k = k_prime;
    if (pair.semisimple) out.semisimple = reduced.s_prime;
    return out;
}

RelativeWeylGroup weyl_of_cuspidal_pair(const CuspidalPair& pair, const TowerContext& ctx) {
    const auto dec = centralizer_decomposition(semisimple_or_trivial(pair, ctx), ctx);
    const int r = dec.unipotent_block.witt_index - witt_index_of_cuspidal(pair.base_k);
    if (r < 0) throw ValidationError("cuspidal pair does not fit the group");
    return {dec.factors, r};
}

std::optional<FullDecomposition> omega_full(const CuspidalPair& pair, const TowerContext& ctx,
                                            const TowerContext& ctx_prime, const HoweOptions& options) {
    if (!transport_series(pair, ctx, ctx_prime, options)) return std::nullopt;
    const auto reduced = reduce(pair, ctx, ctx_prime);
    if (reduced.dec.factors != reduced.dec_prime.factors)
        throw InvariantViolation("centralizer factors away from 1 differ between the two groups");
    FullDecomposition out;
    out.hash_factors = reduced.dec.factors;
    out.reduction_l = reduced.dec.reduction_l;
    out.reduction_l_prime = reduced.dec_prime.reduction_l;
    out.unipotent_table =
        omega_unipotent(reduced.dec.unipotent_block, reduced.dec_prime.unipotent_block, pair.base_k, options);
    return out;
}

// ---------------------------------------------------------------------------
// Lusztig coordinates

std::string to_string(const UnipotentLabel& label) {
    return std::visit([](const auto& l) { return l.to_string(); }, label);
}

std::vector<UnipotentLabel> unipotent_labels(const CentralizerFactor& factor) {
    std::vector<UnipotentLabel> out;
    if (factor.kind == FactorKind::linear) {
        for (auto& p : partitions_of(factor.size)) out.emplace_back(std::move(p));
    } else {
        for (auto& s : unipotent_series_labels({3, factor.size % 2, factor.size / 2})) out.emplace_back(std::move(s));
    }
    return out;
}

namespace {

void validate_factor_label(const CentralizerFactor& factor, const UnipotentLabel& label) {
    if (factor.kind == FactorKind::linear) {
        const auto* p = std::get_if<Partition>(&label);
        if (!p || p->norm() != factor.size)
            throw ValidationError("factor " + factor.to_string() + " needs a partition of " +
                                  std::to_string(factor.size));
    } else {
        const auto* s = std::get_if<SeriesLabel>(&label);
        if (!s) throw ValidationError("factor " + factor.to_string() + " needs a series label");
        validate_series_label(*s, {3, factor.size % 2, factor.size / 2});
    }
}

CentralizerFactor orbit_factor(const EigenvalueOrbit& o) {
    if (o.is_one()) return {FactorKind::unitary, o.multiplicity, 1};
    return {classify_orbit(o), o.multiplicity, o.size()};
}

void validate_representation(const RepresentationLabel& pi) {
    if (pi.orbit_labels.size() != pi.s.orbits.size())
        throw ValidationError("one unipotent label per eigenvalue orbit is required");
    for (std::size_t i = 0; i < pi.s.orbits.size(); ++i)
        validate_factor_label(orbit_factor(pi.s.orbits[i]), pi.orbit_labels[i]);
}

const SeriesLabel kEmptySeries{0, {}};

}  // namespace

LusztigCoordinates lusztig_coordinates(const RepresentationLabel& pi, const TowerContext& ctx) {
    const auto dec = centralizer_decomposition(pi.s, ctx);
    validate_representation(pi);
    LusztigCoordinates out;
    out.unipotent_part = kEmptySeries;
    out.reduction_l = dec.reduction_l;
    for (std::size_t i = 0; i < pi.s.orbits.size(); ++i) {
        if (pi.s.orbits[i].is_one())
            out.unipotent_part = std::get<SeriesLabel>(pi.orbit_labels[i]);
        else
            out.hash_part_label.push_back(pi.orbit_labels[i]);
    }
    return out;
}

RepresentationLabel from_lusztig_coordinates(const LusztigCoordinates& coords, const SemisimpleDescriptor& s,
                                             const TowerContext& ctx) {
    const auto dec = centralizer_decomposition(s, ctx);
    if (coords.reduction_l != dec.reduction_l)
        throw ValidationError("Lusztig coordinates carry the wrong reduction index");
    if (coords.hash_part_label.size() != dec.factors.size())
        throw ValidationError("Lusztig coordinates carry the wrong number of # labels");
    RepresentationLabel out{s, {}};
    std::size_t next = 0;
    for (const auto& o : s.orbits) {
        if (o.is_one())
            out.orbit_labels.emplace_back(coords.unipotent_part);
        else
            out.orbit_labels.push_back(coords.hash_part_label[next++]);
    }
    if (s.one_multiplicity() == 0 && !(coords.unipotent_part == kEmptySeries))
        throw ValidationError("no eigenvalue 1: the unipotent part must be the trivial label of U_0");
    validate_representation(out);
    return out;
}

std::vector<RepresentationLabel> series_representations(const SemisimpleDescriptor& s, const TowerContext& ctx) {
    centralizer_decomposition(s, ctx);
    std::vector<RepresentationLabel> out{{s, {}}};
    for (const auto& o : s.orbits) {
        const auto choices = unipotent_labels(orbit_factor(o));
        std::vector<RepresentationLabel> next;
        for (const auto& partial : out)
            for (const auto& c : choices) {
                auto extended = partial;
                extended.orbit_labels.push_back(c);
                next.push_back(std::move(extended));
            }
        out = std::move(next);
    }
    return out;
}

bool in_theta(const RepresentationLabel& pi, const RepresentationLabel& pi_prime, const TowerContext& ctx,
              const TowerContext& ctx_prime, const HoweOptions& options) {
    const auto coords = lusztig_coordinates(pi, ctx);
    const auto coords_prime = lusztig_coordinates(pi_prime, ctx_prime);
    if (!(pi_prime.s == match_semisimple(pi.s, ctx, ctx_prime))) return false;
    if (coords.hash_part_label != coords_prime.hash_part_label) return false;
    const auto block = centralizer_decomposition(pi.s, ctx).unipotent_block;
    const auto block_prime = centralizer_decomposition(pi_prime.s, ctx_prime).unipotent_block;
    const auto table = omega_unipotent(block, block_prime, coords.unipotent_part.k, options);
    if (coords_prime.unipotent_part.k != table.k_prime) return false;
    const auto row = std::find(table.row_labels.begin(), table.row_labels.end(), coords.unipotent_part.char_label);
    const auto col =
        std::find(table.col_labels.begin(), table.col_labels.end(), coords_prime.unipotent_part.char_label);
    if (row == table.row_labels.end() || col == table.col_labels.end()) return false;
    return table.at(static_cast<std::size_t>(row - table.row_labels.begin()),
                    static_cast<std::size_t>(col - table.col_labels.begin())) > 0;
}

std::vector<RepresentationLabel> theta_full(const RepresentationLabel& pi, const TowerContext& ctx,
                                            const TowerContext& ctx_prime, const HoweOptions& options) {
    const auto coords = lusztig_coordinates(pi, ctx);
    const auto s_prime = match_semisimple(pi.s, ctx, ctx_prime);
    const auto block = centralizer_decomposition(pi.s, ctx).unipotent_block;
    const auto dec_prime = centralizer_decomposition(s_prime, ctx_prime);
    std::vector<RepresentationLabel> out;
    for (const auto& [image, mult] : theta_images(coords.unipotent_part, block, dec_prime.unipotent_block, options))
        out.push_back(from_lusztig_coordinates({coords.hash_part_label, image, dec_prime.reduction_l}, s_prime,
                                               ctx_prime));
    return out;
}

std::pair<RepresentationLabel, RepresentationLabel> extremal_full(const RepresentationLabel& pi,
                                                                  const TowerContext& ctx,
                                                                  const TowerContext& ctx_prime,
                                                                  const HoweOptions& options) {
    const auto coords = lusztig_coordinates(pi, ctx);
    const auto s_prime = match_semisimple(pi.s, ctx, ctx_prime);
    const auto block = centralizer_decomposition(pi.s, ctx).unipotent_block;
    const auto dec_prime = centralizer_decomposition(s_prime, ctx_prime);
    const auto ex = extremal_images(coords.unipotent_part, block, dec_prime.unipotent_block, options);
    auto lift = [&](const SeriesLabel& u) {
        return from_lusztig_coordinates({coords.hash_part_label, u, dec_prime.reduction_l}, s_prime, ctx_prime);
    };
    return {lift(ex.min), lift(ex.max)};
}

}  // namespace howe
