#include "howe/howe_unipotent.hpp"

#include <algorithm>
#include <sstream>

namespace howe {

std::string SeriesLabel::to_string() const {
    std::ostringstream os;
    os << "[k=" << k << ", " << char_label << ']';
    return os.str();
}

void TowerContext::validate() const {
    if (q < 3 || q % 2 == 0) throw ValidationError("q must be an odd prime power");
    if (dim_parity != 0 && dim_parity != 1) throw ValidationError("dimension parity must be 0 or 1");
    if (witt_index < 0) throw ValidationError("Witt index must be nonnegative");
}

int triangular(int k) {
    if (k < 0) throw ValidationError("cuspidal index must be nonnegative");
    return k * (k + 1) / 2;
}

int witt_index_of_cuspidal(int k) { return triangular(k) / 2; }

int default_theta_cuspidal(int k, int target_parity) {
    if (k < 0) throw ValidationError("cuspidal index must be nonnegative");
    if (target_parity != 0 && target_parity != 1) throw ValidationError("parity must be 0 or 1");
    if (k == 0) return target_parity;
    // T(k+1) - T(k-1) = 2k + 1 is odd, so exactly one candidate has the parity.
    return triangular(k - 1) % 2 == target_parity ? k - 1 : k + 1;
}

bool default_image_order(const SeriesLabel& a, const SeriesLabel& b) {
    if (a.k != b.k || a.char_label.norm() != b.char_label.norm()) return false;
    return bipartition_dominance_leq(a.char_label, b.char_label);
}

int theta_cuspidal(int k, int target_parity, const HoweOptions& options) {
    const int k_prime = options.theta(k, target_parity);
    if (k_prime < 0 || triangular(k_prime) % 2 != target_parity)
        throw ValidationError("cuspidal theta rule returned " + std::to_string(k_prime) +
                              ", which does not live in a tower of parity " + std::to_string(target_parity));
    return k_prime;
}

OmegaFormula formula_for(int k, int k_prime) {
    return (k % 2 == 1 || (k == 0 && k_prime == 0)) ? OmegaFormula::u1 : OmegaFormula::u2;
}

std::string_view to_string(OmegaFormula f) noexcept { return f == OmegaFormula::u1 ? "u1" : "u2"; }

std::vector<Bipartition> pieri_induce(const Bipartition& chi, int extra, LinearCharacter which) {
    std::vector<Bipartition> out;
    switch (which) {
        case LinearCharacter::trivial:
            for (auto& p : horizontal_strip_additions(chi.first, extra)) out.push_back({p, chi.second});
            break;
        case LinearCharacter::permutation_sign:
            for (auto& p : vertical_strip_additions(chi.first, extra)) out.push_back({p, chi.second});
            break;
        case LinearCharacter::sign_changes:
            for (auto& p : horizontal_strip_additions(chi.second, extra)) out.push_back({chi.first, p});
            break;
        case LinearCharacter::coxeter_sign:
            for (auto& p : vertical_strip_additions(chi.second, extra)) out.push_back({chi.first, p});
            break;
    }
    std::sort(out.begin(), out.end(), canonical_before);
    return out;
}

std::int64_t MultiplicityTable::at(std::size_t row, std::size_t col) const {
    const auto it = entries.find({row, col});
    return it == entries.end() ? 0 : it->second;
}

namespace {

using EntryMap = std::map<std::pair<std::size_t, std::size_t>, std::int64_t>;
using LabelIndex = std::map<Bipartition, std::size_t, CanonicalLess>;

LabelIndex index_labels(const std::vector<Bipartition>& labels) {
    LabelIndex index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    return index;
}

// Everything needed to evaluate the double sum, fixed before any term is expanded.
struct OmegaPlan {
    MultiplicityTable table;
    LabelIndex rows;
    LabelIndex cols;
    std::vector<std::pair<int, Bipartition>> terms;  // (l, chi) with chi in Irr(W_l)
};

OmegaPlan plan_omega(const TowerContext& ctx, const TowerContext& ctx_prime, int k,
                     const HoweOptions& options) {
    ctx.validate();
    ctx_prime.validate();
    if (k < 0) throw ValidationError("cuspidal index must be nonnegative");
    if (triangular(k) % 2 != ctx.dim_parity)
        throw ValidationError("lambda_" + std::to_string(k) + " does not live in a tower of parity " +
                              std::to_string(ctx.dim_parity));
    if (ctx.witt_index < witt_index_of_cuspidal(k))
        throw ValidationError("Witt index " + std::to_string(ctx.witt_index) + " is below m(k) = " +
                              std::to_string(witt_index_of_cuspidal(k)));

    OmegaPlan plan;
    auto& t = plan.table;
    t.m = ctx.witt_index;
    t.m_prime = ctx_prime.witt_index;
    t.k = k;
    t.k_prime = theta_cuspidal(k, ctx_prime.dim_parity, options);
    t.r = t.m - witt_index_of_cuspidal(k);
    t.r_prime = t.m_prime - witt_index_of_cuspidal(t.k_prime);
    t.formula = formula_for(t.k, t.k_prime);
    t.sgn = options.sgn;
    t.row_labels = bipartitions_of(t.r);
    plan.rows = index_labels(t.row_labels);
    if (t.r_prime < 0) return plan;  // below first occurrence
    t.col_labels = bipartitions_of(t.r_prime);
    plan.cols = index_labels(t.col_labels);
    for (int l = 0; l <= std::min(t.r, t.r_prime); ++l)
        for (auto& chi : bipartitions_of(l)) plan.terms.emplace_back(l, std::move(chi));
    return plan;
}

// Adds the product of the two inductions for one (l, chi) term.
void expand_term(const OmegaPlan& plan, const std::pair<int, Bipartition>& term, EntryMap& out) {
    const auto& t = plan.table;
    const auto& [l, chi] = term;
    const LinearCharacter left_twist = t.formula == OmegaFormula::u1 ? LinearCharacter::trivial : t.sgn;
    const auto left = pieri_induce(chi, t.r - l, left_twist);
    const auto right = pieri_induce(twist_label(chi, t.sgn), t.r_prime - l, LinearCharacter::trivial);
    for (const auto& a : left) {
        const std::size_t row = plan.rows.at(a);
        for (const auto& b : right) out[{row, plan.cols.at(b)}] += 1;
    }
}

}  // namespace

MultiplicityTable omega_unipotent_serial(const TowerContext& ctx, const TowerContext& ctx_prime, int k,
                                         const HoweOptions& options) {
    auto plan = plan_omega(ctx, ctx_prime, k, options);
    for (const auto& term : plan.terms) expand_term(plan, term, plan.table.entries);
    return std::move(plan.table);
}

MultiplicityTable omega_unipotent(const TowerContext& ctx, const TowerContext& ctx_prime, int k,
                                  const HoweOptions& options) {
    auto plan = plan_omega(ctx, ctx_prime, k, options);
    const auto count = static_cast<std::int64_t>(plan.terms.size());
    EntryMap& merged = plan.table.entries;
#pragma omp parallel default(none) shared(plan, count, merged)
    {
        EntryMap local;
#pragma omp for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) expand_term(plan, plan.terms[static_cast<std::size_t>(i)], local);
#pragma omp critical
        for (const auto& [key, value] : local) merged[key] += value;
    }
    return std::move(plan.table);
}

void validate_series_label(const SeriesLabel& pi, const TowerContext& ctx) {
    ctx.validate();
    if (pi.k < 0) throw ValidationError("cuspidal index must be nonnegative");
    if (triangular(pi.k) % 2 != ctx.dim_parity)
        throw ValidationError("series k=" + std::to_string(pi.k) + " does not occur in a tower of parity " +
                              std::to_string(ctx.dim_parity));
    const int r = ctx.witt_index - witt_index_of_cuspidal(pi.k);
    if (r < 0) throw ValidationError("series k=" + std::to_string(pi.k) + " does not occur at Witt index " +
                                     std::to_string(ctx.witt_index));
    if (pi.char_label.norm() != r)
        throw ValidationError("label " + pi.char_label.to_string() + " is not an irreducible of W_" +
                              std::to_string(r));
}

std::vector<SeriesLabel> unipotent_series_labels(const TowerContext& ctx) {
    ctx.validate();
    std::vector<SeriesLabel> out;
    for (int k = 0; witt_index_of_cuspidal(k) <= ctx.witt_index; ++k) {
        if (triangular(k) % 2 != ctx.dim_parity) continue;
        for (auto& b : bipartitions_of(ctx.witt_index - witt_index_of_cuspidal(k)))
            out.push_back({k, std::move(b)});
    }
    return out;
}

Images theta_images(const SeriesLabel& pi, const TowerContext& ctx, const TowerContext& ctx_prime,
                    const HoweOptions& options) {
    validate_series_label(pi, ctx);
    const auto table = omega_unipotent(ctx, ctx_prime, pi.k, options);
    Images out;
    if (table.col_labels.empty()) return out;
    const auto row = static_cast<std::size_t>(
        std::find(table.row_labels.begin(), table.row_labels.end(), pi.char_label) - table.row_labels.begin());
    for (const auto& [key, mult] : table.entries)
        if (key.first == row) out.push_back({{table.k_prime, table.col_labels[key.second]}, mult});
    return out;
}

Extremes extremes_of(const std::vector<SeriesLabel>& elements, const ImageOrder& order) {
    if (elements.empty()) throw ValidationError("empty image set has no extremal elements");
    auto pick = [&](bool minimum) -> SeriesLabel {
        auto below = [&](const SeriesLabel& a, const SeriesLabel& b) {
            return minimum ? order(a, b) : order(b, a);
        };
        for (const auto& x : elements)
            if (std::all_of(elements.begin(), elements.end(), [&](const SeriesLabel& y) { return below(x, y); }))
                return x;
        std::vector<SeriesLabel> witness;  // minimal (resp. maximal) elements
        for (const auto& x : elements) {
            const bool dominated = std::any_of(elements.begin(), elements.end(), [&](const SeriesLabel& y) {
                return !(y == x) && below(y, x);
            });
            if (!dominated) witness.push_back(x);
        }
        std::string what = std::string("no unique ") + (minimum ? "minimum" : "maximum") +
                           " under the configured order; candidates:";
        for (const auto& w : witness) what += " " + w.to_string();
        throw NoUniqueExtremeError(what, std::move(witness));
    };
    return {pick(true), pick(false)};
}

Extremes extremal_images(const SeriesLabel& pi, const TowerContext& ctx, const TowerContext& ctx_prime,
                         const HoweOptions& options) {
    const auto images = theta_images(pi, ctx, ctx_prime, options);
    std::vector<SeriesLabel> labels;
    labels.reserve(images.size());
    for (const auto& [label, mult] : images) labels.push_back(label);
    return extremes_of(labels, options.order);
}

}  // namespace howe
