#include "howe/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace howe {

void to_json(json& j, const Partition& p) { j = std::vector<int>(p.parts().begin(), p.parts().end()); }

void from_json(const json& j, Partition& p) {
    if (!j.is_array()) throw ValidationError("a partition is a JSON array of integers");
    p = Partition(j.get<std::vector<int>>());
}

void to_json(json& j, const Bipartition& b) { j = json::array({b.first, b.second}); }

void from_json(const json& j, Bipartition& b) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("a bipartition is a two-element JSON array");
    b = {j[0].get<Partition>(), j[1].get<Partition>()};
}

void to_json(json& j, const BnClassLabel& c) { j = json::array({c.positive_cycles, c.negative_cycles}); }

void to_json(json& j, const SeriesLabel& s) { j = {{"k", s.k}, {"label", s.char_label}}; }

void from_json(const json& j, SeriesLabel& s) {
    s.k = j.at("k").get<int>();
    s.char_label = j.at("label").get<Bipartition>();
}

void to_json(json& j, const MultiplicityTable& t) {
    json entries = json::array();
    for (const auto& [key, mult] : t.entries) entries.push_back({key.first, key.second, mult});
    j = {{"metadata",
          {{"m", t.m},
           {"m_prime", t.m_prime},
           {"k", t.k},
           {"k_prime", t.k_prime},
           {"r", t.r},
           {"r_prime", t.r_prime},
           {"formula", std::string(to_string(t.formula))},
           {"sgn", std::string(to_string(t.sgn))}}},
         {"row_labels", t.row_labels},
         {"col_labels", t.col_labels},
         {"entries", entries}};
}

void to_json(json& j, const CharacterTable& t) {
    const auto& classes = t.classes();
    json values = json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < classes.size(); ++c) row.push_back(t.value(r, c));
        values.push_back(row);
    }
    j = {{"rank", t.rank()},
         {"classes", classes.labels},
         {"class_sizes", classes.sizes},
         {"labels", t.labels()},
         {"values", values}};
}

void to_json(json& j, const EigenvalueOrbit& o) {
    j = {{"exponents", o.exponents}, {"multiplicity", o.multiplicity}};
}

void to_json(json& j, const SemisimpleDescriptor& s) {
    j = {{"q", s.q}, {"modulus", s.modulus}, {"orbits", s.orbits}};
}

void from_json(const json& j, SemisimpleDescriptor& s) {
    s.q = j.at("q").get<int>();
    s.modulus = j.at("modulus").get<std::int64_t>();
    s.orbits.clear();
    for (const auto& o : j.at("orbits")) {
        const auto exponents = o.at("exponents").get<std::vector<std::int64_t>>();
        if (exponents.empty()) throw ValidationError("orbit without exponents");
        auto orbit = orbit_closure_mod(s.q, s.modulus, exponents.front(), o.at("multiplicity").get<int>());
        auto sorted = exponents;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != orbit.exponents) throw ValidationError("orbit exponents are not a Frobenius orbit");
        s.orbits.push_back(std::move(orbit));
    }
    s.validate();
}

void to_json(json& j, const CentralizerFactor& f) {
    j = {{"kind", std::string(to_string(f.kind))}, {"size", f.size}, {"field_degree", f.field_degree}};
}

void to_json(json& j, const CentralizerDecomposition& d) {
    const auto& b = d.unipotent_block;
    j = {{"factors", d.factors},
         {"unipotent_block", {{"dimension", b.dimension()}, {"dim_parity", b.dim_parity}, {"witt_index", b.witt_index}}},
         {"l", d.reduction_l}};
}

void to_json(json& j, const GlCuspidal& g) { j = {{"size", g.size}, {"label", g.label}}; }

void to_json(json& j, const CuspidalBase& b) {
    j = {{"label", b.label}, {"witt_index", b.witt_index}};
    if (b.k) j["k"] = *b.k;
}

void to_json(json& j, const CuspidalSupport& s) { j = {{"gl_part", s.gl_part}, {"base", s.base}}; }

void to_json(json& j, const CuspidalPair& p) {
    j = {{"gl_part", p.gl_part}, {"torus_rank", p.torus_rank()}, {"k", p.base_k}};
    if (p.semisimple) j["semisimple"] = *p.semisimple;
}

void to_json(json& j, const FullDecomposition& d) {
    j = {{"hash_descriptor", d.hash_factors},
         {"pairing", d.pairing},
         {"l", d.reduction_l},
         {"l_prime", d.reduction_l_prime},
         {"unipotent_table", d.unipotent_table}};
}

json images_json(const Images& images) {
    json list = json::array();
    for (const auto& [label, mult] : images) list.push_back({{"image", label}, {"multiplicity", mult}});
    return {{"images", list}, {"zero", images.empty()}};
}

json extremes_json(const Extremes& extremes) { return {{"min", extremes.min}, {"max", extremes.max}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_table_text(const MultiplicityTable& t) {
    std::ostringstream os;
    os << "Omega m=" << t.m << " m'=" << t.m_prime << " k=" << t.k << " k'=" << t.k_prime << " r=" << t.r
       << " r'=" << t.r_prime << " formula=" << to_string(t.formula) << " sgn=" << to_string(t.sgn) << '\n';
    if (t.col_labels.empty()) {
        os << "zero (below first occurrence)\n";
        return os.str();
    }
    std::size_t row_width = 0;
    for (const auto& r : t.row_labels) row_width = std::max(row_width, r.to_string().size());
    std::vector<std::size_t> widths;
    for (const auto& c : t.col_labels) widths.push_back(c.to_string().size());
    for (const auto& [key, mult] : t.entries)
        widths[key.second] = std::max(widths[key.second], std::to_string(mult).size());
    auto pad = [&os](const std::string& s, std::size_t w) { os << std::string(w - s.size(), ' ') << s; };
    pad("", row_width);
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
        os << "  ";
        pad(t.col_labels[c].to_string(), widths[c]);
    }
    os << '\n';
    for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
        pad(t.row_labels[r].to_string(), row_width);
        for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
            os << "  ";
            const auto v = t.at(r, c);
            pad(v ? std::to_string(v) : ".", widths[c]);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace howe
