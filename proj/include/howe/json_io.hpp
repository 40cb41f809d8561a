#pragma once

// JSON and plain-text renderings of the library's values. Partitions are JSON
// integer arrays, bipartitions two-element arrays of arrays: [[2,1],[1]].

#include <string>

#include "json.hpp"

#include "howe/bn_characters.hpp"
#include "howe/howe_unipotent.hpp"
#include "howe/lusztig_reduction.hpp"
#include "howe/partition.hpp"

namespace howe {

using json = nlohmann::json;

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const Bipartition& b);
void from_json(const json& j, Bipartition& b);
void to_json(json& j, const BnClassLabel& c);
void to_json(json& j, const SeriesLabel& s);
void from_json(const json& j, SeriesLabel& s);
void to_json(json& j, const MultiplicityTable& t);
void to_json(json& j, const CharacterTable& t);
void to_json(json& j, const EigenvalueOrbit& o);
void to_json(json& j, const SemisimpleDescriptor& s);
/// Reads {q, modulus, orbits:[{exponents, multiplicity}]} and validates it.
void from_json(const json& j, SemisimpleDescriptor& s);
void to_json(json& j, const CentralizerFactor& f);
void to_json(json& j, const CentralizerDecomposition& d);
void to_json(json& j, const GlCuspidal& g);
void to_json(json& j, const CuspidalBase& b);
void to_json(json& j, const CuspidalSupport& s);
void to_json(json& j, const CuspidalPair& p);
void to_json(json& j, const FullDecomposition& d);

json images_json(const Images& images);
json extremes_json(const Extremes& extremes);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

/// Aligned text matrix: one row per row label, one column per column label,
/// zero entries printed as '.'.
std::string format_table_text(const MultiplicityTable& t);

}  // namespace howe
